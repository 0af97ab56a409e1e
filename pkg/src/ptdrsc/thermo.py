"""High-temperature thermodynamics of the bound spectrum.

In the high-temperature regime the partition sum over the principal
index is replaced by an integral, giving

    Z(β) = τ·√π·Erfi(x) / (2·√β),        x = (ξ/τ)·√β,

from which internal energy, specific heat, free energy and entropy all
follow by differentiating ln Z.  Every derived quantity is expressed
through the ratio φ(x) = x/D(x) with D the Dawson integral, which keeps
the formulas in ratio form and free of the e^{x²} growth of Erfi; the
log-partition function itself is offered separately for the regime
where Z overflows a double.
"""

import math
from dataclasses import dataclass, field

from .errors import DomainError, Overflow
from .special import dawson, erfi

__all__ = [
    "ThermoState",
    "partition_function",
    "log_partition_function",
    "partition_sum",
    "mean_energy",
    "specific_heat",
    "free_energy",
    "entropy",
]

_SQRT_PI = math.sqrt(math.pi)
# below this |x| the cancellation in 1 - x/D(x) ~ -(2/3)x² is handled by series
_SERIES_X = 1e-2
# above this the identity ln Erfi(x) = x² + ln(2 D(x)/√π) is used instead of erfi
_LOGSPACE_X = 25.0


@dataclass(frozen=True)
class ThermoState:
    """Inverse temperature β and the spectral parameters (ξ, τ).

    ``tau`` sets the density of the continuum approximation of the level
    index and ``xi`` its offset; ``boltzmann_k`` only rescales entropy
    and specific heat.
    """

    beta: float
    xi: float
    tau: float
    boltzmann_k: float = field(default=1.0)

    def __post_init__(self):
        if not (self.beta > 0.0 and math.isfinite(self.beta)):
            raise DomainError(f"beta must be positive and finite, got {self.beta!r}")
        if not (self.tau > 0.0 and math.isfinite(self.tau)):
            raise DomainError(f"tau must be positive and finite, got {self.tau!r}")
        if not math.isfinite(self.xi):
            raise DomainError(f"xi must be finite, got {self.xi!r}")
        if not (self.boltzmann_k > 0.0 and math.isfinite(self.boltzmann_k)):
            raise DomainError(
                f"boltzmann_k must be positive and finite, got {self.boltzmann_k!r}"
            )

    @property
    def x(self) -> float:
        """Scaling variable x = (ξ/τ)·√β all quantities depend on."""
        return (self.xi / self.tau) * math.sqrt(self.beta)


def partition_function(state: ThermoState) -> float:
    """Continuum partition function Z = τ√π·Erfi(x)/(2√β).

    Raises Overflow (from erfi) once x exceeds ~26.7; use
    log_partition_function in that regime.
    """
    x = state.x
    try:
        e = erfi(x)
    except Overflow as exc:
        raise Overflow(
            f"partition function overflows double range at x = {x!r}; "
            "use log_partition_function"
        ) from exc
    return state.tau * _SQRT_PI * e / (2.0 * math.sqrt(state.beta))


def log_partition_function(state: ThermoState) -> float:
    """ln Z, evaluated in log space so large x never overflows.

    For x > 25 uses ln Erfi(x) = x² + ln(2·D(x)/√π); requires Z > 0,
    i.e. x > 0 (DomainError otherwise, since ln of a non-positive
    partition function is meaningless).
    """
    x = state.x
    if x <= 0.0:
        raise DomainError(
            f"partition function is non-positive at x = {x!r}; ln Z undefined"
        )
    prefactor = math.log(state.tau * _SQRT_PI / (2.0 * math.sqrt(state.beta)))
    if x > _LOGSPACE_X:
        ln_erfi = x * x + math.log(2.0 * dawson(x) / _SQRT_PI)
    else:
        ln_erfi = math.log(erfi(x))
    return prefactor + ln_erfi


def partition_sum(state: ThermoState, n_max: int) -> float:
    """Direct spectral sum Σ_{n=0}^{n_max} exp(((n − ξ)√β/τ)²).

    The discrete counterpart of partition_function; agreement of the two
    is a consistency check on the continuum approximation.  Raises
    Overflow when any term exceeds double range.
    """
    if n_max != int(n_max) or n_max < 0:
        raise DomainError(f"n_max must be a non-negative integer, got {n_max!r}")
    sb = math.sqrt(state.beta) / state.tau
    total = 0.0
    for n in range(int(n_max) + 1):
        arg = (n - state.xi) * sb
        expo = arg * arg
        if expo > 709.0:
            raise Overflow(
                f"partition sum term n = {n} has exponent {expo!r} > 709; "
                "sum overflows double range"
            )
        total += math.exp(expo)
    return total


def _phi(x: float) -> float:
    """φ(x) = x / D(x); even, φ(0) = 1, φ ~ 2x² for large |x|."""
    if x == 0.0:
        return 1.0
    return x / dawson(x)


def _one_minus_phi(x: float) -> float:
    # 1 - φ has total cancellation at x = 0; series keeps relative accuracy
    if abs(x) < _SERIES_X:
        x2 = x * x
        return -x2 * (2.0 / 3.0 + x2 * (8.0 / 45.0 + x2 * (16.0 / 945.0)))
    return 1.0 - _phi(x)


def mean_energy(state: ThermoState) -> float:
    """Internal energy U = −∂_β ln Z = (1/2β)·(1 − x/D(x)).

    Tends to −ξ²/(3τ²) as β → 0 and to the ground level as β grows.
    Written through the Dawson ratio, so it is safe for arbitrarily
    large x even when Z itself overflows.
    """
    return _one_minus_phi(state.x) / (2.0 * state.beta)


def specific_heat(state: ThermoState) -> float:
    """Heat capacity C = −k β² ∂U/∂β = k[(1 − φ)/2 + x φ'(x)/4].

    Vanishes ∝ β² as β → 0 (the leading (4/45)x⁴ term of the series)
    and approaches k from above as x → ∞.
    """
    x = state.x
    if abs(x) < _SERIES_X:
        x2 = x * x
        cv = x2 * x2 * (4.0 / 45.0 + x2 * (16.0 / 945.0))
    else:
        d = dawson(x)
        phi = x / d
        # φ' = (D - x·D')/D² with D' = 1 - 2xD
        phi_prime = (d - x + 2.0 * x * x * d) / (d * d)
        cv = 0.5 * (1.0 - phi) + 0.25 * x * phi_prime
    return state.boltzmann_k * cv


def free_energy(state: ThermoState) -> float:
    """Helmholtz free energy F = −(1/β)·ln Z (log-space evaluation)."""
    return -log_partition_function(state) / state.beta


def entropy(state: ThermoState) -> float:
    """Entropy S = k(ln Z + βU); satisfies F = U − TS identically."""
    return state.boltzmann_k * (
        log_partition_function(state) + state.beta * mean_energy(state)
    )

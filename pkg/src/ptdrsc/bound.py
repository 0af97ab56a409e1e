"""Bound-state energies from the Gamma-pole condition.

The poles of Γ(ℓ + 1/2 − iη) continued below threshold give the
quantization condition

    (2n_r + 1 + 2ℓ)·√(M² − E²) = 2(E + M)·δ,

solved in closed form by E = M(Λ² − 4δ²)/(Λ² + 4δ²) with
Λ = 2n_r + 1 + 2ℓ.  A plain bisection solver is shipped alongside the
closed form so the two can be confronted in tests.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, NoRoot

__all__ = [
    "BoundLevel",
    "energy_equation_residual",
    "bound_energy",
    "bound_energy_bisection",
    "nonrel_energy",
    "bound_level",
]


@dataclass(frozen=True)
class BoundLevel:
    n_r: int
    ell: int
    energy: float
    nonrel_energy: float


def _check_quantum_numbers(n_r, ell):
    if n_r != int(n_r) or n_r < 0:
        raise DomainError(f"n_r must be a non-negative integer, got {n_r!r}")
    if ell != int(ell) or ell < 0:
        raise DomainError(f"ell must be a non-negative integer, got {ell!r}")
    return int(n_r), int(ell)


def _check_mass_coupling(M, coupling_delta):
    if not (M > 0.0 and math.isfinite(M)):
        raise DomainError(f"mass must be positive and finite, got {M!r}")
    if not (coupling_delta > 0.0 and math.isfinite(coupling_delta)):
        raise DomainError(f"coupling_delta must be positive, got {coupling_delta!r}")


def energy_equation_residual(E: float, M: float, coupling_delta: float,
                             n_r: int, ell: int) -> float:
    """Residual (2n_r+1+2ℓ)√(M²−E²) − 2(E+M)δ of the pole condition.

    Vanishes exactly at a bound level.  Defined for |E| < M only.
    """
    n_r, ell = _check_quantum_numbers(n_r, ell)
    _check_mass_coupling(M, coupling_delta)
    E = float(E)
    if not abs(E) < M:
        raise DomainError(f"bound energies satisfy |E| < M, got E = {E!r}")
    lam = 2 * n_r + 1 + 2 * ell
    return lam * math.sqrt(M * M - E * E) - 2.0 * (E + M) * coupling_delta


def bound_energy(M: float, coupling_delta: float, n_r: int, ell: int) -> float:
    """Closed-form level E = M(Λ² − 4δ²)/(Λ² + 4δ²), Λ = 2n_r + 1 + 2ℓ."""
    n_r, ell = _check_quantum_numbers(n_r, ell)
    _check_mass_coupling(M, coupling_delta)
    lam = 2 * n_r + 1 + 2 * ell
    d2 = 4.0 * coupling_delta * coupling_delta
    return M * (lam * lam - d2) / (lam * lam + d2)


def bound_energy_bisection(M: float, coupling_delta: float, n_r: int, ell: int,
                           iterations: int = 200) -> float:
    """Root of the pole-condition residual by bisection on (−M, M).

    The residual touches zero at E = −M, rises to a positive maximum at
    E = −2δM/√(Λ²+4δ²), and decreases through the physical root to a
    negative value at E = M; bisecting to the right of the maximum
    brackets exactly one sign change.
    """
    n_r, ell = _check_quantum_numbers(n_r, ell)
    _check_mass_coupling(M, coupling_delta)
    lam = 2 * n_r + 1 + 2 * ell
    lo = -2.0 * coupling_delta * M / math.sqrt(lam * lam + 4.0 * coupling_delta ** 2)
    hi = M * (1.0 - 1e-13)

    def f(E):
        return lam * math.sqrt(M * M - E * E) - 2.0 * (E + M) * coupling_delta

    flo, fhi = f(lo), f(hi)
    if not (flo > 0.0 > fhi):
        raise NoRoot(
            f"residual does not change sign on [{lo!r}, {hi!r}] "
            f"(f(lo) = {flo!r}, f(hi) = {fhi!r}); coupling too weak to bracket"
        )
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def nonrel_energy(mu: float, coupling_delta: float, n: int, ell: int) -> float:
    """Nonrelativistic limit E_nℓ = −8μδ²/(2n + 2ℓ + 1)².

    This is what expanding the closed form with E + M ≈ 2μ actually
    yields (the Coulomb-like spectrum in the half-odd-integer principal
    index Λ = 2n + 2ℓ + 1).
    """
    n, ell = _check_quantum_numbers(n, ell)
    if not (mu > 0.0 and math.isfinite(mu)):
        raise DomainError(f"mu must be positive and finite, got {mu!r}")
    lam = 2 * n + 1 + 2 * ell
    return -8.0 * mu * coupling_delta * coupling_delta / (lam * lam)


def bound_level(M: float, coupling_delta: float, n_r: int, ell: int) -> BoundLevel:
    """Assemble a BoundLevel with both the exact and limiting energies."""
    return BoundLevel(
        n_r=int(n_r),
        ell=int(ell),
        energy=bound_energy(M, coupling_delta, n_r, ell),
        nonrel_energy=nonrel_energy(M, coupling_delta, n_r, ell),
    )

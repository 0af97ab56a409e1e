"""Continuum radial solutions for the Coulomb-dominated radial equation.

The radial problem g″ + [k² + 2(M+E)δ/r − (ℓ² − 1/4)/r²] g = 0 admits the
exact regular solution

    g_{kℓ}(r) = A_{kℓ} (kr)^(ℓ+1/2) e^(ikr) ₁F₁(ℓ + 1/2 − iη; 2ℓ + 1; −2ikr),

real despite its complex building blocks.  On the k/2π scale the
asymptotic amplitude is exactly 2 and the phase shift is the argument of
Γ(ℓ + 1/2 − iη) with η = (M+E)δ/k.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, Overflow, RealnessViolation
from .special import hyp1f1, log_gamma

__all__ = [
    "RelativisticContext",
    "PartialWave",
    "make_context",
    "phase_shift",
    "short_range_phase_shift",
    "normalization_constant",
    "log_normalization_constant",
    "partial_wave",
    "radial_wavefunction",
    "radial_wavefunction_with_derivative",
    "scattering_amplitude",
    "coulomb_cross_section",
]

_TWO_PI = 2.0 * math.pi
_REALNESS_TOL = 1e-8
_SMOOTHINGS = ("none", "abel", "cesaro")


@dataclass(frozen=True)
class RelativisticContext:
    """Scattering kinematics in natural units (ħ = c = 1).

    Attributes
    ----------
    mass : float
        Particle mass M > 0.
    energy : float
        Total energy E > M (continuum regime).
    coupling_delta : float
        Coulomb strength δ > 0 of the potential.
    wave_number : float
        k = √(E² − M²).
    sommerfeld : float
        η = (M + E)·δ/k, the strength parameter of the phase shifts.
    """

    mass: float
    energy: float
    coupling_delta: float
    wave_number: float
    sommerfeld: float


@dataclass(frozen=True)
class PartialWave:
    """One angular channel: phase shifts and normalization constant."""

    ell: int
    phase_shift: float
    short_range_shift: float
    norm_constant: float


def make_context(M: float, E: float, coupling_delta: float) -> RelativisticContext:
    """Build a scattering context, validating the continuum condition E > M.

    Raises
    ------
    DomainError
        If E ≤ M (bound regime — use the bound-state module), or if the
        mass or coupling is not strictly positive.
    """
    M = float(M)
    E = float(E)
    coupling_delta = float(coupling_delta)
    if not (M > 0.0 and math.isfinite(M)):
        raise DomainError(f"mass must be positive and finite, got {M!r}")
    if not (coupling_delta > 0.0 and math.isfinite(coupling_delta)):
        raise DomainError(f"coupling_delta must be positive, got {coupling_delta!r}")
    if not (E > M):
        raise DomainError(
            f"scattering requires energy > mass (got E = {E!r}, M = {M!r}); "
            "energies at or below the mass belong to the bound-state solver"
        )
    k = math.sqrt(E * E - M * M)
    eta = (M + E) * coupling_delta / k
    return RelativisticContext(M, E, coupling_delta, k, eta)


def _check_ell(ell: int) -> int:
    if ell != int(ell) or ell < 0:
        raise DomainError(f"ell must be a non-negative integer, got {ell!r}")
    return int(ell)


def phase_shift(ctx: RelativisticContext, ell: int) -> float:
    """Coulomb-like phase shift δ_ℓ = arg Γ(ℓ + 1/2 − iη), in (−π, π]."""
    ell = _check_ell(ell)
    raw = log_gamma(complex(ell + 0.5, -ctx.sommerfeld)).imag
    wrapped = (raw + math.pi) % _TWO_PI - math.pi
    if wrapped == -math.pi:
        wrapped = math.pi
    return wrapped


def short_range_phase_shift(ctx: RelativisticContext, ell: int,
                            ell_prime: Optional[int] = None) -> float:
    """Short-range shift δ′_ℓ = δ_ℓ + π(ℓ′ − ℓ + 1/2)/2, unreduced.

    ``ell_prime`` is the orbital index of the comparison-free wave and
    defaults to ``ell`` itself.
    """
    ell = _check_ell(ell)
    ell_prime = ell if ell_prime is None else _check_ell(ell_prime)
    return phase_shift(ctx, ell) + math.pi * (ell_prime - ell + 0.5) / 2.0


def log_normalization_constant(ctx: RelativisticContext, ell: int) -> float:
    """ln A_{kℓ}; always representable, offered for large-η work."""
    ell = _check_ell(ell)
    eta = ctx.sommerfeld
    return (
        (ell + 0.5) * math.log(2.0)
        + log_gamma(complex(ell + 0.5, -eta)).real
        + 0.5 * math.pi * eta
        - log_gamma(complex(2 * ell + 1)).real
    )


def normalization_constant(ctx: RelativisticContext, ell: int) -> float:
    """k/2π-scale normalization A_{kℓ} = 2^(ℓ+1/2)|Γ(ℓ+1/2−iη)|e^(πη/2)/Γ(2ℓ+1).

    Raises
    ------
    Overflow
        When the exponential factor exceeds double range; callers needing
        that regime should use :func:`log_normalization_constant`.
    """
    ln_a = log_normalization_constant(ctx, ell)
    if ln_a > 709.0:
        raise Overflow(
            f"normalization constant exp({ln_a:.1f}) overflows; "
            "use log_normalization_constant instead"
        )
    return math.exp(ln_a)


def partial_wave(ctx: RelativisticContext, ell: int, ell_prime: int | None = None) -> PartialWave:
    """Assemble the PartialWave record for one channel (ℓ′ defaults to ℓ)."""
    ell = _check_ell(ell)
    lp = ell if ell_prime is None else _check_ell(ell_prime)
    return PartialWave(
        ell=ell,
        phase_shift=phase_shift(ctx, ell),
        short_range_shift=short_range_phase_shift(ctx, ell, lp),
        norm_constant=normalization_constant(ctx, ell),
    )


def _g_complex(ctx: RelativisticContext, ell: int, r: float) -> complex:
    k = ctx.wave_number
    eta = ctx.sommerfeld
    a = complex(ell + 0.5, -eta)
    b = complex(2 * ell + 1)
    z = complex(0.0, -2.0 * k * r)
    ln_pre = log_normalization_constant(ctx, ell) + (ell + 0.5) * math.log(k * r)
    return cmath.exp(complex(ln_pre, k * r)) * hyp1f1(a, b, z)


def radial_wavefunction(ctx: RelativisticContext, ell: int, r: float) -> float:
    """Normalized continuum radial function g_{kℓ}(r) on the k/2π scale.

    The analytic combination is exactly real; the implementation checks
    that the residual imaginary part is below 1e-8 of the local scale
    before discarding it.

    Raises
    ------
    DomainError
        If r ≤ 0.
    RealnessViolation
        If the imaginary residue is too large (a special-function bug).
    """
    ell = _check_ell(ell)
    r = float(r)
    if not (r > 0.0 and math.isfinite(r)):
        raise DomainError(f"r must be positive and finite, got {r!r}")
    val = _g_complex(ctx, ell, r)
    # The normalized envelope is O(2); a pure ratio test would trip on
    # noise at the zeros of g, so the scale is floored at unity.
    scale = max(abs(val), 1.0)
    if abs(val.imag) > _REALNESS_TOL * scale:
        raise RealnessViolation(
            f"radial_wavefunction lost realness at r={r!r}, ell={ell}: "
            f"imag/scale = {abs(val.imag) / scale:.3e}"
        )
    return val.real


def radial_wavefunction_with_derivative(
    ctx: RelativisticContext, ell: int, r: float
) -> tuple[float, float]:
    """g_{kℓ}(r) together with dg/dr (analytic, via the ₁F₁ derivative)."""
    ell = _check_ell(ell)
    r = float(r)
    if not (r > 0.0 and math.isfinite(r)):
        raise DomainError(f"r must be positive and finite, got {r!r}")
    k = ctx.wave_number
    eta = ctx.sommerfeld
    a = complex(ell + 0.5, -eta)
    b = complex(2 * ell + 1)
    z = complex(0.0, -2.0 * k * r)
    F = hyp1f1(a, b, z)
    Fp = (a / b) * hyp1f1(a + 1, b + 1, z)
    ln_pre = log_normalization_constant(ctx, ell) + (ell + 0.5) * math.log(k * r)
    pre = cmath.exp(complex(ln_pre, k * r))
    g = pre * F
    gp = pre * (((ell + 0.5) / r + 1j * k) * F - 2j * k * Fp)
    scale = max(abs(g), 1.0)
    if abs(g.imag) > _REALNESS_TOL * scale:
        raise RealnessViolation(
            f"radial_wavefunction lost realness at r={r!r}, ell={ell}: "
            f"imag/scale = {abs(g.imag) / scale:.3e}"
        )
    return g.real, gp.real


def scattering_amplitude(
    phase_shifts,
    theta: float,
    k: float,
    smoothing: str = "abel",
) -> complex:
    """Partial-wave amplitude f(θ) from channel phase shifts.

    Parameters
    ----------
    phase_shifts : sequence of float
        δ_|m| for |m| = 0 … L; the sum runs over the symmetric integer
        index m ∈ [−L, L] with δ_m = δ_{|m|}.
    theta : float
        Scattering angle in (0, π].
    k : float
        Wave number (> 0), setting the 1/√(2πk) scale.
    smoothing : {"none", "abel", "cesaro"}
        Summation acceleration for the conditionally convergent sum.
        Abel damping uses e^(−ε|m|) with ε = 10/L.

    Returns
    -------
    complex
        f(θ) = −(i/√(2πk)) Σ_m [e^(2iδ_m) − 1] e^(imθ) · w_m.

    Raises
    ------
    DomainError
        At the forward singularity θ = 0 (or any θ outside (0, π]).
    """
    theta = float(theta)
    k = float(k)
    if not (0.0 < theta <= math.pi):
        raise DomainError(
            f"theta must lie in (0, pi]; the forward direction is singular (got {theta!r})"
        )
    if not (k > 0.0 and math.isfinite(k)):
        raise DomainError(f"wave number must be positive, got {k!r}")
    if smoothing not in _SMOOTHINGS:
        raise DomainError(f"smoothing must be one of {_SMOOTHINGS}, got {smoothing!r}")
    deltas = np.asarray(phase_shifts, dtype=float)
    if deltas.ndim != 1 or deltas.size == 0:
        raise DomainError("phase_shifts must be a non-empty 1-d sequence")
    L = deltas.size - 1
    m = np.arange(-L, L + 1)
    s = np.exp(2j * deltas[np.abs(m)]) - 1.0
    if smoothing == "abel" and L > 0:
        w = np.exp(-(10.0 / L) * np.abs(m))
    elif smoothing == "cesaro" and L > 0:
        w = 1.0 - np.abs(m) / (L + 1.0)
    else:
        w = np.ones_like(m, dtype=float)
    total = np.sum(s * w * np.exp(1j * m * theta))
    return complex(-1j / math.sqrt(_TWO_PI * k) * total)


def coulomb_cross_section(alpha: float, k: float, theta: float) -> float:
    """Closed-form point-Coulomb differential cross section.

    σ(θ) = α·tanh(πα) / (2k sin²(θ/2)), the analytic limit the
    partial-wave sum reproduces when fed phases arg Γ(|m|+1/2−iα).
    """
    alpha = float(alpha)
    k = float(k)
    theta = float(theta)
    if not (0.0 < theta <= math.pi):
        raise DomainError(f"theta must lie in (0, pi], got {theta!r}")
    if not (k > 0.0 and math.isfinite(k)):
        raise DomainError(f"wave number must be positive, got {k!r}")
    s = math.sin(0.5 * theta)
    return alpha * math.tanh(math.pi * alpha) / (2.0 * k * s * s)

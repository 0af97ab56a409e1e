"""Angular Poschl-Teller eigenproblem and the ring-shaped couplings.

Separating the double ring-shaped interaction produces, in both the
polar and azimuthal coordinates, a trigonometric Poschl-Teller well

    -1/2 H'' + (zeta^2/2) [chi(chi-1)/sin^2(zeta q)
                           + lam(lam-1)/cos^2(zeta q)] H = E H

on q in [0, pi/(2 zeta)], with eigenvalues E = (zeta^2/2)(chi+lam+2n_r)^2
and terminating-Gauss-series eigenfunctions.  This module carries the
strength-to-parameter branch chi(chi-1) = c, the normalized solutions,
the degenerate chi = 0 family, and the coupling maps tying the well
strengths back to the potential constants.
"""

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Optional

from scipy.integrate import quad

from .errors import ComplexBranch, DomainError
from .special import hyp2f1_terminating

__all__ = [
    "AngularSolution",
    "pt_parameter_from_strength",
    "polar_eigenvalue",
    "polar_solution",
    "polar_eigenfunction",
    "degenerate_eigenvalue",
    "degenerate_solution",
    "degenerate_eigenfunction",
    "map_polar",
    "map_azimuthal",
    "azimuthal_m_squared",
]

_BRANCH_TOL = 1e-15


@dataclass(frozen=True)
class AngularSolution:
    """One normalized level of the angular well.

    ``evaluator`` maps q in [0, pi/(2 zeta)] to the eigenfunction value;
    the quadrature norm is folded in at construction time, so instances
    are immutable and shareable.
    """

    chi: float
    lam: float
    zeta: float
    n_r: int
    eigenvalue: float
    evaluator: Callable[[float], float]


def pt_parameter_from_strength(c: float) -> float:
    """Invert chi(chi - 1) = c on the physical branch chi >= 1/2.

    Raises ComplexBranch for c < -1/4 (complex roots); warns for
    -1/4 <= c < 0, where chi lands in [1/2, 1) and the associated
    eigenfunction has a divergent derivative at the origin.
    """
    c = float(c)
    if not math.isfinite(c):
        raise DomainError(f"strength must be finite, got {c!r}")
    disc = 1.0 + 4.0 * c
    if disc < -_BRANCH_TOL:
        raise ComplexBranch(
            f"strength c = {c!r} < -1/4 puts chi(chi-1) = c on the complex branch"
        )
    chi = 0.5 * (1.0 + math.sqrt(max(disc, 0.0)))
    if chi < 1.0:
        warnings.warn(
            f"chi = {chi!r} < 1: eigenfunction derivative is singular at q = 0",
            RuntimeWarning,
            stacklevel=2,
        )
    return chi


def _check_well(chi, lam, zeta, n_r):
    if not (chi >= 0.5 and math.isfinite(chi)):
        raise DomainError(f"chi must be >= 1/2, got {chi!r}")
    if not (lam >= 0.5 and math.isfinite(lam)):
        raise DomainError(f"lam must be >= 1/2, got {lam!r}")
    if not (zeta > 0.0 and math.isfinite(zeta)):
        raise DomainError(f"zeta must be positive, got {zeta!r}")
    if n_r != int(n_r) or n_r < 0:
        raise DomainError(f"n_r must be a non-negative integer, got {n_r!r}")
    if chi < 1.0 or lam < 1.0:
        warnings.warn(
            f"well parameters (chi, lam) = ({chi!r}, {lam!r}) sit below the "
            "regular branch chi, lam >= 1",
            RuntimeWarning,
            stacklevel=3,
        )
    return float(chi), float(lam), float(zeta), int(n_r)


def polar_eigenvalue(chi: float, lam: float, n_r: int, zeta: float = 1.0) -> float:
    """E_{n_r} = (zeta^2/2)(chi + lam + 2 n_r)^2."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        chi, lam, zeta, n_r = _check_well(chi, lam, zeta, n_r)
    s = chi + lam + 2.0 * n_r
    return 0.5 * zeta * zeta * s * s


def _q_domain_check(q: float, zeta: float) -> float:
    upper = math.pi / (2.0 * zeta)
    if not (-1e-12 * upper <= q <= upper * (1.0 + 1e-12)):
        raise DomainError(f"q = {q!r} outside the well domain [0, {upper!r}]")
    return min(max(q, 0.0), upper)


def _raw_polar(q, chi, lam, n_r, zeta):
    s = math.sin(zeta * q)
    c = math.cos(zeta * q)
    f = hyp2f1_terminating(n_r, chi + lam + n_r, chi + 0.5, s * s)
    return (s ** chi) * (c ** lam) * f


def polar_solution(chi: float, lam: float, n_r: int,
                   zeta: float = 1.0) -> AngularSolution:
    """Quadrature-normalized bound solution of the full (chi, lam) well."""
    chi, lam, zeta, n_r = _check_well(chi, lam, zeta, n_r)
    upper = math.pi / (2.0 * zeta)
    norm2, _ = quad(lambda q: _raw_polar(q, chi, lam, n_r, zeta) ** 2,
                    0.0, upper, epsabs=0.0, epsrel=1e-12, limit=200)
    if not (norm2 > 0.0 and math.isfinite(norm2)):
        raise DomainError(f"eigenfunction norm integral came out {norm2!r}")
    amp = 1.0 / math.sqrt(norm2)

    def evaluator(q: float) -> float:
        return amp * _raw_polar(_q_domain_check(q, zeta), chi, lam, n_r, zeta)

    return AngularSolution(chi=chi, lam=lam, zeta=zeta, n_r=n_r,
                           eigenvalue=polar_eigenvalue(chi, lam, n_r, zeta),
                           evaluator=evaluator)


def polar_eigenfunction(q: float, chi: float, lam: float, n_r: int,
                        zeta: float = 1.0) -> float:
    """Value at q of the normalized (chi, lam) eigenfunction."""
    return polar_solution(chi, lam, n_r, zeta).evaluator(q)


def degenerate_eigenvalue(lam: float, n_r: int, zeta: float = 1.0) -> float:
    """Level 2 zeta^2 (lam/2 + n_r)^2 - zeta^2/2 of the chi = 0 family.

    Quoted relative to the same reference as the full well; the
    Schroedinger operator -1/2 H'' + (zeta^2/2) lam(lam-1)/cos^2 has
    eigenvalue E + zeta^2/2 for the value E returned here.
    """
    if not (lam >= 0.5 and math.isfinite(lam)):
        raise DomainError(f"lam must be >= 1/2, got {lam!r}")
    if not (zeta > 0.0 and math.isfinite(zeta)):
        raise DomainError(f"zeta must be positive, got {zeta!r}")
    if n_r != int(n_r) or n_r < 0:
        raise DomainError(f"n_r must be a non-negative integer, got {n_r!r}")
    s = 0.5 * lam + n_r
    return 2.0 * zeta * zeta * s * s - 0.5 * zeta * zeta


def _raw_degenerate(q, lam, n_r, zeta):
    s = math.sin(zeta * q)
    c = math.cos(zeta * q)
    f = hyp2f1_terminating(n_r, lam + n_r, 0.5, s * s)
    return (c ** lam) * f


def degenerate_solution(lam: float, n_r: int, zeta: float = 1.0) -> AngularSolution:
    """Normalized chi = 0 solution; finite (nonzero) at q = 0."""
    degenerate_eigenvalue(lam, n_r, zeta)  # validates
    lam, zeta, n_r = float(lam), float(zeta), int(n_r)
    upper = math.pi / (2.0 * zeta)
    norm2, _ = quad(lambda q: _raw_degenerate(q, lam, n_r, zeta) ** 2,
                    0.0, upper, epsabs=0.0, epsrel=1e-12, limit=200)
    if not (norm2 > 0.0 and math.isfinite(norm2)):
        raise DomainError(f"eigenfunction norm integral came out {norm2!r}")
    amp = 1.0 / math.sqrt(norm2)

    def evaluator(q: float) -> float:
        return amp * _raw_degenerate(_q_domain_check(q, zeta), lam, n_r, zeta)

    return AngularSolution(chi=0.0, lam=lam, zeta=zeta, n_r=n_r,
                           eigenvalue=degenerate_eigenvalue(lam, n_r, zeta),
                           evaluator=evaluator)


def degenerate_eigenfunction(q: float, lam: float, n_r: int,
                             zeta: float = 1.0) -> float:
    return degenerate_solution(lam, n_r, zeta).evaluator(q)


def map_polar(A: float, B: float, m: float, E_plus_M: float) -> tuple:
    """Well parameters (chi, lam) of the polar equation.

    The ring-shaped constants enter through the strengths
    c_chi = 2(E+M)B + m^2 - 1/4 and c_lam = 2(E+M)A(A-1); the branch
    inversion raises ComplexBranch if either strength dips below -1/4.
    """
    for name, v in (("A", A), ("B", B), ("m", m), ("E_plus_M", E_plus_M)):
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v!r}")
    if A <= 0.0:
        raise DomainError(f"A must be positive, got {A!r}")
    if B < 0.0:
        raise DomainError(f"B must be non-negative, got {B!r}")
    if E_plus_M <= 0.0:
        raise DomainError(f"E_plus_M must be positive, got {E_plus_M!r}")
    c_chi = 2.0 * E_plus_M * B + m * m - 0.25
    c_lam = 2.0 * E_plus_M * A * (A - 1.0)
    return pt_parameter_from_strength(c_chi), pt_parameter_from_strength(c_lam)


def map_azimuthal(C: float, D: float, alpha: int, E_plus_M: float) -> tuple:
    """Well parameters (chi, lam) of the azimuthal equation.

    Strengths are 2(E+M) alpha^2 D(D-1) -> chi and
    2(E+M) alpha^2 C(C-1) -> lam, with alpha the integer deformation
    index of the azimuthal angle.
    """
    if alpha != int(alpha) or alpha < 1:
        raise DomainError(f"alpha must be a positive integer, got {alpha!r}")
    for name, v in (("C", C), ("D", D), ("E_plus_M", E_plus_M)):
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v!r}")
    if C <= 0.0 or D <= 0.0:
        raise DomainError(f"C and D must be positive, got ({C!r}, {D!r})")
    if E_plus_M <= 0.0:
        raise DomainError(f"E_plus_M must be positive, got {E_plus_M!r}")
    a2 = float(alpha) * float(alpha)
    c_chi = 2.0 * E_plus_M * a2 * D * (D - 1.0)
    c_lam = 2.0 * E_plus_M * a2 * C * (C - 1.0)
    return pt_parameter_from_strength(c_chi), pt_parameter_from_strength(c_lam)


def azimuthal_m_squared(chi: float, lam: float, n_r: int, alpha: int) -> float:
    """Separation constant m^2 = E_{n_r} + alpha^2/2 fixed by the
    azimuthal eigencondition (zeta = alpha)."""
    if alpha != int(alpha) or alpha < 1:
        raise DomainError(f"alpha must be a positive integer, got {alpha!r}")
    return polar_eigenvalue(chi, lam, n_r, zeta=float(alpha)) + 0.5 * float(alpha) ** 2

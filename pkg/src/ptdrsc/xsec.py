"""Integrated cross sections and the screened-Rutherford model.

Any differential cross section is represented as a plain callable
``dcs(theta) -> dsigma/dOmega`` on (0, pi].  Total and transport cross
sections are adaptive quadratures of it over the sphere; for the
two-parameter screened-Rutherford shape

    dcs(theta) = Phi / (1 - cos(theta) + Gamma)^2

both integrals have closed forms, and the pair (sigma_tot, sigma_tr)
can be inverted back to (Phi, Gamma).
"""

import math
from dataclasses import dataclass
from typing import Callable

from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import DomainError, NonIntegrable, NoRoot

__all__ = [
    "ScreenedRutherford",
    "sigma_total",
    "sigma_transport",
    "transport_ratio",
    "mean_wide_angle_collisions",
    "scatter_probability",
    "forward_probability",
    "backward_probability",
    "screened_rutherford_dcs",
    "screened_sigma_total",
    "screened_sigma_transport",
    "screened_transport_ratio",
    "fit_screened",
]

_EPSREL = 1e-9
# below u = 2/Gamma = 0.01 the ratio uses its alternating series
_RATIO_SERIES_U = 1e-2
# log10 bracket for the ratio inversion
_FIT_LOG_LO = -14.0
_FIT_LOG_HI = 14.0


@dataclass(frozen=True)
class ScreenedRutherford:
    """Strength Phi and screening offset Gamma of the model shape."""

    phi: float
    gamma_screen: float

    def __post_init__(self):
        if not (self.phi > 0.0 and math.isfinite(self.phi)):
            raise DomainError(f"phi must be positive and finite, got {self.phi!r}")
        if not (self.gamma_screen > 0.0 and math.isfinite(self.gamma_screen)):
            raise DomainError(
                f"gamma_screen must be positive and finite, got {self.gamma_screen!r}"
            )


def _sphere_quad(dcs: Callable[[float], float], weight, lo: float, hi: float) -> float:
    """2*pi * integral of dcs(theta)*weight(theta)*sin(theta) over [lo, hi]."""

    def integrand(theta):
        return dcs(theta) * weight(theta) * math.sin(theta)

    try:
        result = quad(integrand, lo, hi, epsabs=0.0, epsrel=_EPSREL,
                      limit=200, full_output=1)
    except (ValueError, OverflowError, ZeroDivisionError) as exc:
        raise NonIntegrable(f"cross-section quadrature failed: {exc}") from exc
    value, abserr = result[0], result[1]
    if len(result) > 3:
        raise NonIntegrable(
            f"cross-section quadrature did not converge: {result[3].strip()}"
        )
    if not math.isfinite(value):
        raise NonIntegrable(f"cross-section quadrature returned {value!r}")
    if abserr > _EPSREL * max(abs(value), 1e-300) * 10.0 and abserr > 1e-13:
        raise NonIntegrable(
            f"cross-section quadrature error estimate {abserr!r} too large "
            f"for value {value!r}"
        )
    return 2.0 * math.pi * value


def sigma_total(dcs: Callable[[float], float]) -> float:
    """Total cross section 2*pi * int_0^pi dcs(theta) sin(theta) dtheta."""
    return _sphere_quad(dcs, lambda theta: 1.0, 0.0, math.pi)


def sigma_transport(dcs: Callable[[float], float]) -> float:
    """Transport cross section, weighted by the momentum-transfer factor
    (1 - cos(theta))."""
    return _sphere_quad(dcs, lambda theta: 1.0 - math.cos(theta), 0.0, math.pi)


def transport_ratio(dcs: Callable[[float], float]) -> float:
    """sigma_transport / sigma_total; lies in (0, 2) for any positive dcs."""
    tot = sigma_total(dcs)
    if tot <= 0.0:
        raise DomainError(f"total cross section {tot!r} is not positive")
    return sigma_transport(dcs) / tot


def mean_wide_angle_collisions(number_density: float, path_length: float,
                               sigma_tr: float) -> float:
    """Expected number of transport-weighted collisions n*R*sigma_tr."""
    for name, v in (("number_density", number_density),
                    ("path_length", path_length), ("sigma_tr", sigma_tr)):
        if not (v >= 0.0 and math.isfinite(v)):
            raise DomainError(f"{name} must be non-negative and finite, got {v!r}")
    return number_density * path_length * sigma_tr


def scatter_probability(dcs: Callable[[float], float], theta: float) -> float:
    """Cumulative probability of scattering into polar angles <= theta.

    The normalizing total cross section is recomputed with the identical
    quadrature call, so scatter_probability(dcs, pi) == 1.0 exactly.
    """
    if not (0.0 <= theta <= math.pi):
        raise DomainError(f"theta must lie in [0, pi], got {theta!r}")
    tot = _sphere_quad(dcs, lambda t: 1.0, 0.0, math.pi)
    if tot <= 0.0:
        raise DomainError(f"total cross section {tot!r} is not positive")
    if theta == 0.0:
        return 0.0
    if theta == math.pi:
        return tot / tot
    return _sphere_quad(dcs, lambda t: 1.0, 0.0, theta) / tot


def forward_probability(dcs: Callable[[float], float]) -> float:
    """Probability of scattering into the forward hemisphere."""
    return scatter_probability(dcs, 0.5 * math.pi)


def backward_probability(dcs: Callable[[float], float]) -> float:
    """Probability of scattering into the backward hemisphere."""
    return scatter_probability(dcs, math.pi) - scatter_probability(dcs, 0.5 * math.pi)


def screened_rutherford_dcs(model: ScreenedRutherford,
                            theta: float) -> float:
    """Model differential cross section Phi/(1 - cos(theta) + Gamma)^2."""
    if not (0.0 <= theta <= math.pi):
        raise DomainError(f"theta must lie in [0, pi], got {theta!r}")
    denom = 1.0 - math.cos(theta) + model.gamma_screen
    return model.phi / (denom * denom)


def screened_sigma_total(model: ScreenedRutherford) -> float:
    """Closed form 4*pi*Phi / (Gamma*(Gamma + 2))."""
    g = model.gamma_screen
    return 4.0 * math.pi * model.phi / (g * (g + 2.0))


def _log_minus_fraction(u: float) -> float:
    """ln(1+u) - u/(1+u), stable at small u where the two terms cancel
    to O(u^2); an alternating series takes over below u = 0.01."""
    if u < _RATIO_SERIES_U:
        # ln(1+u) - u/(1+u) = sum_{k>=2} (-1)^k (k-1) u^k / k
        term = u * u
        total = 0.5 * term
        k = 3
        while k <= 12:
            term *= -u
            total += (k - 1) * term / k
            k += 1
        return total
    return math.log1p(u) - u / (1.0 + u)


def screened_sigma_transport(model: ScreenedRutherford) -> float:
    """Closed form 2*pi*Phi*[ln((Gamma+2)/Gamma) - 2/(Gamma+2)].

    Evaluated through the cancellation-free difference, so it stays
    accurate for arbitrarily strong screening (large Gamma).
    """
    u = 2.0 / model.gamma_screen
    return 2.0 * math.pi * model.phi * _log_minus_fraction(u)


def _ratio_from_u(u: float) -> float:
    """Transport ratio 2(1+u)[ln(1+u) - u/(1+u)]/u^2 at u = 2/Gamma."""
    return 2.0 * (1.0 + u) * _log_minus_fraction(u) / (u * u)


def screened_transport_ratio(model: ScreenedRutherford) -> float:
    """sigma_tr/sigma_tot for the model; strictly increasing in Gamma,
    with limits 0 as Gamma -> 0 and 1 as Gamma -> infinity."""
    return _ratio_from_u(2.0 / model.gamma_screen)


def fit_screened(sigma_tot: float, sigma_tr: float) -> ScreenedRutherford:
    """Invert (sigma_tot, sigma_tr) to the unique model reproducing them.

    The ratio sigma_tr/sigma_tot pins Gamma (solved by bracketed
    root-finding on log Gamma), after which Phi follows from the total.
    Raises NoRoot when the ratio falls outside the attainable band.
    """
    if not (sigma_tot > 0.0 and math.isfinite(sigma_tot)):
        raise DomainError(f"sigma_tot must be positive and finite, got {sigma_tot!r}")
    if not (sigma_tr > 0.0 and math.isfinite(sigma_tr)):
        raise DomainError(f"sigma_tr must be positive and finite, got {sigma_tr!r}")
    ratio = sigma_tr / sigma_tot

    def h(log10_gamma):
        return _ratio_from_u(2.0 * 10.0 ** (-log10_gamma)) - ratio

    h_lo, h_hi = h(_FIT_LOG_LO), h(_FIT_LOG_HI)
    if not (h_lo < 0.0 < h_hi):
        raise NoRoot(
            f"transport ratio {ratio!r} outside the attainable range "
            f"({_ratio_from_u(2.0 * 10.0 ** -_FIT_LOG_LO)!r}, "
            f"{_ratio_from_u(2.0 * 10.0 ** -_FIT_LOG_HI)!r}) of the model"
        )
    log10_gamma = brentq(h, _FIT_LOG_LO, _FIT_LOG_HI, xtol=1e-14, rtol=8.9e-16)
    gamma = 10.0 ** log10_gamma
    phi = sigma_tot * gamma * (gamma + 2.0) / (4.0 * math.pi)
    return ScreenedRutherford(phi=phi, gamma_screen=gamma)

"""Fractional relaxation curves and the gamma rate mixture.

A rate ``c`` drawn from a gamma density turns the three-parameter
Mittag-Leffler relaxation ``N(t|c)`` into the power-law curve
:func:`unconditional_density`; :func:`mixture_integral` does the mixing by
quadrature so the identity can be checked numerically.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import DomainError, NonConvergenceError, ParameterError
from .special_functions import mittag_leffler, prabhakar


@dataclass(frozen=True)
class KineticsParams:
    """``N0``, base rate ``c``, order ``nu``, shape ``mu``, ``b`` and pathway ``alpha_k > 1``."""

    N0: float = 1.0
    c: float = 1.0
    nu: float = 1.0
    mu: float = 1.0
    b: float = 1.0
    alpha_k: float = 2.0

    def __post_init__(self):
        if not (self.N0 > 0 and self.c > 0 and self.mu > 0 and self.b > 0):
            raise ParameterError("N0, c, mu and b must be positive")
        if not 0 < self.nu <= 1:
            raise ParameterError(f"nu must lie in (0, 1], got {self.nu}")
        if not self.alpha_k > 1:
            raise ParameterError(f"alpha_k must exceed 1, got {self.alpha_k}")

    @property
    def gamma_k(self) -> float:
        # chosen so that gamma + 1 = 1/(alpha - 1)
        return (2.0 - self.alpha_k) / (self.alpha_k - 1.0)

    @property
    def omega(self) -> float:
        # omega**(-nu) = b (alpha - 1)
        return (self.b * (self.alpha_k - 1.0)) ** (-1.0 / self.nu)


def exponential_decay(N0: float, c: float, t: float) -> float:
    """``N0 exp(-c t)``."""
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    return N0 * math.exp(-c * t)


def ml_decay(N0: float, c: float, nu: float, t: float, method: str = "auto") -> float:
    """Solution ``N0 E_nu(-(c t)**nu)`` of the fractional relaxation equation."""
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    if t == 0:
        return N0
    if nu == 1:
        # E_1 = exp; the contour's ~1e-14 absolute error would swamp exp(-ct) for large ct
        return N0 * math.exp(-c * t)
    return N0 * mittag_leffler(nu, 1.0, -((c * t) ** nu), method=method)


def conditional_density(params: KineticsParams, c_rate: float, t: float, literal: bool = False) -> float:
    """``N(t|c) = N0 t**(mu-1) E^{gamma+1}_{nu,mu}(-(c t)**nu)``.

    ``literal=True`` uses ``nu`` as the second Mittag-Leffler index instead
    of ``mu``; that variant does not mix into :func:`unconditional_density`.
    """
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    if c_rate < 0:
        raise DomainError(f"rate must be non-negative, got {c_rate}")
    second = params.nu if literal else params.mu
    z = -((c_rate * t) ** params.nu)
    e = prabhakar(params.gamma_k + 1.0, params.nu, second, z, method="auto")
    return params.N0 * t ** (params.mu - 1.0) * e


def gamma_rate_density(omega: float, mu: float, c_rate):
    """Gamma density ``omega**mu c**(mu-1) exp(-omega c) / Gamma(mu)``."""
    if not (omega > 0 and mu > 0):
        raise ParameterError("omega and mu must be positive")
    c = np.asarray(c_rate, dtype=float)
    if np.any(c <= 0):
        raise DomainError("rate must be positive")
    out = np.exp(mu * math.log(omega) + (mu - 1.0) * np.log(c) - omega * c - math.lgamma(mu))
    return float(out) if out.ndim == 0 else out


def unconditional_density(params: KineticsParams, t):
    """``N0/Gamma(mu) t**(mu-1) [1 + b(alpha-1) t**nu]**(-1/(alpha-1))``."""
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise DomainError("t must be positive")
    am1 = params.alpha_k - 1.0
    out = (
        params.N0 / math.gamma(params.mu) * t ** (params.mu - 1.0)
        * np.exp(-np.log1p(params.b * am1 * t**params.nu) / am1)
    )
    return float(out) if out.ndim == 0 else out


def stretched_exponential(params: KineticsParams, t):
    """``alpha -> 1+`` limit of :func:`unconditional_density`: ``N0/Gamma(mu) t**(mu-1) exp(-b t**nu)``."""
    t = np.asarray(t, dtype=float)
    out = params.N0 / math.gamma(params.mu) * t ** (params.mu - 1.0) * np.exp(-params.b * t**params.nu)
    return float(out) if out.ndim == 0 else out


def mixture_integral(params: KineticsParams, t: float, tol: float = 1e-10, literal: bool = False) -> float:
    """``int_0^inf N(t|c) g(c) dc`` by adaptive quadrature on ``c = u/(1-u)``."""
    omega, mu = params.omega, params.mu

    def integrand(u):
        if u <= 0.0 or u >= 1.0:
            return 0.0
        c = u / (1.0 - u)
        g = gamma_rate_density(omega, mu, c)
        if g == 0.0:
            return 0.0
        return conditional_density(params, c, t, literal) * g / (1.0 - u) ** 2

    # the gamma density is concentrated near c ~ mu/omega; split there
    u_mid = (mu / omega) / (1.0 + mu / omega)
    total = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        for lo, hi in ((0.0, u_mid), (u_mid, 1.0)):
            res = integrate.quad(integrand, lo, hi, epsabs=tol, epsrel=tol, limit=400, full_output=1)
            if len(res) > 3 and res[3]:
                raise NonConvergenceError(f"mixture quadrature failed at t={t}: {res[3]}")
            total += res[0]
    return total

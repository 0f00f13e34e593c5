"""Real-parameter series for gamma-type special functions.

Everything here sums a power series ``sum_k coeff(k) * z**k`` with the same
truncation rule: stop once three consecutive terms satisfy
``|term_k| < tol * (1 + |partial sum|)``, and give up after ``K_MAX`` terms.

Coefficients are evaluated directly with ``math.gamma`` while all gamma
arguments are small, and in log space otherwise, so that huge gamma ratios
(for instance ``Gamma(1 + z) / Gamma(z + rho + 1)`` with ``z ~ 1e4``) stay
finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy import special as sc

from .errors import DomainError, NonConvergenceError, ParameterError

K_MAX = 500
Z_MAX = 50.0
DEFAULT_TOL = 1e-14

# math.gamma overflows just above 171.6
_GAMMA_DIRECT_LIMIT = 170.0


def log_gamma(x):
    """Natural log of the gamma function for positive real ``x``.

    Accepts scalars or arrays; raises :class:`DomainError` if any entry is
    not strictly positive.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    out = sc.gammaln(arr)
    return float(out) if out.ndim == 0 else out


def _sum_series(
    direct: Callable[[int], Optional[float]],
    logc: Callable[[int], float],
    z: float,
    tol: float,
    log_scale: float = 0.0,
    k_max: int = K_MAX,
) -> float:
    # direct(k) returns the coefficient or None when it would overflow;
    # logc(k) returns log|coefficient| (coefficients are positive here).
    if not tol > 0:
        raise ParameterError(f"tol must be positive, got {tol}")
    z = float(z)
    scale = math.exp(log_scale) if abs(log_scale) < 300.0 else None
    log_absz = math.log(abs(z)) if z != 0.0 else -math.inf

    terms = []
    partial = 0.0
    n_small = 0
    for k in range(k_max + 1):
        if z == 0.0 and k > 0:
            term = 0.0
        else:
            term = None
            if scale is not None and k * max(log_absz, 0.0) < 600.0:
                c = direct(k)
                if c is not None and c != 0.0 and math.isfinite(c):
                    term = c * z**k * scale
            if term is None:
                lg = logc(k) + (k * log_absz if k else 0.0) + log_scale
                if lg > 700.0:
                    raise NonConvergenceError(
                        f"series term {k} overflows (log magnitude {lg:.1f}) at z={z}"
                    )
                term = math.exp(lg)
                if z < 0 and k % 2 == 1:
                    term = -term
        terms.append(term)
        partial += term
        if abs(term) < tol * (1.0 + abs(partial)):
            n_small += 1
            if n_small == 3:
                return math.fsum(terms)
        else:
            n_small = 0
    raise NonConvergenceError(
        f"series not converged after {k_max} terms at z={z} "
        f"(last term {terms[-1]:.3e}, partial sum {partial:.6e})"
    )


@dataclass(frozen=True)
class WrightSeriesSpec:
    """Parameters ``(a_i, alpha_i)`` and ``(b_j, beta_j)`` of a pPsi_q series.

    The series is ``sum_k prod Gamma(a_i + alpha_i k) / prod Gamma(b_j + beta_j k)
    * z**k / k!``. Only positive gamma arguments are supported, so every
    ``a_i`` and ``b_j`` must be positive.

    With ``sum(beta) - sum(alpha) > -1`` the series is entire. The boundary
    case ``== -1`` is accepted too; the series then converges only for
    ``|z| < radius``.
    """

    upper: Tuple[Tuple[float, float], ...]
    lower: Tuple[Tuple[float, float], ...]

    def __init__(self, upper: Sequence[Tuple[float, float]], lower: Sequence[Tuple[float, float]]):
        object.__setattr__(self, "upper", tuple((float(a), float(al)) for a, al in upper))
        object.__setattr__(self, "lower", tuple((float(b), float(be)) for b, be in lower))
        for a, al in self.upper:
            if not (al > 0 and a > 0):
                raise ParameterError(f"upper pair ({a}, {al}) needs a > 0 and alpha > 0")
        for b, be in self.lower:
            if not (be > 0 and b > 0):
                raise ParameterError(f"lower pair ({b}, {be}) needs b > 0 and beta > 0")
        if self.excess < -1.0 - 1e-12:
            raise ParameterError(
                f"convergence condition violated: sum(beta) - sum(alpha) = {self.excess} < -1"
            )

    @property
    def excess(self) -> float:
        return sum(be for _, be in self.lower) - sum(al for _, al in self.upper)

    @property
    def radius(self) -> float:
        if self.excess > -1.0 + 1e-12:
            return math.inf
        log_r = sum(be * math.log(be) for _, be in self.lower)
        log_r -= sum(al * math.log(al) for _, al in self.upper)
        return math.exp(log_r)

    def _direct(self, k: int) -> Optional[float]:
        args = [a + al * k for a, al in self.upper] + [b + be * k for b, be in self.lower]
        if k + 1 > _GAMMA_DIRECT_LIMIT or max(args, default=0.0) > _GAMMA_DIRECT_LIMIT:
            return None
        num = 1.0
        for a, al in self.upper:
            num *= math.gamma(a + al * k)
        for b, be in self.lower:
            num /= math.gamma(b + be * k)
        return num / math.factorial(k)

    def _logc(self, k: int) -> float:
        out = -math.lgamma(k + 1.0)
        for a, al in self.upper:
            out += math.lgamma(a + al * k)
        for b, be in self.lower:
            out -= math.lgamma(b + be * k)
        return out


def wright_eval(spec: WrightSeriesSpec, z: float, tol: float = DEFAULT_TOL, log_scale: float = 0.0) -> float:
    """Generalized Wright function ``pPsi_q(z)`` by truncated series.

    ``log_scale`` multiplies the result by ``exp(log_scale)`` inside each
    term, which keeps products like ``Gamma(1+z) * Psi`` finite when the
    gamma prefactor alone would overflow.
    """
    if abs(z) >= spec.radius:
        raise DomainError(f"|z| = {abs(z)} outside the convergence disk of radius {spec.radius}")
    return _sum_series(spec._direct, spec._logc, z, tol, log_scale)


_METHODS = ("series", "contour", "auto")


def _check_method(method: str, nu: float, z: float) -> str:
    if method not in _METHODS:
        raise ParameterError(f"method must be one of {_METHODS}, got {method!r}")
    contour_ok = z <= 0.0 and 0.0 < nu <= 1.0
    if method == "contour" and not contour_ok:
        raise DomainError("contour evaluation needs z <= 0 and 0 < nu <= 1")
    if method == "auto":
        return "contour" if contour_ok and z < -1.0 else "series"
    return method


def mittag_leffler(alpha: float, beta: float, z: float, tol: float = DEFAULT_TOL, method: str = "series") -> float:
    """Two-parameter Mittag-Leffler function ``E_{alpha,beta}(z)``.

    ``method="series"`` sums the defining series and is restricted to
    ``|z| <= Z_MAX``. ``"contour"`` inverts the Laplace transform
    ``s**(alpha-beta) / (s**alpha - z)`` and handles negative ``z`` of any
    size when ``0 < alpha <= 1``. ``"auto"`` uses the contour for
    ``z < -1`` when it applies and the series otherwise.
    """
    if not (alpha > 0 and beta > 0):
        raise ParameterError(f"alpha and beta must be positive, got {alpha}, {beta}")
    return prabhakar(1.0, alpha, beta, z, tol, method)


def prabhakar(gamma_p: float, nu: float, mu: float, z: float, tol: float = DEFAULT_TOL, method: str = "series") -> float:
    """Three-parameter Mittag-Leffler function ``E^{gamma}_{nu,mu}(z)``.

    Series ``sum_k (gamma)_k z**k / (k! Gamma(mu + nu k))`` with ``(.)_k`` the
    rising factorial. See :func:`mittag_leffler` for ``method``.
    """
    if not (gamma_p > 0 and nu > 0 and mu > 0):
        raise ParameterError(f"gamma, nu, mu must be positive, got {gamma_p}, {nu}, {mu}")
    z = float(z)
    if _check_method(method, nu, z) == "contour":
        return _prabhakar_contour(gamma_p, nu, mu, -z)
    if abs(z) > Z_MAX:
        raise DomainError(f"|z| = {abs(z)} exceeds Z_MAX = {Z_MAX} for series evaluation")

    if gamma_p == 1.0:
        def direct(k):
            arg = mu + nu * k
            return None if arg > _GAMMA_DIRECT_LIMIT else float(sc.rgamma(arg))

        def logc(k):
            return -math.lgamma(mu + nu * k)
    else:
        lg0 = math.lgamma(gamma_p)

        def direct(k):
            arg = mu + nu * k
            if max(arg, gamma_p + k, k + 1.0) > _GAMMA_DIRECT_LIMIT:
                return None
            return float(sc.poch(gamma_p, k)) / math.factorial(k) * float(sc.rgamma(arg))

        def logc(k):
            return math.lgamma(gamma_p + k) - lg0 - math.lgamma(k + 1.0) - math.lgamma(mu + nu * k)

    return _sum_series(direct, logc, z, tol)


# Parabolic Talbot-type contour s(u) = m (1 + i u)^2 with the step and
# scale of Weideman & Trefethen (2007); 32 nodes per side give ~1e-13.
_CONTOUR_NODES = 32


def _prabhakar_contour(gamma_p: float, nu: float, mu: float, x: float, n: int = _CONTOUR_NODES) -> float:
    # E^g_{nu,mu}(-x) is the inverse Laplace transform at t = 1 of
    # s**(nu g - mu) / (s**nu + x)**g; for 0 < nu <= 1 and x >= 0 the
    # singularities sit on the negative real axis, left of the contour.
    m = math.pi * n / 12.0
    h = 3.0 / n
    u = h * np.arange(-n, n + 1)
    s = m * (1.0 + 1j * u) ** 2
    ds = 2.0 * m * (1.0 + 1j * u)  # ds/du divided by i
    f = np.exp(s) * s ** (nu * gamma_p - mu) * (s**nu + x) ** (-gamma_p)
    return float(np.real(h / (2.0 * math.pi) * np.sum(f * ds)))


@dataclass(frozen=True)
class BesselParams:
    """Order ``p`` and coefficients ``b, c`` of the generalized Bessel series."""

    p: float
    b: float
    c: float

    def __post_init__(self):
        if not self.kappa > 0:
            raise ParameterError(f"kappa = p + (b+1)/2 must be positive, got {self.kappa}")

    @property
    def kappa(self) -> float:
        return self.p + (self.b + 1.0) / 2.0


def bessel_w(params: BesselParams, z: float, tol: float = DEFAULT_TOL) -> float:
    """Generalized Bessel function of the first kind ``W_{p,b,c}(z)``.

    ``sum_k (-c)**k / (k! Gamma(kappa + k)) * (z/2)**(p + 2k)``. Covers
    ``J_p`` (b=1, c=1), ``I_p`` (b=1, c=-1) and the spherical variants
    (b=2, c=+-1, up to the factor ``2/sqrt(pi)``).
    """
    z = float(z)
    p = params.p
    integer_p = float(p).is_integer()
    if z < 0 and not integer_p:
        raise DomainError(f"z = {z} < 0 needs an integer order, got p = {p}")
    if z == 0.0:
        if p > 0:
            return 0.0
        if p == 0:
            return 1.0 / math.gamma(params.kappa)
        raise DomainError(f"W_p is singular at z = 0 for p = {p} < 0")
    series = wright_eval(WrightSeriesSpec([], [(params.kappa, 1.0)]), -params.c * z * z / 4.0, tol)
    return (z / 2.0) ** p * series

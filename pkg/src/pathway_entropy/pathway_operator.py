"""Pathway fractional integral operator.

The operator used throughout is

    (P f)(x) = x**eta * int_0^{x/(a(1-alpha))} [1 - a(1-alpha) t/x]**(eta/(1-alpha)) f(t) dt

for ``eta > 0``, ``a > 0`` and ``alpha < 1``. With this kernel the power
rule ``P t**(rho-1)`` has the Beta-function image implemented in
:func:`pathway_power`, and ``alpha -> 1-`` turns the operator into
``x**eta`` times the Laplace transform at ``a*eta/x``. The historical
variant with prefactor ``x**(eta-1)`` and kernel exponent
``eta/(1-alpha) - 1`` is available as ``kernel="printed"``; at
``alpha = 0, a = 1`` it is ``Gamma(eta)`` times the Riemann-Liouville
integral.

Closed-form images are sums of generalized Wright series; every one of them
can be compared against adaptive quadrature through :func:`cross_check`.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np
from scipy import integrate
from scipy import special as sc

from .errors import DomainError, NonConvergenceError, ParameterError
from .special_functions import BesselParams, WrightSeriesSpec, mittag_leffler, wright_eval

CLOSED_TOL = 1e-12
QUAD_TOL = 1e-9
GATE = 1e-7

TRIG_KINDS = ("cos", "cosh", "sin", "sinh")
LIMIT_KINDS = ("power", "bessel") + TRIG_KINDS
_LOG_SQRT_PI = 0.5 * math.log(math.pi)


@dataclass(frozen=True)
class PathwayParams:
    eta: float
    alpha_pw: float
    a: float = 1.0

    def __post_init__(self):
        if not self.eta > 0:
            raise ParameterError(f"eta must be positive, got {self.eta}")
        if not self.alpha_pw < 1:
            raise ParameterError(f"pathway parameter must be < 1, got {self.alpha_pw}")
        if not self.a > 0:
            raise ParameterError(f"a must be positive, got {self.a}")

    @property
    def z_exp(self) -> float:
        """Kernel exponent ``eta / (1 - alpha)``."""
        return self.eta / (1.0 - self.alpha_pw)

    @property
    def scale(self) -> float:
        """``a (1 - alpha)``."""
        return self.a * (1.0 - self.alpha_pw)

    def upper_limit(self, x: float) -> float:
        return x / self.scale


@dataclass(frozen=True)
class OperatorImage:
    value: float
    form: str  # "closed_wright", "quadrature" or "laplace_limit"

    def __float__(self):
        return float(self.value)


def pathway_integral_numeric(
    f: Callable[[float], float],
    params: PathwayParams,
    x: float,
    tol: float = QUAD_TOL,
    t_power: float = 0.0,
    kernel: str = "corrected",
) -> float:
    """Evaluate the pathway operator of ``t**t_power * f(t)`` by quadrature.

    The substitution ``u = a(1-alpha) t / x`` maps the range to ``[0, 1]``;
    the factors ``u**t_power`` and ``(1-u)**exponent`` are handled as
    algebraic weights by QUADPACK's QAWS, so integrable endpoint
    singularities cost nothing. ``f`` must be smooth on the range.
    """
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    if not t_power > -1:
        raise ParameterError(f"t_power must exceed -1, got {t_power}")
    if kernel == "corrected":
        pref, expo = params.eta * math.log(x), params.z_exp
    elif kernel == "printed":
        pref, expo = (params.eta - 1.0) * math.log(x), params.z_exp - 1.0
    else:
        raise ParameterError(f"kernel must be 'corrected' or 'printed', got {kernel!r}")

    upper = params.upper_limit(x)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        res = integrate.quad(
            lambda u: f(u * upper),
            0.0,
            1.0,
            weight="alg",
            wvar=(t_power, expo),
            epsabs=tol * 1e-3,
            epsrel=tol,
            limit=400,
            full_output=1,
        )
    val, err, info = res[0], res[1], res[2]
    if len(res) > 3 and res[3]:
        raise NonConvergenceError(
            f"quadrature failed (x={x}, {params}, t_power={t_power}): {res[3]!s} "
            f"[estimate {val:.6e} +- {err:.1e}, {info['neval']} evaluations]"
        )
    return math.exp(pref + (1.0 + t_power) * math.log(upper)) * val


def pathway_power(params: PathwayParams, rho: float, x: float) -> float:
    """Image of ``t**(rho-1)``: ``B(rho, 1+z) x**(eta+rho) / [a(1-alpha)]**rho``."""
    if not rho > 0:
        raise ParameterError(f"rho must be positive, got {rho}")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    z = params.z_exp
    lg = sc.gammaln(rho) + sc.gammaln(1.0 + z) - sc.gammaln(z + rho + 1.0)
    return math.exp(lg + (params.eta + rho) * math.log(x) - rho * math.log(params.scale))


def pathway_bessel(
    params: PathwayParams, rho: float, bp: BesselParams, x: float, tol: float = CLOSED_TOL
) -> OperatorImage:
    """Image of ``t**(rho-1) W_{p,b,c}(t)`` as a 1Psi2 series."""
    p = bp.p
    A = p + rho
    if not A > 0:
        raise ParameterError(f"need rho + p > 0, got {A}")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    z = params.z_exp
    s = params.scale
    spec = WrightSeriesSpec([(A, 2.0)], [(bp.kappa, 1.0), (z + A + 1.0, 2.0)])
    log_pref = (A + params.eta) * math.log(x) + sc.gammaln(1.0 + z) - p * math.log(2.0) - A * math.log(s)
    arg = -bp.c * x * x / (4.0 * s * s)
    return OperatorImage(wright_eval(spec, arg, tol, log_scale=log_pref), "closed_wright")


def pathway_trig(
    kind: str, params: PathwayParams, rho: float, c: float, x: float, tol: float = CLOSED_TOL
) -> OperatorImage:
    """Image of ``t**(rho-1)`` times ``cos``, ``cosh``, ``sin`` or ``sinh`` of ``c t``."""
    if kind not in TRIG_KINDS:
        raise ParameterError(f"kind must be one of {TRIG_KINDS}, got {kind!r}")
    if not rho > 0:
        raise ParameterError(f"rho must be positive, got {rho}")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    z = params.z_exp
    s = params.scale
    sign = -1.0 if kind in ("cos", "sin") else 1.0
    arg = sign * c * c * x * x / (4.0 * s * s)
    lg1z = sc.gammaln(1.0 + z)
    if kind in ("cos", "cosh"):
        spec = WrightSeriesSpec([(rho, 2.0)], [(0.5, 1.0), (z + rho + 1.0, 2.0)])
        log_pref = _LOG_SQRT_PI + (rho + params.eta) * math.log(x) + lg1z - rho * math.log(s)
        return OperatorImage(wright_eval(spec, arg, tol, log_scale=log_pref), "closed_wright")
    if c == 0:
        return OperatorImage(0.0, "closed_wright")
    spec = WrightSeriesSpec([(rho + 1.0, 2.0)], [(1.5, 1.0), (z + rho + 2.0, 2.0)])
    log_pref = (
        _LOG_SQRT_PI - math.log(2.0) + (rho + params.eta + 1.0) * math.log(x) + lg1z
        - (rho + 1.0) * math.log(s) + math.log(abs(c))
    )
    val = wright_eval(spec, arg, tol, log_scale=log_pref)
    return OperatorImage(math.copysign(1.0, c) * val, "closed_wright")


def _psi11(A: float, kappa: float, w: float, tol: float) -> float:
    # 1Psi1[(A,2);(kappa,1) | w] converges only for |w| < 1/4; by the
    # duplication formula it equals Gamma(A)/Gamma(kappa) 2F1(A/2,(A+1)/2;kappa;4w),
    # which continues it to every w < 1/4.
    if abs(w) < 0.2:
        return wright_eval(WrightSeriesSpec([(A, 2.0)], [(kappa, 1.0)]), w, tol)
    if 4.0 * w >= 1.0:
        raise DomainError(f"Laplace image diverges: 4w = {4.0 * w} >= 1")
    pref = math.exp(sc.gammaln(A) - sc.gammaln(kappa))
    return pref * float(sc.hyp2f1(A / 2.0, (A + 1.0) / 2.0, kappa, 4.0 * w))


def laplace_limit(
    kind: str,
    a: float,
    eta: float,
    rho: float,
    x: float,
    c: Optional[float] = None,
    bp: Optional[BesselParams] = None,
    tol: float = CLOSED_TOL,
) -> float:
    """``alpha -> 1-`` limit of the closed-form images (1Psi1 and Gamma forms).

    The 1Psi1 series is only convergent for ``|c| x**2 < (a eta)**2``; outside
    that disk the value comes from the equivalent Gauss hypergeometric
    function. For ``cosh``/``sinh`` (and ``bessel`` with ``c < 0``) the
    limit is finite only when ``|c| x < a eta``.
    """
    if kind not in LIMIT_KINDS:
        raise ParameterError(f"kind must be one of {LIMIT_KINDS}, got {kind!r}")
    if not (a > 0 and eta > 0 and x > 0):
        raise ParameterError("need a > 0, eta > 0, x > 0")
    ae = a * eta
    if kind == "power":
        if not rho > 0:
            raise ParameterError(f"rho must be positive, got {rho}")
        return math.exp(sc.gammaln(rho) + (eta + rho) * math.log(x) - rho * math.log(ae))
    if kind == "bessel":
        if bp is None:
            raise ParameterError("bessel limit needs BesselParams")
        A = bp.p + rho
        if not A > 0:
            raise ParameterError(f"need rho + p > 0, got {A}")
        w = -bp.c * x * x / (4.0 * ae * ae)
        pref = math.exp((A + eta) * math.log(x) - bp.p * math.log(2.0) - A * math.log(ae))
        return pref * _psi11(A, bp.kappa, w, tol)
    if c is None:
        raise ParameterError(f"{kind} limit needs c")
    if not rho > 0:
        raise ParameterError(f"rho must be positive, got {rho}")
    sign = -1.0 if kind in ("cos", "sin") else 1.0
    w = sign * c * c * x * x / (4.0 * ae * ae)
    if kind in ("cos", "cosh"):
        pref = math.sqrt(math.pi) * math.exp((rho + eta) * math.log(x) - rho * math.log(ae))
        return pref * _psi11(rho, 0.5, w, tol)
    pref = 0.5 * math.sqrt(math.pi) * c * math.exp((rho + eta + 1.0) * math.log(x) - (rho + 1.0) * math.log(ae))
    return pref * _psi11(rho + 1.0, 1.5, w, tol)


def rl_cos(eta: float, x: float, tol: float = 1e-15) -> float:
    """Riemann-Liouville integral of ``cos``: ``x**eta E_{2,1+eta}(-x**2)``."""
    if not eta > 0:
        raise ParameterError(f"eta must be positive, got {eta}")
    if x < 0:
        raise DomainError(f"x must be non-negative, got {x}")
    if x == 0:
        return 0.0
    return x**eta * mittag_leffler(2.0, 1.0 + eta, -x * x, tol)


def riemann_liouville_numeric(f: Callable[[float], float], eta: float, x: float, tol: float = QUAD_TOL) -> float:
    """``(1/Gamma(eta)) int_0^x (x-t)**(eta-1) f(t) dt`` by quadrature."""
    params = PathwayParams(eta, 0.0, 1.0)
    return pathway_integral_numeric(f, params, x, tol, kernel="printed") / math.gamma(eta)


# -- closed form vs quadrature ------------------------------------------------


def bessel_w_reference(p: float, b: float, c: float, t):
    """``W_{p,b,c}(t)`` for ``t > 0`` from SciPy's ordinary/modified Bessel functions.

    Independent of the series in :mod:`special_functions`; used as the
    quadrature integrand in :func:`cross_check`.
    """
    t = np.asarray(t, dtype=float)
    order = p + (b - 1.0) / 2.0
    if c == 0:
        return (t / 2.0) ** p / math.gamma(p + (b + 1.0) / 2.0)
    r = math.sqrt(abs(c))
    w = r * t
    bes = sc.jv(order, w) if c > 0 else sc.iv(order, w)
    return r ** (-p) * (w / 2.0) ** (-(b - 1.0) / 2.0) * bes


def _reduced_w(p, b, c, t):
    if t == 0.0:
        return 2.0 ** (-p) / math.gamma(p + (b + 1.0) / 2.0)
    return float(bessel_w_reference(p, b, c, t)) * t ** (-p)


_TRIG_FUNCS = {"cos": np.cos, "cosh": np.cosh, "sin": np.sin, "sinh": np.sinh}


def default_grid(kind: str) -> List[Dict[str, float]]:
    """Parameter grid used by :func:`cross_check` and the acceptance suite."""
    if kind == "power":
        return [
            dict(eta=eta, alpha=alpha, a=a, rho=rho, x=x)
            for eta, rho, alpha in itertools.product((0.5, 1.0, 2.0), (0.5, 1.0, 2.5), (-0.5, 0.0, 0.5))
            for a, x in ((1.0, 1.5), (2.0, 0.7))
        ]
    if kind == "bessel":
        grid = [dict(eta=2.0, alpha=0.5, a=1.0, rho=1.5, p=0.5, b=1.0, c=1.0, x=1.0)]
        for eta, alpha, p, b, c, x in itertools.product(
            (1.0, 2.0), (0.0, 0.5), (-0.5, 0.5, 1.0), (1.0, 2.0), (1.0, -1.0, 2.5), (0.5, 1.0, 2.0)
        ):
            grid.append(dict(eta=eta, alpha=alpha, a=1.0, rho=1.5, p=p, b=b, c=c, x=x))
        return grid
    if kind in TRIG_KINDS:
        return [
            dict(eta=eta, alpha=alpha, a=1.0, rho=rho, c=c, x=x)
            for eta, alpha, rho, c, x in itertools.product(
                (1.0, 2.0), (0.0, 0.3, 0.7), (1.0, 1.5), (1.0, 2.0), (0.5, 1.0, 2.0)
            )
        ]
    raise ParameterError(f"no grid for kind {kind!r}")


def closed_and_numeric(kind: str, point: Dict[str, float], quad_tol: float = QUAD_TOL):
    """Closed-form image and quadrature value at one grid point."""
    params = PathwayParams(point["eta"], point["alpha"], point["a"])
    rho, x = point["rho"], point["x"]
    if kind == "power":
        closed = pathway_power(params, rho, x)
        numeric = pathway_integral_numeric(lambda t: 1.0, params, x, quad_tol, t_power=rho - 1.0)
    elif kind == "bessel":
        p, b, c = point["p"], point["b"], point["c"]
        closed = pathway_bessel(params, rho, BesselParams(p, b, c), x).value
        # t^(rho-1) W(t) = t^(rho+p-1) * [W(t) t^(-p)], the bracket being smooth
        numeric = pathway_integral_numeric(
            lambda t: _reduced_w(p, b, c, t),
            params,
            x,
            quad_tol,
            t_power=rho + p - 1.0,
        )
    else:
        c = point["c"]
        func = _TRIG_FUNCS[kind]
        closed = pathway_trig(kind, params, rho, c, x).value
        numeric = pathway_integral_numeric(lambda t: float(func(c * t)), params, x, quad_tol, t_power=rho - 1.0)
    return closed, numeric


def cross_check(kind: str, grid: Optional[List[Dict[str, float]]] = None, gate: float = GATE) -> Dict[str, float]:
    """Compare closed forms with quadrature over a grid.

    A point passes when ``|closed - numeric| <= max(gate, gate * |closed|)``.
    Returns the worst absolute and relative discrepancies and a pass flag.
    """
    grid = default_grid(kind) if grid is None else grid
    max_abs = max_rel = 0.0
    failures = 0
    for point in grid:
        closed, numeric = closed_and_numeric(kind, point)
        diff = abs(closed - numeric)
        max_abs = max(max_abs, diff)
        max_rel = max(max_rel, diff / abs(closed) if closed else diff)
        if diff > max(gate, gate * abs(closed)):
            failures += 1
    return dict(kind=kind, points=len(grid), max_abs=max_abs, max_rel=max_rel, failures=failures, passed=failures == 0)

"""Diffusion entropy analysis and variance scaling of time series.

A series ``xi`` is turned into a diffusion process by summing overlapping
windows of length ``t``; the entropy of the resulting displacement
histogram grows like ``A + delta*log(t)`` for a scaling process, while the
variance grows like ``t**(2H)``. Comparing ``delta`` with ``H`` separates
fractional-Brownian noise from Levy statistics.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .entropy import SampledPdf, continuous_entropy
from .errors import DataError, DomainError, ParameterError

MIN_SERIES = 64
MIN_POSITIONS = 32
BIN_FRACTION = 0.25


@dataclass(frozen=True)
class DiffusionEnsemble:
    t: int
    positions: np.ndarray


@dataclass(frozen=True)
class ScalingFit:
    delta: float
    intercept: float
    t_range: Tuple[float, float]
    residual_rms: float
    n_points: int


@dataclass(frozen=True)
class NonstationaryFit:
    b0: float
    delta0: float
    eta_ns: float
    residual_rms: float
    t_range: Tuple[float, float]

    def within_ballistic_bound(self) -> bool:
        """True while ``eta*log(t) < 1 - delta0`` holds over the fitted range."""
        tau = math.log(self.t_range[1])
        return self.eta_ns * tau < 1.0 - self.delta0


@dataclass(frozen=True)
class Indicator:
    """Entropy indicator applied to each displacement histogram.

    ``kind`` is ``shannon``, ``tsallis``, ``mathai`` or ``mathai_extensive``.
    The extensive Mathai indicator includes the ``-log(dx)`` offset, i.e. it
    is the discrete measure evaluated on bin probabilities; at
    ``alpha == 1`` it reduces to ``shannon - log(dx)``.
    """

    kind: str = "shannon"
    alpha: float = 1.0

    def __post_init__(self):
        if self.kind not in ("shannon", "tsallis", "mathai", "mathai_extensive"):
            raise ParameterError(f"unknown indicator {self.kind!r}")
        if self.kind != "shannon" and self.kind != "mathai_extensive" and self.alpha == 1:
            raise ParameterError(f"{self.kind} indicator needs alpha != 1")
        if self.kind.startswith("mathai") and not self.alpha < 2:
            raise ParameterError(f"{self.kind} indicator needs alpha < 2")

    def __call__(self, pdf: SampledPdf) -> float:
        if self.kind in ("shannon", "tsallis", "mathai"):
            return continuous_entropy(self.kind, self.alpha, pdf)
        if self.alpha == 1:
            return continuous_entropy("shannon", 1.0, pdf) - math.log(pdf.dx)
        nz = pdf.f[pdf.f > 0]
        integral = math.fsum(nz ** (2.0 - self.alpha)) * pdf.dx
        return -math.log(pdf.dx) + math.log(integral) / (self.alpha - 1.0)


@dataclass(frozen=True)
class EntropyCurve:
    t: np.ndarray
    S: np.ndarray
    bin_width: float
    valid: bool = True


def _as_series(series) -> np.ndarray:
    xi = np.asarray(series, dtype=float).ravel()
    if xi.size == 0 or not np.all(np.isfinite(xi)):
        raise DataError("series must be a non-empty vector of finite values")
    return xi


def build_ensemble(series, t: int) -> DiffusionEnsemble:
    """Overlapping-window sums ``x_s(t) = xi_s + ... + xi_{s+t-1}``."""
    xi = _as_series(series)
    n = xi.size
    if int(t) != t or not 1 <= t <= n:
        raise ParameterError(f"window length must be an integer in [1, {n}], got {t}")
    t = int(t)
    csum = np.concatenate(([0.0], np.cumsum(xi)))
    return DiffusionEnsemble(t, csum[t:] - csum[:-t])


def estimate_pdf(positions, bin_width: float) -> SampledPdf:
    """Histogram density over ``[min, max]`` padded by one bin each side.

    All-equal positions give a single-bin pdf with ``degenerate=True``.
    """
    x = np.asarray(positions, dtype=float).ravel()
    if not bin_width > 0:
        raise ParameterError(f"bin width must be positive, got {bin_width}")
    if x.size < MIN_POSITIONS:
        raise DataError(f"need at least {MIN_POSITIONS} positions, got {x.size}")
    lo, hi = x.min(), x.max()
    if lo == hi:
        return SampledPdf(lo, bin_width, np.array([1.0 / bin_width]), degenerate=True)
    start = lo - bin_width
    n_bins = int(math.floor((hi - lo) / bin_width)) + 3
    idx = np.floor((x - start) / bin_width).astype(np.int64)
    counts = np.bincount(idx, minlength=n_bins)[:n_bins]
    f = counts / (x.size * bin_width)
    return SampledPdf(start + bin_width / 2.0, bin_width, f)


def default_t_grid(n: int, t_min: Optional[int] = None, t_max: Optional[int] = None, count: int = 25) -> np.ndarray:
    """About ``count`` geometrically spaced window lengths.

    Default range ``[10, max(n/200, min(n/10, 100))]``: beyond a few hundred
    windows the overlapping trajectories are too correlated at ``N = 2**16``
    and the fitted slope drifts low. Series too short for that range fall
    back to ``[1, n/4]``.
    """
    if t_min is None and t_max is None and max(n // 200, min(n // 10, 100)) < 40:
        t_min, t_max = 1, n // 4
    t_min = 10 if t_min is None else t_min
    t_max = max(n // 200, min(n // 10, 100)) if t_max is None else t_max
    if t_max < t_min:
        raise ParameterError(f"empty window range [{t_min}, {t_max}]")
    return np.unique(np.round(np.geomspace(t_min, t_max, count)).astype(int))


def _check_grid(xi: np.ndarray, t_grid) -> np.ndarray:
    if xi.size < MIN_SERIES:
        raise DataError(f"series needs at least {MIN_SERIES} values, got {xi.size}")
    t_grid = np.asarray(t_grid, dtype=int).ravel()
    if t_grid.size == 0 or np.any(np.diff(t_grid) <= 0):
        raise ParameterError("t grid must be non-empty and strictly ascending")
    if t_grid[0] < 1 or t_grid[-1] > xi.size // 4:
        raise ParameterError(f"window lengths must lie in [1, {xi.size // 4}]")
    return t_grid


def robust_scale(positions) -> float:
    """Gaussian-equivalent scale from the interquartile range."""
    q1, q3 = np.percentile(positions, [25.0, 75.0])
    return (q3 - q1) / 1.3489795003921634


def default_bin_width(ensembles: Dict[int, np.ndarray], rule: str = "iqr_min") -> float:
    """Bin width held fixed across all window lengths.

    ``"std_max"``: a quarter of the standard deviation at the largest
    window; ``"iqr_min"`` (default): a quarter of the IQR-based scale at
    the smallest window, which resolves the narrowest histogram and is
    insensitive to heavy tails.
    """
    ts = sorted(ensembles)
    if rule == "std_max":
        scale = float(np.std(ensembles[ts[-1]]))
    elif rule == "iqr_min":
        scale = robust_scale(ensembles[ts[0]])
        if scale == 0:
            scale = float(np.std(ensembles[ts[0]]))
    else:
        raise ParameterError(f"unknown bin rule {rule!r}")
    return BIN_FRACTION * scale


def curve_from_ensembles(
    ensembles: Dict[int, np.ndarray], indicator: Indicator = Indicator(), bin_width: Optional[float] = None,
    bin_rule: str = "iqr_min",
) -> EntropyCurve:
    """Entropy of each ensemble's histogram, in increasing ``t`` order."""
    ts = sorted(ensembles)
    if bin_width is None:
        bin_width = default_bin_width(ensembles, bin_rule)
    if not bin_width > 0:
        # constant series: every histogram collapses to one bin
        return EntropyCurve(np.array(ts, dtype=float), np.full(len(ts), np.nan), 0.0, valid=False)
    S = np.empty(len(ts))
    valid = True
    for i, t in enumerate(ts):
        pdf = estimate_pdf(ensembles[t], bin_width)
        valid &= not pdf.degenerate
        S[i] = indicator(pdf)
    return EntropyCurve(np.array(ts, dtype=float), S, bin_width, valid)


def entropy_curve(
    series,
    indicator: Indicator = Indicator(),
    t_grid: Optional[Sequence[int]] = None,
    bin_width: Optional[float] = None,
    bin_rule: str = "iqr_min",
) -> EntropyCurve:
    """Diffusion entropy ``S(t)`` of a time series over window lengths ``t_grid``."""
    xi = _as_series(series)
    t_grid = _check_grid(xi, default_t_grid(xi.size) if t_grid is None else t_grid)
    ensembles = {int(t): build_ensemble(xi, t).positions for t in t_grid}
    return curve_from_ensembles(ensembles, indicator, bin_width, bin_rule)


def _select(curve, t_min, t_max):
    t = np.asarray(curve.t if hasattr(curve, "t") else [p[0] for p in curve], dtype=float)
    S = np.asarray(curve.S if hasattr(curve, "S") else [p[1] for p in curve], dtype=float)
    if hasattr(curve, "valid") and not curve.valid:
        raise DataError("entropy curve is flagged invalid (degenerate histograms)")
    lo = t.min() if t_min is None else t_min
    hi = t.max() if t_max is None else t_max
    keep = (t >= lo) & (t <= hi) & np.isfinite(S)
    return t[keep], S[keep]


def fit_delta(curve, t_min: Optional[float] = None, t_max: Optional[float] = None) -> ScalingFit:
    """Least-squares line ``S = intercept + delta*log(t)``.

    ``curve`` is an :class:`EntropyCurve` or a sequence of ``(t, S)`` pairs.
    """
    t, S = _select(curve, t_min, t_max)
    if t.size < 8:
        raise DataError(f"need at least 8 curve points in range, got {t.size}")
    tau = np.log(t)
    A = np.column_stack([np.ones_like(tau), tau])
    coef, *_ = np.linalg.lstsq(A, S, rcond=None)
    resid = S - A @ coef
    return ScalingFit(float(coef[1]), float(coef[0]), (float(t[0]), float(t[-1])),
                      float(np.sqrt(np.mean(resid**2))), int(t.size))


def fit_nonstationary(curve, t_min: Optional[float] = None, t_max: Optional[float] = None) -> NonstationaryFit:
    """Least-squares quadratic ``S = b0 + delta0*tau + eta*tau**2`` with ``tau = log(t)``."""
    t, S = _select(curve, t_min, t_max)
    if t.size < 10:
        raise DataError(f"need at least 10 curve points, got {t.size}")
    tau = np.log(t)
    A = np.column_stack([np.ones_like(tau), tau, tau**2])
    coef, *_ = np.linalg.lstsq(A, S, rcond=None)
    resid = S - A @ coef
    return NonstationaryFit(float(coef[0]), float(coef[1]), float(coef[2]),
                            float(np.sqrt(np.mean(resid**2))), (float(t[0]), float(t[-1])))


def hurst_from_variances(t, variances) -> Tuple[float, float]:
    """``H`` as half the slope of ``log(var)`` against ``log(t)``, and the fit residual RMS."""
    t = np.asarray(t, dtype=float)
    v = np.asarray(variances, dtype=float)
    if np.any(v <= 0):
        raise DataError("variance vanishes at some window length")
    x, y = np.log(t), np.log(v)
    A = np.column_stack([np.ones_like(x), x])
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = y - A @ coef
    return float(coef[1] / 2.0), float(np.sqrt(np.mean(resid**2)))


def variance_scaling(series, t_grid: Optional[Sequence[int]] = None) -> Tuple[float, float]:
    """Hurst exponent from ``Var x(t) ~ t**(2H)``; returns ``(H, residual_rms)``."""
    xi = _as_series(series)
    t_grid = _check_grid(xi, default_t_grid(xi.size) if t_grid is None else t_grid)
    variances = [np.var(build_ensemble(xi, t).positions) for t in t_grid]
    return hurst_from_variances(t_grid, variances)


def levy_walk_delta(H: float) -> float:
    """Entropy scaling ``1/(3 - 2H)`` of a Levy-walk diffusion with Hurst exponent ``H``."""
    if H >= 1.5:
        raise DomainError(f"H must be below 1.5, got {H}")
    return 1.0 / (3.0 - 2.0 * H)


class NoiseClass(enum.Enum):
    FBM = "FBM"
    LEVY_WALK = "LevyWalk"
    OTHER = "Other"


def classify(H: float, delta: float, tol: float = 0.05) -> NoiseClass:
    """FBM when ``H ~ delta``, Levy walk when ``delta ~ 1/(3-2H)``, otherwise Other."""
    if abs(H - delta) <= tol:
        return NoiseClass.FBM
    if H < 1.5 and abs(delta - levy_walk_delta(H)) <= tol:
        return NoiseClass.LEVY_WALK
    return NoiseClass.OTHER


def stable_cms(index: float, size: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Symmetric alpha-stable draws by the Chambers-Mallows-Stuck construction."""
    if not 0 < index <= 2:
        raise ParameterError(f"stability index must lie in (0, 2], got {index}")
    phi = rng.uniform(-math.pi / 2.0, math.pi / 2.0, size)
    w = rng.exponential(1.0, size)
    if index == 1:
        return scale * np.tan(phi)
    x = np.sin(index * phi) / np.cos(phi) ** (1.0 / index) * (np.cos((1.0 - index) * phi) / w) ** ((1.0 - index) / index)
    return scale * x


def generate(kind: str, n: int, seed: int, D: float = 0.5, index: float = 1.5) -> np.ndarray:
    """Synthetic iid series.

    ``gaussian``: normal with variance ``2D``; ``stable``: symmetric
    alpha-stable with stability ``index`` in (1, 2).
    """
    if n < MIN_SERIES:
        raise ParameterError(f"n must be at least {MIN_SERIES}, got {n}")
    rng = np.random.default_rng(seed)
    if kind == "gaussian":
        if not D > 0:
            raise ParameterError(f"diffusion constant must be positive, got {D}")
        return rng.normal(0.0, math.sqrt(2.0 * D), n)
    if kind == "stable":
        if not 1 < index < 2:
            raise ParameterError(f"stable index must lie in (1, 2), got {index}")
        return stable_cms(index, n, rng)
    raise ParameterError(f"unknown generator {kind!r}")

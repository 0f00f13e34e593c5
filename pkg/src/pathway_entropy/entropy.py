"""Entropy functionals of order alpha and the pathway density.

Discrete measures act on probability vectors, continuous ones on densities
sampled at bin midpoints of a uniform grid (the integrals are midpoint
sums). Boltzmann's constant is 1 and ``0 * log 0 = 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate
from scipy import special as sc

from .errors import DataError, DomainError, ParameterError

DISCRETE_KINDS = ("shannon", "renyi", "havrda_charvat", "tsallis", "mathai", "mathai_extensive")
CONTINUOUS_KINDS = ("shannon", "tsallis", "mathai")


@dataclass(frozen=True)
class DiscreteDistribution:
    p: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float).ravel()
        if p.size == 0 or np.any(~np.isfinite(p)) or np.any(p < 0):
            raise DataError("probabilities must be finite and non-negative")
        if abs(p.sum() - 1.0) > 1e-12:
            raise DataError(f"probabilities sum to {p.sum()!r}, not 1")
        object.__setattr__(self, "p", p)

    def product(self, other: "DiscreteDistribution") -> "DiscreteDistribution":
        """Joint distribution of two independent systems."""
        joint = np.outer(self.p, other.p).ravel()
        return DiscreteDistribution(joint / joint.sum())


@dataclass(frozen=True)
class SampledPdf:
    """Density values ``f[i]`` at bin centres ``x0 + i*dx``."""

    x0: float
    dx: float
    f: np.ndarray
    degenerate: bool = field(default=False)

    def __post_init__(self):
        f = np.asarray(self.f, dtype=float).ravel()
        if not self.dx > 0:
            raise DataError(f"grid spacing must be positive, got {self.dx}")
        if f.size == 0 or np.any(~np.isfinite(f)) or np.any(f < 0):
            raise DataError("density values must be finite and non-negative")
        mass = f.sum() * self.dx
        if abs(mass - 1.0) > 1e-6:
            raise DataError(f"density integrates to {mass:.8f}, not 1")
        object.__setattr__(self, "f", f)

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.f.size)

    @classmethod
    def from_function(cls, func, lo: float, hi: float, dx: float) -> "SampledPdf":
        """Sample ``func`` at the midpoints of ``[lo, hi]`` split into bins of width ``dx``."""
        n = int(round((hi - lo) / dx))
        x0 = lo + dx / 2.0
        return cls(x0, dx, func(x0 + dx * np.arange(n)))


def gaussian_pdf(t: float, lo: float = None, hi: float = None, dx: float = None, width: float = 8.0, per_unit: int = 512) -> SampledPdf:
    """Gridded Brownian density ``(pi t)^(-1/2) exp(-x^2/t)``.

    By default the grid is ``[-width*sqrt(t), width*sqrt(t)]`` with
    ``per_unit`` bins per unit of ``sqrt(t)``.
    """
    s = math.sqrt(t)
    lo = -width * s if lo is None else lo
    hi = width * s if hi is None else hi
    dx = s / per_unit if dx is None else dx
    return SampledPdf.from_function(lambda x: np.exp(-x * x / t) / math.sqrt(math.pi * t), lo, hi, dx)


def _as_probs(P) -> np.ndarray:
    return P.p if isinstance(P, DiscreteDistribution) else DiscreteDistribution(P).p


def _check_alpha(kind: str, alpha: float):
    if kind == "shannon":
        return
    if alpha == 1:
        raise ParameterError(f"{kind} entropy needs alpha != 1")
    if kind.startswith("mathai"):
        if not alpha < 2:
            raise ParameterError(f"{kind} entropy needs alpha < 2, got {alpha}")
    elif not alpha > 0:
        raise ParameterError(f"{kind} entropy needs alpha > 0, got {alpha}")


def _power_sum(p: np.ndarray, q: float) -> float:
    nz = p[p > 0]
    return math.fsum(nz**q)


def discrete_entropy(kind: str, alpha: float, P) -> float:
    """Entropy of a probability vector.

    kinds: ``shannon`` (``alpha`` ignored), ``renyi``, ``havrda_charvat``,
    ``tsallis``, ``mathai`` and ``mathai_extensive``. Havrda-Charvat is
    normalised by ``2**(1-alpha) - 1`` and therefore tends to the Shannon
    entropy in bits as ``alpha -> 1``.
    """
    if kind not in DISCRETE_KINDS:
        raise ParameterError(f"unknown entropy kind {kind!r}")
    _check_alpha(kind, alpha)
    p = _as_probs(P)
    if kind == "shannon":
        nz = p[p > 0]
        return -math.fsum(nz * np.log(nz))
    if kind == "renyi":
        return math.log(_power_sum(p, alpha)) / (1.0 - alpha)
    if kind == "havrda_charvat":
        return (_power_sum(p, alpha) - 1.0) / (2.0 ** (1.0 - alpha) - 1.0)
    if kind == "tsallis":
        return (_power_sum(p, alpha) - 1.0) / (1.0 - alpha)
    if kind == "mathai":
        return (_power_sum(p, 2.0 - alpha) - 1.0) / (alpha - 1.0)
    return math.log(_power_sum(p, 2.0 - alpha)) / (alpha - 1.0)


def _integral_power(pdf: SampledPdf, q: float) -> float:
    nz = pdf.f[pdf.f > 0]
    return math.fsum(nz**q) * pdf.dx


def continuous_entropy(kind: str, alpha: float, pdf: SampledPdf) -> float:
    """Differential entropy of a gridded density by the midpoint rule.

    ``tsallis``: ``(1 - int f^alpha) / (alpha - 1)``;
    ``mathai``: ``(int f^(2-alpha) - 1) / (alpha - 1)``, ``alpha < 2``.
    """
    if kind not in CONTINUOUS_KINDS:
        raise ParameterError(f"unknown continuous entropy kind {kind!r}")
    if not isinstance(pdf, SampledPdf):
        raise DataError("continuous_entropy expects a SampledPdf")
    _check_alpha(kind, alpha)
    if kind == "shannon":
        nz = pdf.f[pdf.f > 0]
        return -math.fsum(nz * np.log(nz)) * pdf.dx
    if kind == "tsallis":
        return (1.0 - _integral_power(pdf, alpha)) / (alpha - 1.0)
    return (_integral_power(pdf, 2.0 - alpha) - 1.0) / (alpha - 1.0)


def gaussian_entropy_closed(kind: str, alpha: float, t: float) -> float:
    """Closed-form Tsallis or Mathai entropy of ``(pi t)^(-1/2) exp(-x^2/t)``.

    ``alpha == 1`` returns the Shannon value ``1/2 + log(pi t)/2`` for both kinds.
    """
    if kind not in ("tsallis", "mathai"):
        raise ParameterError(f"closed form available for tsallis/mathai, not {kind!r}")
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    if alpha == 1:
        return 0.5 + 0.5 * math.log(math.pi * t)
    if kind == "tsallis":
        if not alpha > 0:
            raise ParameterError(f"tsallis entropy needs alpha > 0, got {alpha}")
        g = (math.pi * t) ** ((1.0 - alpha) / 2.0) / math.sqrt(alpha)
        return (1.0 - g) / (alpha - 1.0)
    if not alpha < 2:
        raise ParameterError(f"mathai entropy needs alpha < 2, got {alpha}")
    g = (math.pi * t) ** ((alpha - 1.0) / 2.0) / math.sqrt(2.0 - alpha)
    return (g - 1.0) / (alpha - 1.0)


def mathai_expansion(pdf: SampledPdf, epsilon: float) -> float:
    """First-order expansion of the Mathai entropy around ``alpha = 1``.

    ``-int p log p + (epsilon/2) int p (log p)^2`` with ``epsilon = alpha - 1``.
    The neglected term is ``-(epsilon^2/6) int p (log p)^3``.
    """
    if abs(epsilon) > 0.2:
        raise ParameterError(f"|epsilon| must be <= 0.2, got {epsilon}")
    nz = pdf.f[pdf.f > 0]
    lg = np.log(nz)
    shannon = -math.fsum(nz * lg) * pdf.dx
    if epsilon == 0:
        return shannon
    return shannon + 0.5 * epsilon * math.fsum(nz * lg * lg) * pdf.dx


def pathway_kernel(x, rho: float, a: float, alpha_pw: float, delta_exp: float):
    """Unnormalised pathway density ``x^rho [1 - a(1-alpha) x^delta]^(1/(1-alpha))``.

    Covers all three branches: type-1 beta (``alpha < 1``, zero past the
    support end), type-2 beta (``1 < alpha < 2``) and the gamma limit
    ``x^rho exp(-a x^delta)`` at ``alpha == 1``.
    """
    if not (a > 0 and delta_exp > 0 and alpha_pw < 2):
        raise ParameterError("pathway kernel needs a > 0, delta > 0, alpha < 2")
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    xp = x[pos]
    if alpha_pw == 1:
        out[pos] = xp**rho * np.exp(-a * xp**delta_exp)
    else:
        base = 1.0 - a * (1.0 - alpha_pw) * xp**delta_exp
        ok = base > 0
        vals = np.zeros_like(xp)
        vals[ok] = xp[ok] ** rho * base[ok] ** (1.0 / (1.0 - alpha_pw))
        out[pos] = vals
    return out


def pathway_normalizer_numeric(rho: float, a: float, alpha_pw: float, delta_exp: float) -> float:
    """Normalising constant ``1 / int kernel`` by adaptive quadrature (any branch)."""
    upper = (a * (1.0 - alpha_pw)) ** (-1.0 / delta_exp) if alpha_pw < 1 else np.inf
    val, _ = integrate.quad(lambda x: float(pathway_kernel(x, rho, a, alpha_pw, delta_exp)), 0.0, upper, limit=200)
    if not (val > 0 and math.isfinite(val)):
        raise ParameterError("pathway kernel is not integrable for these parameters")
    return 1.0 / val


@dataclass(frozen=True)
class PathwayDensity:
    """Normalised type-1 beta pathway density ``c1 x^rho [1 - a(1-alpha) x^delta]^(1/(1-alpha))``."""

    rho: float
    a: float
    alpha_pw: float
    delta_exp: float
    c1: float

    @property
    def support_end(self) -> float:
        return (self.a * (1.0 - self.alpha_pw)) ** (-1.0 / self.delta_exp)

    def __call__(self, x):
        return self.c1 * pathway_kernel(x, self.rho, self.a, self.alpha_pw, self.delta_exp)

    def euler_ratio(self, x):
        """``(2-alpha) f^(1-alpha) / (x^(rho(1-alpha)) [1 - a(1-alpha) x^delta])``.

        Constant on the interior of the support for the entropy maximiser.
        """
        x = np.asarray(x, dtype=float)
        q = 1.0 - self.alpha_pw
        bracket = 1.0 - self.a * q * x**self.delta_exp
        return (2.0 - self.alpha_pw) * self(x) ** q / (x ** (self.rho * q) * bracket)

    def to_pdf(self, n: int = 20000) -> SampledPdf:
        return SampledPdf.from_function(self, 0.0, self.support_end, self.support_end / n)


def pathway_density_make(rho: float, a: float, alpha_pw: float, delta_exp: float) -> PathwayDensity:
    """Build the normalised type-1 beta maximiser of the Mathai entropy (``alpha < 1``)."""
    if not alpha_pw < 1:
        raise ParameterError(f"closed-form normalisation needs alpha < 1, got {alpha_pw}")
    if not (rho > -1 and a > 0 and delta_exp > 0):
        raise ParameterError("need rho > -1, a > 0, delta > 0")
    q = 1.0 - alpha_pw
    s = (rho + 1.0) / delta_exp
    log_c1 = math.log(delta_exp) + s * math.log(a * q) - sc.betaln(s, (2.0 - alpha_pw) / q)
    return PathwayDensity(rho, a, alpha_pw, delta_exp, math.exp(log_c1))


def maximality_witness(
    density: PathwayDensity, n_perturb: int = 20, seed: int = 0, step: float = 1e-2, n_grid: int = 20000, modes: int = 8
) -> np.ndarray:
    """Entropy drops ``M(f1) - M(f1 + step*phi)`` for seeded perturbations ``phi``.

    Each ``phi = f1 * psi`` with ``psi`` a random trigonometric polynomial on
    the support, projected (in the ``f1``-weighted inner product) orthogonal to
    ``1``, ``x**(rho(1-alpha))`` and ``x**(rho(1-alpha)+delta)``, so the
    perturbed density keeps its mass and the moments of constraints
    (iii)-(iv); ``max|psi| = 1`` keeps it non-negative. All entries are
    ``>= 0`` when ``f1`` maximises the Mathai entropy.
    """
    if not 0 < step < 1:
        raise ParameterError(f"step must lie in (0, 1), got {step}")
    pdf = density.to_pdf(n_grid)
    x, f, dx = pdf.x, pdf.f, pdf.dx
    alpha = density.alpha_pw
    e1 = density.rho * (1.0 - alpha)
    basis = np.column_stack([np.ones_like(x), x**e1, x ** (e1 + density.delta_exp)])
    w = f * dx
    # orthonormal basis of the constraint span under <u, v> = sum u v f dx
    q, _ = np.linalg.qr(basis * np.sqrt(w)[:, None])
    rng = np.random.default_rng(seed)
    u = x / density.support_end
    base = continuous_entropy("mathai", alpha, pdf)
    drops = np.empty(n_perturb)
    for i in range(n_perturb):
        coef = rng.normal(size=(2, modes))
        k = np.arange(1, modes + 1)
        psi = np.cos(np.pi * np.outer(u, k)) @ coef[0] + np.sin(np.pi * np.outer(u, k)) @ coef[1]
        s = psi * np.sqrt(w)
        s -= q @ (q.T @ s)
        psi = s / np.sqrt(w, where=w > 0, out=np.ones_like(w))
        psi /= np.max(np.abs(psi))
        perturbed = SampledPdf(pdf.x0, dx, f * (1.0 + step * psi))
        drops[i] = base - continuous_entropy("mathai", alpha, perturbed)
    return drops

"""Generalized entropies, diffusion entropy analysis, the pathway fractional
integral operator and fractional relaxation kinetics."""

from .errors import DataError, DomainError, NonConvergenceError, ParameterError, PathwayEntropyError
from .special_functions import (
    BesselParams,
    WrightSeriesSpec,
    bessel_w,
    log_gamma,
    mittag_leffler,
    prabhakar,
    wright_eval,
)
from .entropy import (
    DiscreteDistribution,
    PathwayDensity,
    SampledPdf,
    continuous_entropy,
    discrete_entropy,
    gaussian_entropy_closed,
    gaussian_pdf,
    mathai_expansion,
    maximality_witness,
    pathway_density_make,
    pathway_kernel,
)
from .dea import (
    DiffusionEnsemble,
    EntropyCurve,
    Indicator,
    NoiseClass,
    NonstationaryFit,
    ScalingFit,
    build_ensemble,
    classify,
    entropy_curve,
    estimate_pdf,
    fit_delta,
    fit_nonstationary,
    generate,
    levy_walk_delta,
    variance_scaling,
)
from .pathway_operator import (
    OperatorImage,
    PathwayParams,
    cross_check,
    laplace_limit,
    pathway_bessel,
    pathway_integral_numeric,
    pathway_power,
    pathway_trig,
    riemann_liouville_numeric,
    rl_cos,
)
from .kinetics import (
    KineticsParams,
    conditional_density,
    exponential_decay,
    gamma_rate_density,
    mixture_integral,
    ml_decay,
    stretched_exponential,
    unconditional_density,
)

__version__ = "0.1.0"

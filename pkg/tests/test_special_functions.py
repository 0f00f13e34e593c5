import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathway_entropy.errors import DomainError, NonConvergenceError, ParameterError
from pathway_entropy.special_functions import (
    BesselParams,
    WrightSeriesSpec,
    _prabhakar_contour,
    bessel_w,
    log_gamma,
    mittag_leffler,
    prabhakar,
    wright_eval,
)


def mp_prabhakar(g, nu, mu, z, dps=60, terms=400):
    """Extended-precision series oracle."""
    with mp.workdps(dps):
        g, nu, mu, z = (mp.mpf(v) for v in (g, nu, mu, z))
        s = mp.mpf(0)
        for k in range(terms):
            s += mp.rf(g, k) * z**k / (mp.factorial(k) * mp.gamma(mu + nu * k))
        return float(s)


# -- log_gamma ----------------------------------------------------------------


@pytest.mark.parametrize("x, expected", [(0.5, 0.5723649429247001), (1.0, 0.0), (5.0, math.log(24.0))])
def test_log_gamma_examples(x, expected):
    assert log_gamma(x) == pytest.approx(expected, rel=1e-13, abs=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
def test_log_gamma_domain(x):
    with pytest.raises(DomainError):
        log_gamma(x)


def test_log_gamma_matches_mpmath():
    for x in np.geomspace(1e-3, 1e3, 37):
        assert log_gamma(x) == pytest.approx(float(mp.loggamma(x)), rel=1e-13, abs=1e-14)


# -- wright_eval ------------------------------------------------------------------


def test_wright_only_first_term_at_zero():
    rho, z0 = 1.5, 2.0
    spec = WrightSeriesSpec([(rho, 2)], [(0.5, 1), (z0 + rho + 1, 2)])
    expected = math.gamma(rho) / (math.gamma(0.5) * math.gamma(z0 + rho + 1))
    assert wright_eval(spec, 0.0) == pytest.approx(expected, rel=1e-15)


def test_wright_exponential():
    assert wright_eval(WrightSeriesSpec([(1, 1)], [(1, 1)]), 1.0) == pytest.approx(math.e, rel=1e-14)


def test_wright_sine_chain():
    # sqrt(pi) x * 1Psi2[(1,2);(1/2,1),(2,2) | -x^2/4] = sin x  (x = 1)
    spec = WrightSeriesSpec([(1, 2)], [(0.5, 1), (2, 2)])
    with mp.workdps(40):
        oracle = sum(
            mp.gamma(1 + 2 * k) / (mp.gamma(0.5 + k) * mp.gamma(2 + 2 * k)) * mp.mpf(-0.25) ** k / mp.factorial(k)
            for k in range(200)
        )
    val = wright_eval(spec, -0.25)
    assert val == pytest.approx(float(oracle), rel=1e-14)
    assert math.sqrt(math.pi) * val == pytest.approx(math.sin(1.0), rel=1e-14)


def test_wright_convergence_condition_rejected():
    with pytest.raises(ParameterError):
        WrightSeriesSpec([(1, 2), (1, 1)], [(1, 1)])  # 1 - 3 = -2 < -1


@pytest.mark.parametrize("upper, lower", [([(-1, 1)], [(1, 1)]), ([(1, 0)], [(1, 1)]), ([(1, 1)], [(0, 1)])])
def test_wright_positive_arguments_required(upper, lower):
    with pytest.raises(ParameterError):
        WrightSeriesSpec(upper, lower)


def test_wright_boundary_case_has_finite_radius():
    spec = WrightSeriesSpec([(1.5, 2)], [(0.5, 1)])
    assert spec.radius == pytest.approx(0.25)
    with pytest.raises(DomainError):
        wright_eval(spec, 0.3)


def test_wright_cap_reached():
    with pytest.raises(NonConvergenceError):
        # exp(450) needs ~600 terms
        wright_eval(WrightSeriesSpec([(1, 1)], [(1, 1)]), 450.0)


def test_wright_equals_mittag_leffler():
    # 1Psi1[(1,1);(beta,alpha)] = E_{alpha,beta}; both series cancel at
    # z = -5 (largest term ~1e3), hence the absolute tolerance
    alpha, beta = 0.7, 1.3
    spec = WrightSeriesSpec([(1, 1)], [(beta, alpha)])
    for z in np.linspace(-5, 5, 20):
        assert wright_eval(spec, z) == pytest.approx(mittag_leffler(alpha, beta, z), rel=1e-12, abs=1e-10)


def test_wright_log_scale_prefactor_large_gamma():
    # Gamma(1 + z0) with z0 ~ 2e4 overflows alone; folded into the terms it does not
    z0 = 2e4
    spec = WrightSeriesSpec([(1.0, 2)], [(0.5, 1), (z0 + 2.0, 2)])
    val = wright_eval(spec, -1e6, log_scale=math.lgamma(1 + z0))
    with mp.workdps(50):
        oracle = sum(
            mp.gamma(1 + z0) * mp.gamma(1 + 2 * k) / (mp.gamma(0.5 + k) * mp.gamma(z0 + 2 + 2 * k))
            * mp.mpf(-1e6) ** k / mp.factorial(k)
            for k in range(60)
        )
    assert val == pytest.approx(float(oracle), rel=1e-11)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.3, 3.0), st.floats(0.3, 3.0), st.floats(-4.0, 4.0))
def test_truncation_monotonicity(a, b, z):
    spec = WrightSeriesSpec([(a, 1.0)], [(b, 1.5)])
    tol = 1e-8
    coarse = wright_eval(spec, z, tol)
    fine = wright_eval(spec, z, tol / 2)
    assert abs(coarse - fine) <= tol * (1 + abs(fine))


# -- mittag_leffler / prabhakar ---------------------------------------------------------


def test_ml_examples():
    assert mittag_leffler(1, 1, 1) == pytest.approx(math.e, rel=1e-14)
    assert mittag_leffler(2, 2, -1) == pytest.approx(math.sin(1), rel=1e-14)
    assert mittag_leffler(2, 1, 0) == 1.0


def test_ml_exponential_grid():
    for z in np.linspace(-10, 10, 41):
        assert mittag_leffler(1, 1, z) == pytest.approx(math.exp(z), rel=1e-10, abs=1e-10)


def test_ml_z_max():
    with pytest.raises(DomainError):
        mittag_leffler(0.5, 1, -60)
    with pytest.raises(ParameterError):
        mittag_leffler(0, 1, 0.5)


def test_prabhakar_examples():
    assert prabhakar(1, 2, 2, -1) == pytest.approx(math.sin(1), rel=1e-14)
    assert prabhakar(1, 1, 1, 1) == pytest.approx(math.e, rel=1e-14)
    # frozen oracle value: 200-term series at 60 digits; equals 1F1(2;1;-1/2) = exp(-1/2)/2
    oracle = mp_prabhakar(2, 1, 1, -0.5, terms=200)
    assert oracle == pytest.approx(0.3032653298563167, rel=1e-14)
    assert oracle == pytest.approx(math.exp(-0.5) / 2, rel=1e-14)
    assert prabhakar(2, 1, 1, -0.5) == pytest.approx(oracle, rel=1e-13)


def test_ml_half_at_minus_one():
    # E_{1/2}(-1) = exp(1) erfc(1)
    expected = float(mp.e * mp.erfc(1))
    assert expected == pytest.approx(0.42758357615580705, rel=1e-14)
    assert mittag_leffler(0.5, 1, -1) == pytest.approx(expected, rel=1e-13)
    assert mittag_leffler(0.5, 1, -1, method="contour") == pytest.approx(expected, rel=1e-11)


@pytest.mark.parametrize("g, nu, mu", [(1, 0.5, 1), (2, 0.5, 1), (3, 1.0, 2), (0.5, 0.75, 1.5), (2, 0.5, 2)])
@pytest.mark.parametrize("x", [0.5, 3.0, 12.0])
def test_contour_matches_extended_series(g, nu, mu, x):
    oracle = mp_prabhakar(g, nu, mu, -x, dps=120, terms=900)
    assert _prabhakar_contour(g, nu, mu, x) == pytest.approx(oracle, rel=1e-9, abs=1e-13)


@pytest.mark.parametrize("g, nu, mu", [(1, 0.5, 1), (2, 0.5, 1), (3, 1.0, 2), (0.5, 0.75, 1.5), (2, 0.5, 2)])
@pytest.mark.parametrize("x", [3.0, 40.0, 150.0])
def test_contour_matches_talbot(g, nu, mu, x):
    # independent oracle: mpmath's Talbot inversion at 30 digits
    with mp.workdps(30):
        oracle = float(mp.invertlaplace(lambda s: s ** (nu * g - mu) * (s**nu + x) ** (-g), 1, method="talbot"))
    assert _prabhakar_contour(g, nu, mu, x) == pytest.approx(oracle, rel=1e-9, abs=1e-13)


def test_contour_exact_erfc():
    # E_{1/2}(-x) = exp(x^2) erfc(x)
    for x in (0.5, 5.0, 40.0, 300.0):
        with mp.workdps(30):
            exact = float(mp.exp(x * x) * mp.erfc(x))
        assert _prabhakar_contour(1, 0.5, 1, x) == pytest.approx(exact, rel=1e-11)


def test_auto_dispatch():
    # |z| beyond Z_MAX is fine for the contour; series refuses it
    big = prabhakar(1, 0.5, 1, -200.0, method="auto")
    assert big == pytest.approx(float(mp.exp(200.0**2) * mp.erfc(200.0)), rel=1e-10)
    with pytest.raises(DomainError):
        prabhakar(1, 0.5, 1, 1.0, method="contour")
    with pytest.raises(ParameterError):
        prabhakar(1, 0.5, 1, 1.0, method="bogus")


# -- bessel_w -------------------------------------------------------------------------


def test_bessel_examples():
    assert bessel_w(BesselParams(0, 1, 1), 0.0) == 1.0
    assert bessel_w(BesselParams(1, 1, 1), 0.0) == 0.0
    assert bessel_w(BesselParams(-0.5, 1, 1), 1.0) == pytest.approx(math.sqrt(2 / math.pi) * math.cos(1), rel=1e-14)


def test_bessel_domain():
    with pytest.raises(DomainError):
        bessel_w(BesselParams(0.5, 1, 1), -1.0)
    assert bessel_w(BesselParams(2, 1, 1), -1.0) == pytest.approx(float(mp.besselj(2, -1)), rel=1e-14)
    with pytest.raises(ParameterError):
        BesselParams(-2, 1, 1)  # kappa = -1


@pytest.mark.parametrize("b", [1, 2])
@pytest.mark.parametrize("c", [0.5, 1.0, 2.0])
def test_bessel_reductions(b, c):
    for z in np.linspace(0.1, 5.0, 25):
        pre = (2.0 / z) ** (b / 2.0) / math.sqrt(math.pi)
        assert bessel_w(BesselParams(-b / 2, b, c * c), z) == pytest.approx(pre * math.cos(c * z), abs=1e-10)
        # the sine forms carry 1/c (printed without it; exact only for c = 1)
        assert bessel_w(BesselParams(1 - b / 2, b, c * c), z) == pytest.approx(pre * math.sin(c * z) / c, abs=1e-10)
        assert bessel_w(BesselParams(-b / 2, b, -c * c), z) == pytest.approx(pre * math.cosh(c * z), rel=1e-10)
        assert bessel_w(BesselParams(1 - b / 2, b, -c * c), z) == pytest.approx(pre * math.sinh(c * z) / c, rel=1e-10)


def test_bessel_against_mpmath():
    for p in (0.0, 0.5, 1.0, 2.5):
        for z in (0.3, 1.7, 6.0):
            assert bessel_w(BesselParams(p, 1, 1), z) == pytest.approx(float(mp.besselj(p, z)), rel=1e-12, abs=1e-15)
            assert bessel_w(BesselParams(p, 1, -1), z) == pytest.approx(float(mp.besseli(p, z)), rel=1e-12)

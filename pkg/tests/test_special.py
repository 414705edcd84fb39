"""Tests for Mittag-Leffler functions and form factors."""

import math
import sys
from pathlib import Path

import numpy as np
import pytest
from scipy.special import erfcx, gamma, rgamma

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from src.errors import DiracCaseError
from src.numerics import QuadratureSpec, integrate_interval
from src.special import (
    EvalResult,
    MLParams,
    SeriesConfig,
    density_cutoff,
    ml_density,
    ml_density_generalized,
    ml_density_values,
    ml_generalized,
    ml_standard,
    ml_standard_values,
    reciprocal_gamma,
)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -7.0, -1.0 - 1e-13])
def test_reciprocal_gamma_is_exact_zero_at_poles(x):
    assert reciprocal_gamma(x) == 0.0


@pytest.mark.parametrize(
    "x, expected",
    [(1.0, 1.0), (0.5, 1 / math.sqrt(math.pi)), (-0.5, -0.5 / math.sqrt(math.pi)), (5.0, 1 / 24.0)],
)
def test_reciprocal_gamma_values(x, expected):
    assert reciprocal_gamma(x) == pytest.approx(expected, rel=1e-14)


def test_ml_params_validation():
    with pytest.raises(ValueError, match="alpha"):
        MLParams(0.0)
    with pytest.raises(ValueError, match="alpha"):
        MLParams(1.5)
    with pytest.raises(ValueError, match="beta"):
        MLParams(0.7, 0.5)


def test_series_config_validation():
    with pytest.raises(ValueError, match="rel_tol"):
        SeriesConfig(rel_tol=0.0)
    with pytest.raises(ValueError, match="max_terms"):
        SeriesConfig(max_terms=4)


def test_negative_argument_rejected():
    with pytest.raises(ValueError, match="z must be"):
        ml_standard(0.5, -1.0)


@pytest.mark.parametrize("z", [0.0, 0.5, 1.0, 2.0, 7.5, 20.0])
def test_exponential_case(z):
    result = ml_generalized(MLParams(1.0, 1.0), z)
    assert result.converged
    assert abs(result.value - math.exp(-z)) <= 10 * 1e-14 * math.exp(-z)


def test_documented_examples():
    assert ml_generalized(MLParams(1.0, 1.0), 1.0).value == pytest.approx(0.36787944117144233, rel=1e-15)
    assert ml_generalized(MLParams(1.0, 1.0), 0.0).value == 1.0
    assert ml_generalized(MLParams(0.5, 1.0), 1.0).value == pytest.approx(0.4275835761558070, abs=1e-12)
    assert ml_standard(1.0, 2.0).value == pytest.approx(math.exp(-2.0), rel=1e-14)
    assert ml_standard(0.5, 4.0).value == pytest.approx(erfcx(4.0), abs=1e-12)
    assert ml_standard(0.7, 0.0).value == 1.0


def test_generalized_with_beta_one_matches_standard():
    for z in (0.0, 0.3, 2.0, 6.0):
        assert ml_generalized(MLParams(0.6, 1.0), z) == ml_standard(0.6, z)


@pytest.mark.parametrize("z", [0.5, 3.0, 30.0])
def test_alpha_one_beta_two_closed_form(z):
    # F_12(z) = (1 - exp(-z)) / z
    result = ml_generalized(MLParams(1.0, 2.0), z)
    assert result.method == "kummer"
    assert result.value == pytest.approx(-math.expm1(-z) / z, rel=1e-13)


def test_half_order_matches_erfc_oracle():
    z = np.linspace(0.0, 4.0, 81)
    assert np.max(np.abs(ml_standard_values(0.5, z) - erfcx(z))) < 1e-9


def test_large_argument_switches_to_integral():
    result = ml_standard(0.5, 4.0)
    assert isinstance(result, EvalResult)
    assert result.method == "integral"
    assert result.converged


@pytest.mark.parametrize("alpha", [0.9, 0.95])
@pytest.mark.parametrize("z", [5.0, 6.0])
def test_integral_path_near_alpha_one(alpha, z):
    # terms stay below ~1e2 here, so exact summation of the raw series is a valid reference
    reference = math.fsum((-z) ** k * float(rgamma(alpha * k + 1.0)) for k in range(200))
    result = ml_standard(alpha, z)
    assert result.method == "integral"
    assert result.value == pytest.approx(reference, rel=1e-10)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7, 0.9, 1.0])
def test_standard_is_strictly_decreasing(alpha):
    values = ml_standard_values(alpha, np.linspace(0.0, 10.0, 101))
    assert np.all(np.diff(values) < 0)
    assert np.all(values > 0)


def test_values_match_scalar_path():
    z = np.array([0.0, 0.7, 3.0, 9.0])
    expected = [ml_standard(0.4, zi).value for zi in z]
    np.testing.assert_allclose(ml_standard_values(0.4, z), expected, rtol=1e-13, atol=0)
    expected = [ml_density(0.4, zi).value for zi in z]
    np.testing.assert_allclose(ml_density_values(0.4, z), expected, rtol=1e-13, atol=0)


def test_generalized_beta_not_one_flags_cancellation():
    result = ml_generalized(MLParams(0.3, 2.0), 20.0)
    assert not result.converged


def test_density_examples():
    assert ml_density(0.5, 1.0).value == pytest.approx(math.exp(-0.25) / math.sqrt(math.pi), abs=1e-12)
    assert ml_density(0.5, 0.0).value == pytest.approx(1 / math.sqrt(math.pi), rel=1e-14)
    assert ml_density(0.3, 0.0).value == pytest.approx(1 / gamma(0.7), rel=1e-14)


def test_half_order_density_closed_form():
    z = np.linspace(0.0, 6.0, 121)
    closed = np.exp(-(z**2) / 4.0) / math.sqrt(math.pi)
    assert np.max(np.abs(ml_density_values(0.5, z) - closed)) <= 1e-10


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7, 0.9])
def test_density_nonnegative(alpha):
    z = np.linspace(0.0, density_cutoff(alpha), 200)
    assert np.all(ml_density_values(alpha, z) >= -1e-12)


@pytest.mark.parametrize("alpha", [0.0, 1.0])
def test_density_rejects_alpha_outside_open_interval(alpha):
    with pytest.raises(ValueError, match="0 < alpha < 1"):
        ml_density(alpha, 1.0)


def test_density_beyond_cutoff_is_flagged():
    result = ml_density(0.5, density_cutoff(0.5) + 1.0)
    assert not result.converged
    assert 0.0 <= result.value < 1e-15


@pytest.mark.parametrize("alpha, expected", [(0.3, 26.5), (0.5, 13.4), (0.7, 5.8), (0.9, 2.02)])
def test_density_cutoff_values(alpha, expected):
    assert density_cutoff(alpha) == pytest.approx(expected, rel=0.01)


def _normalization(alpha, weight=lambda z: 1.0):
    def integrand(v):
        z = v**4
        return 4.0 * v**3 * ml_density_values(alpha, z) * weight(z)

    return integrate_interval(integrand, 0.0, density_cutoff(alpha) ** 0.25, QuadratureSpec())


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7, 0.9])
def test_density_normalization(alpha):
    assert abs(_normalization(alpha) - 1.0) < 1e-8


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7])
@pytest.mark.parametrize("p", [0.5, 1.0, 2.0, 5.0])
def test_density_laplace_property(alpha, p):
    transform = _normalization(alpha, lambda z: np.exp(-p * z))
    assert abs(transform - ml_standard(alpha, p).value) < 1e-8


def test_generalized_density_closed_forms():
    assert ml_density_generalized(MLParams(1.0, 2.0), 0.5).value == 1.0
    assert ml_density_generalized(MLParams(1.0, 3.0), 2.0).value == 0.0
    assert ml_density_generalized(MLParams(1.0, 3.0), 0.25).value == pytest.approx(1.5)
    assert ml_density_generalized(MLParams(0.5, 0.5), 0.0).value == 0.0


def test_generalized_density_dirac_case():
    with pytest.raises(DiracCaseError):
        ml_density_generalized(MLParams(1.0, 1.0), 0.5)
    with pytest.raises(ValueError):
        ml_density_generalized(MLParams(1.0, 1.0), 0.5)


def test_generalized_density_beta_one_matches_density():
    for x in (0.0, 0.4, 1.5):
        assert ml_density_generalized(MLParams(0.6, 1.0), x).value == pytest.approx(ml_density(0.6, x).value, abs=1e-14)


def test_generalized_density_laplace_property():
    params = MLParams(0.5, 1.5)
    transform = integrate_interval(lambda x: math.exp(-x) * ml_density_generalized(params, x).value, 0.0, 8.0)
    assert abs(transform - ml_generalized(params, 1.0).value) < 1e-9


def test_generalized_density_blowup_is_flagged():
    assert ml_density_generalized(MLParams(0.5, 1.5), 2.0).converged
    assert not ml_density_generalized(MLParams(0.5, 1.5), 20.0).converged

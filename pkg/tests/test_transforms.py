"""Tests for Laplace / Mellin transforms, the fractional integral and the transform identities."""

import math
import sys
from pathlib import Path

import numpy as np
import pytest
from scipy.special import gamma

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from src.errors import DivergentStripError, RangeExceededError
from src.numerics import (
    TimeFunction,
    check_lemma1,
    check_lemma2,
    default_s_grid,
    laplace,
    mellin,
    mellin_factor,
    mellin_from_laplace,
    riemann_liouville,
)
from src.numerics.quadrature import integrate_interval
from src.special import ml_density_values, ml_standard_values

E_HALF_AT_ONE = 0.4275835761558070


def exp_decay():
    return TimeFunction(lambda t: np.exp(-np.asarray(t, dtype=float)), label="exp(-t)")


def constant():
    return TimeFunction(lambda t: np.ones_like(np.asarray(t, dtype=float)), label="1")


def power(mu):
    return TimeFunction(lambda t: np.asarray(t, dtype=float) ** mu, label=f"t^{mu}")


def scalar_extension(alpha):
    return TimeFunction(lambda t: ml_standard_values(alpha, np.asarray(t, dtype=float) ** alpha), label="E(-t^a)")


def test_time_function_validation_and_call():
    with pytest.raises(ValueError, match="callable"):
        TimeFunction(3.0)
    with pytest.raises(ValueError, match="t_max"):
        TimeFunction(np.exp, t_max=0.0)
    f = TimeFunction(math.exp)
    assert f(1.0) == pytest.approx(math.e)
    assert f(np.array([0.0, 1.0])).shape == (2,)


def test_laplace_examples():
    assert laplace(exp_decay(), 1.0) == pytest.approx(0.5, abs=1e-10)
    assert laplace(constant(), 2.0) == pytest.approx(0.5, abs=1e-10)
    density = TimeFunction(lambda t: ml_density_values(0.5, t), label="f_1/2")
    assert laplace(density, 1.0) == pytest.approx(E_HALF_AT_ONE, abs=1e-9)


def test_laplace_rejects_nonpositive_p():
    with pytest.raises(ValueError, match="p must be positive"):
        laplace(exp_decay(), 0.0)


def test_laplace_respects_t_max():
    short = TimeFunction(np.exp, t_max=5.0)
    with pytest.raises(RangeExceededError):
        laplace(short, 1.0)


def test_mellin_examples():
    assert mellin(exp_decay(), 0.5) == pytest.approx(math.sqrt(math.pi), abs=1e-9)
    density = TimeFunction(lambda t: ml_density_values(0.5, t), label="f_1/2")
    assert mellin(density, 0.5) == pytest.approx(gamma(0.5) / gamma(0.75), abs=1e-8)
    box = TimeFunction(lambda t: np.where(np.asarray(t) <= 1.0, 1.0, 0.0), label="box")
    assert mellin(box, 0.5) == pytest.approx(2.0, abs=1e-10)


@pytest.mark.parametrize("s", [0.0, 1.0, -0.2, 1.5])
def test_mellin_outside_supported_strip(s):
    with pytest.raises(DivergentStripError):
        mellin(exp_decay(), s)


def test_mellin_divergent_integrand():
    # t^(s-1) * t^0.5 grows without bound
    with pytest.raises(DivergentStripError):
        mellin(power(0.5), 0.5)


@pytest.mark.parametrize("s", [0.3, 0.5, 0.7])
def test_mellin_laplace_consistency(s):
    direct = mellin(exp_decay(), s)
    assert direct == pytest.approx(gamma(s), abs=1e-9)
    assert abs(mellin_from_laplace(exp_decay(), s) - direct) < 1e-6


def test_riemann_liouville_examples():
    assert riemann_liouville(constant(), 0.5, 1.0) == pytest.approx(1.0 / gamma(1.5), abs=1e-12)
    assert riemann_liouville(power(1.0), 1.0, 2.0) == pytest.approx(2.0, abs=1e-12)
    assert riemann_liouville(power(1.0), 0.5, 1.0) == pytest.approx(gamma(2.0) / gamma(2.5), abs=1e-12)


def test_riemann_liouville_order_one_is_plain_integral():
    f = TimeFunction(lambda t: np.cos(3.0 * np.asarray(t)) + np.asarray(t) ** 2)
    plain = integrate_interval(f, 0.0, 1.7)
    assert abs(riemann_liouville(f, 1.0, 1.7) - plain) < 1e-10


@pytest.mark.parametrize("mu", [0, 1, 2])
@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.9])
@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_riemann_liouville_power_rule(mu, alpha, t):
    expected = gamma(mu + 1.0) / gamma(mu + 1.0 + alpha) * t ** (mu + alpha)
    assert abs(riemann_liouville(power(mu), alpha, t) - expected) < 1e-8


def test_riemann_liouville_validation():
    with pytest.raises(ValueError, match="alpha"):
        riemann_liouville(constant(), 1.2, 1.0)
    with pytest.raises(ValueError, match="t must be positive"):
        riemann_liouville(constant(), 0.5, 0.0)


@pytest.mark.parametrize("alpha", [0.5, 0.7])
def test_lemma1_scalar_pair(alpha):
    assert check_lemma1(exp_decay(), scalar_extension(alpha), alpha, [1.0, 2.0]) < 1e-6


def test_lemma1_trivial_cases():
    assert check_lemma1(exp_decay(), exp_decay(), 1.0, [0.5, 1.0, 3.0]) < 1e-10
    assert check_lemma1(constant(), constant(), 0.5, [1.0]) < 1e-10


def test_lemma1_validation():
    with pytest.raises(ValueError, match="p_grid"):
        check_lemma1(exp_decay(), exp_decay(), 1.0, [])


@pytest.mark.parametrize("alpha", [0.5, 0.7])
def test_lemma2_scalar_pair(alpha):
    assert check_lemma2(exp_decay(), scalar_extension(alpha), alpha) < 1e-5


def test_lemma2_single_point():
    assert check_lemma2(exp_decay(), scalar_extension(0.5), 0.5, [0.25]) < 1e-6


def test_lemma2_identity_case():
    assert check_lemma2(exp_decay(), exp_decay(), 1.0, [0.5]) < 1e-10


def test_lemma2_right_side_from_gamma_oracle():
    # M[exp(-t)](s) = Gamma(s), so the right-hand side is known in closed form
    s, alpha = 0.3, 0.6
    right = mellin_factor(alpha, s) * gamma(s / alpha)
    assert mellin(scalar_extension(alpha), s) == pytest.approx(right, rel=1e-6)


def test_lemma2_strip_violation():
    with pytest.raises(DivergentStripError):
        check_lemma2(exp_decay(), scalar_extension(0.5), 0.5, [0.6])


def test_default_s_grid():
    assert default_s_grid(0.5) == [0.125, 0.25, 0.375]
    assert all(0.0 < s < 1.0 for s in default_s_grid(1.0))

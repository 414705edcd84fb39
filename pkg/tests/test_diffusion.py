"""Tests for the classical and fractional heat kernels."""

import math
import sys
from pathlib import Path

import numpy as np
import pytest
from scipy.special import gamma

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from src.errors import SingularOriginError, StripViolationError
from src.models import (
    KernelQuery,
    frac_heat_kernel,
    frac_heat_kernel_1d_closed,
    frac_heat_kernel_values,
    frac_kernel_mellin_closed,
    heat_kernel,
    heat_kernel_values,
    mass_check,
    subordinate_kernel,
    tabulate_frac_kernel,
)
from src.numerics import TimeFunction, mellin


@pytest.mark.parametrize(
    "kwargs, match",
    [
        ({"r": -1.0, "t": 1.0}, "r must be"),
        ({"r": 1.0, "t": 0.0}, "t must be"),
        ({"r": 1.0, "t": 1.0, "n": 0}, "n must be"),
        ({"r": 1.0, "t": 1.0, "n": 11}, "n must be"),
        ({"r": 1.0, "t": 1.0, "n": 1.5}, "n must be"),
        ({"r": 1.0, "t": 1.0, "n": True}, "n must be"),
        ({"r": 1.0, "t": 1.0, "alpha": 0.0}, "alpha"),
    ],
)
def test_query_validation(kwargs, match):
    with pytest.raises(ValueError, match=match):
        KernelQuery(**kwargs)


def test_heat_kernel_examples():
    assert heat_kernel(KernelQuery(0.0, 1.0, 1)) == pytest.approx(0.2820948, abs=1e-7)
    assert heat_kernel(KernelQuery(2.0, 1.0, 1)) == pytest.approx(0.1037769, abs=1e-7)
    assert heat_kernel(KernelQuery(0.0, 0.25, 3)) == pytest.approx(math.pi**-1.5, rel=1e-14)


def test_heat_kernel_values_at_time_zero():
    values = heat_kernel_values(np.array([0.0, 1.0]), 0.0)
    assert values[0] == math.inf
    assert values[1] == 0.0


def test_heat_kernel_decreasing_in_r():
    values = heat_kernel_values(np.linspace(0.0, 5.0, 51), 0.7, 2)
    assert np.all(values > 0)
    assert np.all(np.diff(values) < 0)


def test_alpha_one_is_exact():
    q = KernelQuery(1.0, 1.0, 1, 1.0)
    result = frac_heat_kernel(q)
    assert result.value == heat_kernel(q)
    assert result.value == pytest.approx(math.exp(-0.25) / math.sqrt(4 * math.pi), abs=1e-7)
    r = np.array([0.0, 0.5, 3.0])
    np.testing.assert_array_equal(frac_heat_kernel_values(r, 2.0, 1, 1.0), heat_kernel_values(r, 2.0, 1))


def test_singular_origin():
    with pytest.raises(SingularOriginError):
        frac_heat_kernel(KernelQuery(0.0, 1.0, 2, 0.5))
    with pytest.raises(SingularOriginError):
        frac_heat_kernel_values([0.0, 1.0], 1.0, 3, 0.7)
    # n = 1 stays finite at the origin
    value = frac_heat_kernel(KernelQuery(0.0, 1.0, 1, 0.5)).value
    assert value == pytest.approx(frac_heat_kernel_1d_closed(0.0, 1.0, 0.5), abs=1e-9)


@pytest.mark.parametrize("alpha", [0.4, 0.5, 0.8])
def test_one_dimensional_closed_form(alpha):
    for r in (0.0, 0.3, 1.0, 2.5):
        for t in (0.5, 2.0):
            numeric = frac_heat_kernel_values(r, t, 1, alpha)
            assert float(numeric) == pytest.approx(frac_heat_kernel_1d_closed(r, t, alpha), abs=1e-8)


def test_scalar_and_vector_paths_agree():
    q = KernelQuery(0.8, 1.5, 2, 0.6)
    value = frac_heat_kernel(q).value
    assert float(frac_heat_kernel_values(0.8, 1.5, 2, 0.6)) == pytest.approx(value, rel=1e-13)


def test_subordinate_kernel_matches_frac_kernel():
    kernel = subordinate_kernel(lambda y, z: heat_kernel_values(abs(y), z), 0.5, 1.0)
    assert kernel(1.0) == pytest.approx(frac_heat_kernel(KernelQuery(1.0, 1.0, 1, 0.5)).value, rel=1e-13)


@pytest.mark.parametrize("alpha", [0.5, 0.7])
@pytest.mark.parametrize("t", [0.3, 4.0])
def test_scaling_law(alpha, t):
    r = np.array([0.2, 1.0, 2.0])
    lhs = frac_heat_kernel_values(r, t, 1, alpha)
    rhs = t ** (-0.5 * alpha) * frac_heat_kernel_values(r * t ** (-0.5 * alpha), 1.0, 1, alpha)
    np.testing.assert_allclose(lhs, rhs, rtol=1e-12)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.9])
def test_positive_and_decreasing(alpha):
    values = frac_heat_kernel_values(np.linspace(0.0, 3.0, 31), 1.0, 1, alpha)
    assert np.all(values > 0)
    assert np.all(np.diff(values) < 0)


def test_mellin_closed_examples():
    base = frac_kernel_mellin_closed(1.0, 0.2, 1, 0.5)
    expected = 2.0 * math.pi**-0.5 * 2.0**-0.8 * gamma(0.1) * gamma(0.6) / gamma(0.8)
    assert base == pytest.approx(expected, rel=1e-13)
    assert frac_kernel_mellin_closed(2.0, 0.2, 1, 0.5) == pytest.approx(base * 2.0**-0.2, rel=1e-13)
    assert frac_kernel_mellin_closed(1.0, 1e-9, 2, 0.7) == pytest.approx(1.0 / (0.7 * math.pi), rel=1e-6)


@pytest.mark.parametrize("s, n, alpha", [(0.25, 1, 0.5), (0.0, 1, 0.5), (0.8, 3, 0.7), (-0.1, 2, 0.5)])
def test_mellin_closed_strip(s, n, alpha):
    with pytest.raises(StripViolationError):
        frac_kernel_mellin_closed(1.0, s, n, alpha)


def test_mellin_closed_rejects_origin():
    with pytest.raises(ValueError, match="r must be"):
        frac_kernel_mellin_closed(0.0, 0.1, 1, 0.5)


@pytest.mark.parametrize("alpha", [0.5, 0.7])
@pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("s", [0.1, 0.2, 0.3])
def test_mellin_cross_check(alpha, r, s):
    if s >= 0.5 * alpha:
        pytest.skip("outside the convergence strip")
    kernel = TimeFunction(lambda t: frac_heat_kernel_values(r, t, 1, alpha), label="G_alpha")
    numeric = mellin(kernel, s)
    closed = frac_kernel_mellin_closed(r, s, 1, alpha)
    assert abs(numeric / closed - 1.0) < 1e-4


def test_mass_alpha_one():
    assert abs(mass_check(1.0, 1, 1.0) - 1.0) < 1e-10


@pytest.mark.parametrize("t", [1.0, 2.0])
@pytest.mark.parametrize("alpha", [0.5, 0.7])
def test_mass_conservation(t, alpha):
    assert abs(mass_check(t, 1, alpha) - 1.0) < 1e-6


def test_mass_check_one_dimension_only():
    with pytest.raises(ValueError, match="n = 1"):
        mass_check(1.0, 2, 0.5)


def test_tabulate():
    frame = tabulate_frac_kernel([0.5, 1.0], [1.0, 2.0, 3.0], 1, 0.5)
    assert list(frame.columns) == ["r", "t", "n", "alpha", "value", "mass_used"]
    assert len(frame) == 6
    assert frame["t"].tolist() == [1.0, 1.0, 2.0, 2.0, 3.0, 3.0]
    assert frame["r"].tolist() == [0.5, 1.0] * 3
    assert (frame["value"] > 0).all()
    assert ((frame["mass_used"] - 1.0).abs() < 1e-3).all()

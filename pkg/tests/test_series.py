import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import exp_series
from zerocircle.errors import ZeroConstantTerm
from zerocircle.series import (
    TruncatedSeries,
    derivative,
    fit_growth_bound,
    log_derivative,
    scale_argument,
    series_from_function,
    series_mul,
    series_reciprocal,
)

cplx = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


def series_strategy(min_order=0, max_order=12, lead_min=0.1):
    return st.lists(cplx, min_size=min_order + 1, max_size=max_order + 1).filter(
        lambda c: abs(c[0]) >= lead_min
    ).map(TruncatedSeries)


def test_mul_telescoping():
    p = series_mul(TruncatedSeries([1, 1, 0]), TruncatedSeries([1, -1, 0]))
    np.testing.assert_array_equal(p.coeffs, [1, 0, -1])
    assert p.order == 2


def test_mul_identity_and_min_order():
    f = TruncatedSeries([1, 2, 3, 4])
    assert series_mul(f, TruncatedSeries([1, 0, 0, 0])).allclose(f, 0)
    assert series_mul(f, TruncatedSeries([1, 0])).order == 1


def test_exp_times_exp_minus():
    J = 15
    a = exp_series(J)
    b = exp_series(J, -1.0)
    # direct convolution of 1/n! against (-1)^n/n!: sum_k (-1)^k/(k!(n-k)!) = (1-1)^n/n!
    oracle = [sum((-1) ** k / (math.factorial(k) * math.factorial(n - k)) for k in range(n + 1)) for n in range(J + 1)]
    np.testing.assert_allclose(oracle, np.eye(1, J + 1)[0], atol=1e-15)
    np.testing.assert_allclose(series_mul(a, b).coeffs, oracle, atol=1e-15)


def test_reciprocal_examples():
    np.testing.assert_allclose(series_reciprocal(TruncatedSeries([1, -1, 0, 0, 0])).coeffs, np.ones(5))
    np.testing.assert_allclose(series_reciprocal(TruncatedSeries([1])).coeffs, [1])
    expected = [0.5 * (-0.5) ** n for n in range(8)]
    np.testing.assert_allclose(series_reciprocal(TruncatedSeries.from_coeffs([2, 1], 7)).coeffs, expected, atol=1e-16)


def test_reciprocal_zero_constant():
    with pytest.raises(ZeroConstantTerm):
        series_reciprocal(TruncatedSeries([0, 1]))


def test_log_derivative_examples():
    np.testing.assert_array_equal(log_derivative(TruncatedSeries([1, 0, 0])).coeffs, [0, 0])
    ld = log_derivative(exp_series(10))
    assert ld.order == 9
    np.testing.assert_allclose(ld.coeffs, np.eye(1, 10)[0], atol=1e-15)
    # -1/(1-z)
    np.testing.assert_allclose(log_derivative(TruncatedSeries.from_coeffs([1, -1], 6)).coeffs, -np.ones(6))
    with pytest.raises(ZeroConstantTerm):
        log_derivative(TruncatedSeries([0, 1]))


def test_fit_growth_bound_examples():
    a = TruncatedSeries([2.0**n for n in range(20)])
    b = fit_growth_bound(a, 0.5, 0.01)
    assert b.kappa == pytest.approx(2.01)
    assert b.C == 1.0  # max_n (2/2.01)^n = 1 at n = 0
    z = fit_growth_bound(TruncatedSeries(np.zeros(5)), 0.5, 0.05)
    assert z.C == 1.0 and z.kappa == pytest.approx(2.05)
    assert fit_growth_bound(a, 1.5, 0.1).kappa == pytest.approx(1.1)


@given(st.lists(cplx, min_size=1, max_size=40), st.floats(0.05, 3), st.floats(0.001, 0.5))
def test_growth_bound_invariant(coeffs, r, delta):
    a = TruncatedSeries(np.array(coeffs) * 10.0 ** np.arange(len(coeffs)) / 10)
    b = fit_growth_bound(a, r, delta)
    n = np.arange(a.coeffs.size)
    assert np.all(np.abs(a.coeffs) <= b.C * b.kappa**n)
    assert b.C >= 1 and b.kappa > 1


def test_scale_argument():
    f = TruncatedSeries([1, 1])
    np.testing.assert_array_equal(scale_argument(f, 0.5).coeffs, [1, 0.5])
    g = TruncatedSeries([3, 1, 4, 1, 5])
    np.testing.assert_array_equal(scale_argument(g, 1).coeffs, g.coeffs)
    np.testing.assert_array_equal(scale_argument(g, 0).coeffs, [3, 0, 0, 0, 0])


def test_derivative():
    np.testing.assert_array_equal(derivative(TruncatedSeries([5, 1, 2, 3])).coeffs, [1, 4, 9])


def test_series_from_function_exp():
    s = series_from_function(np.exp, 20, 0.8)
    np.testing.assert_allclose(s.coeffs, exp_series(20).coeffs, atol=1e-13)


@settings(max_examples=200)
@given(series_strategy())
def test_mul_reciprocal_is_unit(a):
    p = series_mul(a, series_reciprocal(a))
    np.testing.assert_allclose(p.coeffs, np.eye(1, a.order + 1)[0], atol=1e-12 * _scale(a))


def _scale(a):
    # coefficients of 1/a grow like (max|a_k|/|a_0|)^n; rounding in the product scales with that
    return max(1.0, float(np.max(np.abs(series_reciprocal(a).coeffs)) * np.max(np.abs(a.coeffs))))


@settings(max_examples=200)
@given(series_strategy(min_order=1), series_strategy(min_order=1))
def test_log_derivative_additive(f, g):
    lhs = log_derivative(series_mul(f, g))
    rhs = log_derivative(f) + log_derivative(g)
    scale = max(1.0, float(np.max(np.abs(lhs.coeffs))))
    assert lhs.allclose(rhs, atol=1e-10 * scale)

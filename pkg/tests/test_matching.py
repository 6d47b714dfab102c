import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import exp_series
from oracles import expanded_product, product_logderiv
from zerocircle.errors import BudgetExceeded, DivergentTail, InvalidR, PoleHit
from zerocircle.grids import polar_grid, sup_error
from zerocircle.matching import (
    CircleFactor,
    FactorProduct,
    approximate,
    approximate_to_tolerance,
    complex_log1p,
    evaluate_product,
    expand_product,
    formal_match_direct,
    logderiv_of_factors,
    match_factors,
    tail_bound,
    verify_nu_bound,
)
from zerocircle.series import TruncatedSeries, fit_growth_bound, log_derivative


def random_product(rng, J, R=None, nu_max=3):
    factors = []
    for j in range(1, J + 1):
        xi, eta = np.exp(2j * np.pi * rng.random(2))
        factors.append(CircleFactor(j, complex(xi), complex(eta), int(rng.integers(0, nu_max + 1)), R))
    return FactorProduct(tuple(factors))


def test_single_factor_logderiv():
    fp = FactorProduct((CircleFactor(1, 1, 1, 1),))
    # g = (1+z)^2, g'/g = 2/(1+z)
    np.testing.assert_allclose(logderiv_of_factors(fp, 4).coeffs, 2 * (-1.0) ** np.arange(5))


def test_constant_target_first_coefficient():
    fp = match_factors(TruncatedSeries([0.75]), 1, denom_R=0.5)
    assert abs(logderiv_of_factors(fp, 0).coeffs[0] - 0.75) < 1e-15
    fp = match_factors(TruncatedSeries([3.5]), 1)
    f = fp.factors[0]
    assert f.nu == 3
    assert abs(f.nu * f.xi + f.eta - 3.5) < 1e-14


def test_zero_target():
    fp = match_factors(TruncatedSeries(np.zeros(8)), 8)
    np.testing.assert_allclose(logderiv_of_factors(fp, 7).coeffs, 0, atol=1e-14)


@pytest.mark.parametrize("R", [None, 0.25, 0.6])
def test_logderiv_matches_brute_force(rng, R):
    for _ in range(5):
        fp = random_product(rng, 6, R)
        np.testing.assert_allclose(logderiv_of_factors(fp, 10).coeffs, product_logderiv(fp, 10), atol=1e-11)


@pytest.mark.parametrize("R", [None, 0.3])
def test_expand_product_matches_brute_force(rng, R):
    fp = random_product(rng, 5, R)
    facs = [(f.j, f.xi, f.eta, f.nu) for f in fp.factors]
    oracle = np.array([complex(c) for c in expanded_product(facs, 12, R)])
    np.testing.assert_allclose(expand_product(fp, 12).coeffs, oracle, atol=1e-11)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 20), st.sampled_from([None, 0.25, 0.5]), st.integers(0, 2**32 - 1))
def test_match_reproduces_target(J, R, seed):
    rng = np.random.default_rng(seed)
    a = (rng.normal(size=J) + 1j * rng.normal(size=J)) * 2.0 ** np.arange(J)
    fp = match_factors(TruncatedSeries(a), J, R)
    got = logderiv_of_factors(fp, J - 1).coeffs
    assert np.all(np.abs(got - a) <= 1e-9 * np.maximum(1, np.abs(a)))
    for f in fp.factors:
        assert abs(abs(f.xi) - 1) < 1e-14 and abs(abs(f.eta) - 1) < 1e-14
    roots = fp.roots()
    assert roots.size == fp.degree
    np.testing.assert_allclose(np.abs(roots), 1, atol=1e-14)


@pytest.mark.parametrize("R", [None, 0.25])
def test_formal_match_direct_agrees_on_logderiv(R):
    f = exp_series(12)
    fp = formal_match_direct(f, 8, R)
    for c in fp.factors:
        assert abs(abs(c.xi) - 1) < 1e-13
    np.testing.assert_allclose(
        logderiv_of_factors(fp, 7).coeffs, log_derivative(f).coeffs[:8], atol=1e-10
    )


def test_roots_are_zeros_of_product(rng):
    fp = random_product(rng, 4, None, nu_max=1)
    fp = FactorProduct(tuple(f for f in fp.factors if f.nu > 0) or fp.factors[:1])
    poly = expand_product(fp, fp.degree).coeffs
    vals = np.polyval(poly[::-1], fp.roots())
    assert np.max(np.abs(vals)) < 1e-10


def test_evaluate_matches_expansion(rng):
    fp = random_product(rng, 4, 0.4).with_constant(2 - 1j)
    z = polar_grid(0.5, 6, 6)
    poly = expand_product(fp, 80).coeffs
    np.testing.assert_allclose(fp(z), np.polyval(poly[::-1], z), atol=1e-12)


def test_complex_log1p_tiny():
    x = 1e-20 + 1e-10j
    ref = complex(x) - x * x / 2
    assert abs(complex_log1p(x) - ref) < 1e-30


def test_pole_raises():
    fp = FactorProduct((CircleFactor(1, 1, 1, 1, 0.5),))
    with pytest.raises(PoleHit):
        evaluate_product(fp, -2.0)


def test_invalid_R():
    with pytest.raises(InvalidR):
        match_factors(TruncatedSeries([1.0]), 1, denom_R=1.0)


def test_tail_bound():
    assert tail_bound(10, 1.05, 0.0) == 0
    with pytest.raises(DivergentTail):
        tail_bound(10, 2.0, 0.6)
    vals = [tail_bound(J, 1.05, 0.4) for J in range(10, 41)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_nu_bound_exp():
    f = exp_series(40)
    b = fit_growth_bound(log_derivative(f), 1.0)
    rep = verify_nu_bound(approximate(f, 30), b)
    assert rep.holds and rep.Cprime >= 1


def test_approximate_exp_converges():
    pts = polar_grid(0.4)
    errs = [sup_error(approximate(exp_series(J + 2), J), np.exp, pts) for J in (6, 12, 24)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-9


def test_approximate_to_tolerance_and_budget():
    res = approximate_to_tolerance(np.exp, exp_series, 0.4, 1e-6)
    assert res.grid_error < 1e-6
    with pytest.raises(BudgetExceeded):
        approximate_to_tolerance(np.exp, exp_series, 0.9, 1e-14, J_max=8)

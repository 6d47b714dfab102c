import numpy as np
import pytest

from zerocircle.rmt import (
    char_poly,
    haar_unitary,
    logderiv_tuple,
    logderiv_tuples,
    sample_haar,
    sample_phases,
    tuple_histograms,
    wilson_interval,
    approx_probability,
)


def test_haar_is_unitary(rng):
    U = haar_unitary(5, rng, size=10)
    eye = np.eye(5)
    np.testing.assert_allclose(U @ np.conj(np.swapaxes(U, -1, -2)), np.broadcast_to(eye, U.shape), atol=1e-13)


def test_determinism_independent_of_count():
    a = sample_phases(4, 3, seed=7)
    b = sample_phases(4, 10, seed=7)
    np.testing.assert_array_equal(a, b[:3])
    np.testing.assert_array_equal(sample_haar(4, 7).phases, a[0])


def test_char_poly_matches_det(rng):
    s = sample_haar(6, 3)
    p = char_poly(s)
    assert p.coeffs.coeffs[0] == 1
    z = 0.3 - 0.2j
    direct = np.prod(1 - np.exp(-1j * s.phases) * z)
    assert abs(p(z) - direct) < 1e-13
    np.testing.assert_allclose(np.abs(p.roots()), 1, atol=1e-12)


def test_logderiv_tuple_first_entry():
    s = sample_haar(5, 11)
    p = char_poly(s)
    x = 0.4
    t = logderiv_tuple(p, x, 3)
    w = np.exp(-1j * s.phases)
    assert abs(t[0] - np.sum(-w / (1 - w * x))) < 1e-12
    batched = logderiv_tuples(s.phases[None, :], x, 3)[0]
    np.testing.assert_allclose(batched, t, atol=1e-12)


def test_logderiv_tuple_beyond_degree():
    p = char_poly(sample_haar(2, 1))
    t = logderiv_tuple(p, 0.2, 4)
    assert t[2] == 0 and t[3] == 0


def test_wilson():
    lo, hi = wilson_interval(50, 100)
    assert lo < 0.5 < hi
    assert wilson_interval(0, 10)[0] == 0
    assert wilson_interval(10, 10)[1] == pytest.approx(1)


def test_probability_bounds():
    one = lambda z: np.ones_like(z)
    certain = approx_probability(one, 0.1, 0.5, 4, 500, 0)
    assert certain.probability == 1.0  # (1.1)^4 - 1 < 0.5
    mid = approx_probability(one, 0.1, 0.1, 4, 2000, 0)
    assert 0 < mid.probability < 1
    assert mid.low <= mid.probability <= mid.high
    with pytest.raises(ValueError):
        approx_probability(one, 1.0, 0.1, 4, 10, 0)


def test_histogram_rows():
    rows = tuple_histograms(4, 0.5, 2, 200, 0, bins=10)
    assert len(rows) == 2 * 2 * 10
    assert sum(r[4] for r in rows if r[0] == 1 and r[1] == "re") == 200

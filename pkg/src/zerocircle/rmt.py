"""Characteristic polynomials of Haar-random unitary matrices.

``Lambda(z) = det(I - U^* z) = prod_k (1 - exp(-i theta_k) z)`` has all its
zeros on the unit circle and ``Lambda(0) = 1``.  The lab samples such
polynomials and measures how often one lands within ``eps`` of a given
target on a disc.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import stats

from .grids import polar_grid
from .series import TruncatedSeries

__all__ = [
    "EigenphaseSample",
    "CharPoly",
    "ProbabilityEstimate",
    "haar_unitary",
    "sample_haar",
    "sample_phases",
    "char_poly",
    "logderiv_tuple",
    "logderiv_tuples",
    "wilson_interval",
    "approx_probability",
    "tuple_histograms",
]

CHUNK = 4096


@dataclass(frozen=True)
class EigenphaseSample:
    N: int
    phases: np.ndarray
    seed: int


@dataclass(frozen=True)
class CharPoly:
    """Coefficients of ``Lambda``; ``coeffs[0] == 1``."""

    coeffs: TruncatedSeries

    @property
    def N(self) -> int:
        return self.coeffs.order

    def __call__(self, z):
        return self.coeffs(z)

    def roots(self) -> np.ndarray:
        return np.polynomial.polynomial.polyroots(self.coeffs.coeffs)


def haar_unitary(N: int, rng: np.random.Generator, size=None) -> np.ndarray:
    """Haar-distributed unitary matrices (a stack of them if ``size`` is given).

    QR of a complex Ginibre matrix, with the columns of ``Q`` rephased by
    the phases of ``diag(R)`` so the factorisation is unique.
    """
    shape = (N, N, 2) if size is None else (size, N, N, 2)
    # real and imaginary parts interleaved: matrix i depends only on the stream position
    g = rng.standard_normal(shape)
    Z = (g[..., 0] + 1j * g[..., 1]) / math.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R, axis1=-2, axis2=-1)
    return Q * (d / np.abs(d))[..., None, :]


def sample_phases(N: int, count: int, seed: int) -> np.ndarray:
    """Eigenphases in ``[0, 2 pi)`` of ``count`` Haar matrices, shape ``(count, N)``.

    Matrices come from one generator in order, so row ``i`` depends only on
    ``seed`` and ``i``.
    """
    out = np.empty((count, N))
    start = 0
    for phases in _phase_chunks(N, count, seed):
        out[start : start + len(phases)] = np.sort(np.mod(phases, 2 * np.pi), axis=-1)
        start += len(phases)
    return out


def _phase_chunks(N, count, seed):
    rng = np.random.default_rng(seed)
    for start in range(0, count, CHUNK):
        U = haar_unitary(N, rng, size=min(CHUNK, count - start))
        yield np.angle(np.linalg.eigvals(U))


def sample_haar(N: int, seed: int) -> EigenphaseSample:
    """Eigenphases of one Haar-random ``U(N)`` matrix."""
    if N < 1:
        raise ValueError("N must be positive")
    return EigenphaseSample(N, sample_phases(N, 1, seed)[0], seed)


def _char_coeffs(phases: np.ndarray) -> np.ndarray:
    # rows of phases -> rows of coefficients of prod (1 - e^{-i theta} z)
    phases = np.atleast_2d(phases)
    M, N = phases.shape
    c = np.zeros((M, N + 1), dtype=complex)
    c[:, 0] = 1.0
    w = np.exp(-1j * phases)
    for k in range(N):
        c[:, 1 : k + 2] = c[:, 1 : k + 2] - w[:, k : k + 1] * c[:, : k + 1]
    return c


def char_poly(s: EigenphaseSample) -> CharPoly:
    """``Lambda(z) = det(I - U^* z)`` expanded in powers of ``z``."""
    return CharPoly(TruncatedSeries(_char_coeffs(np.asarray(s.phases))[0]))


def logderiv_tuple(p: CharPoly, x: float, n: int) -> np.ndarray:
    """``(Lambda'/Lambda, Lambda''/Lambda, ..., Lambda^(n)/Lambda)`` at ``x``."""
    c = p.coeffs.coeffs
    P = np.polynomial.polynomial
    base = P.polyval(x, c)
    out = np.empty(n, dtype=complex)
    d = c
    for k in range(n):
        d = P.polyder(d) if d.size > 1 else np.zeros(1, dtype=complex)
        out[k] = P.polyval(x, d) / base
    return out


def logderiv_tuples(phases: np.ndarray, x: float, n: int) -> np.ndarray:
    """:func:`logderiv_tuple` for every row of ``phases``; shape ``(rows, n)``."""
    c = _char_coeffs(phases)
    N = c.shape[1] - 1
    powers = x ** np.arange(N + 1)
    base = c @ powers
    out = np.empty((c.shape[0], n), dtype=complex)
    d = c
    for k in range(n):
        d = d[:, 1:] * np.arange(1, d.shape[1])
        if d.shape[1] == 0:
            out[:, k:] = 0
            break
        out[:, k] = (d @ powers[: d.shape[1]]) / base
    return out


@dataclass(frozen=True)
class ProbabilityEstimate:
    probability: float
    low: float
    high: float
    successes: int
    trials: int


def wilson_interval(successes: int, trials: int, level: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials == 0:
        return 0.0, 1.0
    z = stats.norm.ppf(0.5 + level / 2)
    p = successes / trials
    den = 1 + z * z / trials
    mid = (p + z * z / (2 * trials)) / den
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / den
    return max(0.0, mid - half), min(1.0, mid + half)


def sup_distances(f: Callable, r: float, N: int, trials: int, seed: int) -> np.ndarray:
    """``max |Lambda - f|`` over a 32 x 32 polar grid on ``|z| <= r``, per trial."""
    pts = polar_grid(r, 32, 32)
    target = np.asarray(f(pts), dtype=complex)
    V = np.vander(pts, N + 1, increasing=True)
    out = np.empty(trials)
    start = 0
    for phases in _phase_chunks(N, trials, seed):
        vals = _char_coeffs(phases) @ V.T
        out[start : start + len(phases)] = np.max(np.abs(vals - target[None, :]), axis=1)
        start += len(phases)
    return out


def approx_probability(
    f: Callable, r: float, eps: float, N: int, trials: int, seed: int, level: float = 0.95
) -> ProbabilityEstimate:
    """Fraction of Haar samples with ``|Lambda(z) - f(z)| < eps`` on ``|z| < r``.

    The sup is taken over a 32 x 32 polar grid, which slightly underestimates
    the true sup.  ``f(0)`` should be 1 since ``Lambda(0) = 1``.
    """
    if not 0 < r < 1:
        raise ValueError("r must lie in (0, 1)")
    d = sup_distances(f, r, N, trials, seed)
    k = int(np.count_nonzero(d < eps))
    lo, hi = wilson_interval(k, trials, level)
    return ProbabilityEstimate(k / trials, lo, hi, k, trials)


def tuple_histograms(N: int, x: float, n: int, samples: int, seed: int, bins: int = 50):
    """Histograms of real and imaginary parts of each tuple entry.

    Returns a list of rows ``(entry, part, bin_left, bin_right, count)``.
    """
    T = logderiv_tuples(sample_phases(N, samples, seed), x, n)
    rows = []
    for k in range(n):
        for part, vals in (("re", T[:, k].real), ("im", T[:, k].imag)):
            counts, edges = np.histogram(vals, bins=bins)
            for i, cnt in enumerate(counts):
                rows.append((k + 1, part, float(edges[i]), float(edges[i + 1]), int(cnt)))
    return rows

"""Truncated power series over the complex numbers.

A :class:`TruncatedSeries` stores the Taylor coefficients ``c_0 .. c_order``
of a function at 0.  Everything above ``order`` is *unknown*, so binary
operations keep the smaller of the two orders instead of zero-padding.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroConstantTerm

__all__ = [
    "TruncatedSeries",
    "GrowthBound",
    "series_mul",
    "series_reciprocal",
    "derivative",
    "log_derivative",
    "fit_growth_bound",
    "scale_argument",
    "series_from_function",
    "DEFAULT_DELTA",
]

DEFAULT_DELTA = 0.05


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients ``coeffs[n]`` of ``z**n`` for ``n = 0 .. order``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise ValueError("a truncated series needs at least one coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs, order=None):
        """Build from a coefficient list, optionally cut or zero-extended to ``order``.

        Zero-extension is only appropriate when the caller knows the
        function is a polynomial.
        """
        c = np.asarray(coeffs, dtype=complex).ravel()
        if order is not None:
            out = np.zeros(order + 1, dtype=complex)
            n = min(order + 1, c.size)
            out[:n] = c[:n]
            c = out
        return cls(c)

    @classmethod
    def constant(cls, value, order=0):
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = self.coeffs.copy()
            c[0] += other
            return TruncatedSeries(c)
        n = min(self.order, other.order) + 1
        return TruncatedSeries(self.coeffs[:n] + other.coeffs[:n])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __call__(self, z):
        """Evaluate the stored polynomial part at ``z`` (scalar or array)."""
        return np.polynomial.polynomial.polyval(z, self.coeffs)

    def allclose(self, other, atol=1e-12):
        n = min(self.order, other.order) + 1
        return bool(np.all(np.abs(self.coeffs[:n] - other.coeffs[:n]) <= atol))

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={np.array2string(self.coeffs, precision=4)})"


@dataclass(frozen=True)
class GrowthBound:
    """Geometric envelope ``|c_n| <= C * kappa**n``."""

    C: float
    kappa: float

    def envelope(self, n):
        return self.C * self.kappa ** np.asarray(n, dtype=float)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the smaller order."""
    n = min(a.order, b.order) + 1
    return TruncatedSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse ``1/a`` to the same order.

    Raises
    ------
    ZeroConstantTerm
        If ``a[0] == 0``.
    """
    c = a.coeffs
    if c[0] == 0:
        raise ZeroConstantTerm("series has zero constant term; it cannot be inverted")
    out = np.zeros_like(c)
    out[0] = 1.0 / c[0]
    for n in range(1, c.size):
        # c_0 * out_n = -(c_1 out_{n-1} + ... + c_n out_0)
        out[n] = -np.dot(c[1 : n + 1], out[n - 1 :: -1][:n]) / c[0]
    return TruncatedSeries(out)


def derivative(f: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative; the order drops by one (minimum 0)."""
    if f.order == 0:
        return TruncatedSeries([0.0])
    n = np.arange(1, f.order + 1)
    return TruncatedSeries(f.coeffs[1:] * n)


def log_derivative(f: TruncatedSeries) -> TruncatedSeries:
    """``f'/f`` truncated to order ``f.order - 1``."""
    if f.coeffs[0] == 0:
        raise ZeroConstantTerm("f(0) = 0: the logarithmic derivative is not analytic at 0")
    if f.order == 0:
        return TruncatedSeries([0.0])
    return series_mul(derivative(f), series_reciprocal(f.truncate(f.order - 1)))


def fit_growth_bound(a: TruncatedSeries, r: float, delta: float = DEFAULT_DELTA) -> GrowthBound:
    """Fit ``C, kappa`` with ``|a_n| <= C kappa**n`` on the stored coefficients.

    ``kappa = max(1 + delta, 1/r + delta)``, so for ``r >= 1`` it is just
    ``1 + delta``.  ``C`` is the smallest constant that works, but never
    below 1.
    """
    if r <= 0 or delta <= 0:
        raise ValueError("r and delta must be positive")
    kappa = max(1.0 + delta, 1.0 / r + delta)
    n = np.arange(a.coeffs.size)
    # log-space ratio avoids overflow of kappa**n for long series
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(a.coeffs)) - n * np.log(kappa)
    C = max(1.0, float(np.exp(np.max(logs))))
    # guard against the last ulp: the invariant is checked with <=
    bad = np.abs(a.coeffs) > C * kappa**n
    if np.any(bad):
        C = float(np.max(np.abs(a.coeffs) / kappa**n)) * (1 + 1e-15)
    return GrowthBound(C=C, kappa=kappa)


def scale_argument(f: TruncatedSeries, R: complex) -> TruncatedSeries:
    """Series of ``z -> f(R z)``."""
    powers = np.ones(f.coeffs.size, dtype=complex)
    if f.order > 0:
        powers[1:] = np.cumprod(np.full(f.order, R, dtype=complex))
    return TruncatedSeries(f.coeffs * powers)


def series_from_function(func, order: int, radius: float, n_points: int | None = None) -> TruncatedSeries:
    """Taylor coefficients at 0 from samples of ``func`` on ``|z| = radius``.

    Trapezoidal rule for the Cauchy integral (an FFT).  ``func`` must be
    analytic on a neighbourhood of the closed disc of that radius; the
    aliasing error then decays geometrically in ``n_points``.  Coefficient
    ``n`` carries a rounding error of roughly ``eps * max|func| / radius**n``.
    """
    if n_points is None:
        n_points = max(256, 4 * (order + 1))
    theta = 2 * np.pi * np.arange(n_points) / n_points
    samples = np.asarray(func(radius * np.exp(1j * theta)), dtype=complex)
    c = np.fft.fft(samples)[: order + 1] / n_points
    c = c / radius ** np.arange(order + 1)
    return TruncatedSeries(c)

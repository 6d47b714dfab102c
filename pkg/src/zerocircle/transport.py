"""Moving approximations from centred discs to arbitrary discs in the unit disc.

Any closed Euclidean disc inside the unit disc is a pseudohyperbolic disc
``alpha_a(D(0, r))`` for the automorphism ``alpha_a(z) = (z + a)/(1 + conj(a) z)``.
Approximating ``f o alpha_a`` on ``D(0, r)`` and composing back with
``alpha_a^{-1}`` transports the approximation.  Polynomials do not survive
the composition (they become rational), so the polynomial route re-approximates
the composed function once more; Blaschke products do survive it.

Also here: Rubinstein's direct construction ``p + z^k p*`` for polynomials,
used as an independent oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .blaschke import (
    BlaschkeApproximant,
    approximate_blaschke,
    blaschke_factor,
    blaschke_zeros,
    eval_blaschke,
)
from .errors import (
    DiscNotInUnitDisc,
    OutsideDisc,
    RootInsideDisc,
    VanishingOnDisc,
    ZeroOutsideDisc,
)
from .grids import polar_grid, square_grid
from .matching import J_MAX, FactorProduct, MatchResult, approximate_to_tolerance
from .series import TruncatedSeries, series_from_function

__all__ = [
    "MobiusMap",
    "DiscSpec",
    "mobius",
    "pseudohyperbolic_distance",
    "to_disc_spec",
    "check_nonvanishing",
    "DiscPolynomialApproximation",
    "TransportedBlaschke",
    "FiniteBlaschke",
    "PrescribedZerosApproximation",
    "approx_poly_on_disc",
    "approx_blaschke_on_disc",
    "factor_prescribed_zeros",
    "reversed_polynomial",
    "rubinstein_approx",
    "polynomial_roots",
]


def mobius(a, z):
    """``alpha_a(z) = (z + a) / (1 + conj(a) z)``."""
    a = np.asarray(a, dtype=complex)
    return (z + a) / (1 + np.conj(a) * z)


@dataclass(frozen=True)
class MobiusMap:
    """``z -> rotation * alpha_a(z)``; a bijection of the unit disc for ``|a| < 1``."""

    a: complex
    rotation: complex = 1.0

    def __post_init__(self):
        if not abs(self.a) < 1:
            raise OutsideDisc(f"|a| = {abs(self.a)} is not below 1")
        if not math.isclose(abs(self.rotation), 1.0, rel_tol=1e-12):
            raise ValueError("rotation must be unimodular")

    def __call__(self, z):
        return self.rotation * mobius(self.a, z)

    def inverse(self, w):
        return mobius(-self.a, np.conj(self.rotation) * w)


def pseudohyperbolic_distance(z, w):
    """``|(z - w) / (1 - conj(w) z)|`` for points of the open unit disc."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if np.any(np.abs(z) >= 1) or np.any(np.abs(w) >= 1):
        raise OutsideDisc("pseudohyperbolic distance needs points with modulus below 1")
    out = np.abs((z - w) / (1 - np.conj(w) * z))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class DiscSpec:
    """Euclidean disc ``D(center, radius)`` equal to ``alpha_{pseudo_a}(D(0, pseudo_r))``.

    ``rotation`` is ``center / |center|`` (1 for a centred disc); in the frame
    rotated by its conjugate the pseudohyperbolic centre is real.
    """

    center: complex
    radius: float
    pseudo_a: complex
    pseudo_r: float
    rotation: complex = 1.0

    @property
    def map(self) -> MobiusMap:
        return MobiusMap(self.pseudo_a)

    def contains(self, z, shrink=0.0):
        return np.abs(np.asarray(z) - self.center) <= self.radius - shrink


def to_disc_spec(center: complex, radius: float, check: bool = True) -> DiscSpec:
    """Pseudohyperbolic centre and radius of ``D(center, radius)``.

    After rotating the centre onto the positive axis the disc meets the real
    line at ``x = |c| - radius`` and ``y = |c| + radius``; with
    ``R = (1 + xy)/(x + y)`` the centre is ``a = R - sqrt(R^2 - 1)`` and the
    radius ``(y - a)/(1 - a y)``.
    """
    center = complex(center)
    if not radius > 0:
        raise ValueError("radius must be positive")
    c = abs(center)
    if not c + radius < 1:
        raise DiscNotInUnitDisc(f"|center| + radius = {c + radius} is not below 1")
    if c < 1e-15:
        return DiscSpec(center, radius, 0j, radius, 1.0)
    x, y = c - radius, c + radius
    R = (1 + x * y) / (x + y)
    # 1/(R + sqrt(R^2-1)) == R - sqrt(R^2-1), without the cancellation
    a = 1.0 / (R + math.sqrt((R - 1) * (R + 1)))
    r = (y - a) / (1 - a * y)
    u = center / c
    spec = DiscSpec(center, radius, u * a, r, u)
    if check:
        theta = 2 * np.pi * np.arange(64) / 64
        img = spec.map(r * np.exp(1j * theta))
        dev = np.max(np.abs(np.abs(img - center) - radius))
        if dev > 1e-9:
            raise ArithmeticError(f"boundary mapping off by {dev:.3g}")
    return spec


def check_nonvanishing(f: Callable, disc: DiscSpec, inflate: float = 0.05, n: int = 64, tol: float = 1e-9):
    """Raise :class:`VanishingOnDisc` if ``|f| < tol`` on an ``n x n`` grid over the inflated disc."""
    radius = disc.radius * (1 + inflate)
    pts = square_grid(radius, n, disc.center)
    pts = pts[np.abs(pts) < 1]
    vals = np.abs(np.asarray(f(pts)))
    if not np.all(np.isfinite(vals)) or np.min(vals) < tol:
        raise VanishingOnDisc("target function vanishes or blows up near the disc")
    # argument principle on the inflated boundary catches zeros between grid points
    ring = disc.center + radius * np.exp(2j * np.pi * np.arange(4096) / 4096)
    ring = ring[np.abs(ring) < 1]
    if ring.size == 4096:
        fv = np.asarray(f(ring), dtype=complex)
        turns = np.sum(np.angle(np.roll(fv, -1) / fv)) / (2 * np.pi)
        if not np.isfinite(turns) or round(turns) != 0:
            raise VanishingOnDisc("target function has zeros inside the disc")


def _pullback_series(F: Callable, sample_radius: float) -> Callable[[int], TruncatedSeries]:
    cache = {}

    def series(n):
        if n not in cache:
            cache[n] = series_from_function(F, n, sample_radius, n_points=max(512, 4 * (n + 1)))
        return cache[n]

    return series


@dataclass
class DiscPolynomialApproximation:
    """Polynomial ``q`` with unit-circle roots approximating ``f`` on a disc.

    ``stage1`` approximates ``f o alpha_a`` on ``D(0, pseudo_r)``; ``product``
    is the final polynomial (``stage1`` itself when the disc is centred).
    """

    product: FactorProduct
    stage1: FactorProduct
    disc: DiscSpec
    s: Optional[float]
    matches: tuple

    def __call__(self, z):
        return self.product(z)

    def roots(self):
        return self.product.roots()


def approx_poly_on_disc(
    f: Callable,
    disc: DiscSpec,
    eps: float,
    sample_radius: Optional[float] = None,
    series: Optional[Callable[[int], TruncatedSeries]] = None,
    J_max: int = J_MAX,
) -> DiscPolynomialApproximation:
    """Polynomial with all roots on the unit circle, within ``eps`` of ``f`` on the disc.

    Two stages, ``eps/2`` each: match ``F = f o alpha_a`` on ``D(0, pseudo_r)``
    by ``p``; then match ``P = p o alpha_a^{-1}`` (rational, zero-free in the
    unit disc) on ``D(0, s)`` by ``q``, where ``D(0, s)`` contains the disc.

    ``f`` must be analytic and zero-free on the pullback of
    ``|z| <= sample_radius`` (default ``(1 + pseudo_r)/2``), where its Taylor
    coefficients are sampled.  ``series``, if given, replaces that sampling
    for stage one.
    """
    check_nonvanishing(f, disc)
    amap = disc.map
    F = lambda z: f(amap(z))
    rho = (1 + disc.pseudo_r) / 2 if sample_radius is None else sample_radius
    if series is None:
        series = _pullback_series(F, rho)
    m1 = approximate_to_tolerance(F, series, disc.pseudo_r, eps / 2, J_max=J_max)
    p = m1.product
    if disc.pseudo_a == 0:
        return DiscPolynomialApproximation(p, p, disc, None, (m1,))

    outer = abs(disc.center) + disc.radius
    s = min(outer + 0.02, (1 + outer) / 2)
    P = lambda z: p(amap.inverse(z))
    m2 = approximate_to_tolerance(P, _pullback_series(P, (1 + s) / 2), s, eps / 2, J_max=J_max)
    return DiscPolynomialApproximation(m2.product, p, disc, s, (m1, m2))


@dataclass
class TransportedBlaschke:
    """``c * B(alpha_a^{-1}(z))``: a Blaschke product with zeros on the disc boundary."""

    blaschke: BlaschkeApproximant
    disc: DiscSpec
    match: Optional[MatchResult] = None

    @property
    def log_c(self) -> complex:
        return self.blaschke.log_c

    @property
    def c(self) -> complex:
        return self.blaschke.c_B

    def inner(self, z):
        """The Blaschke product without its constant."""
        return blaschke_factor(self.blaschke, self.disc.map.inverse(np.asarray(z, dtype=complex)))

    def __call__(self, z):
        w = self.disc.map.inverse(np.asarray(z, dtype=complex))
        out = eval_blaschke(self.blaschke, w)
        return out

    def zeros(self):
        return self.disc.map(blaschke_zeros(self.blaschke))


def approx_blaschke_on_disc(
    f: Callable,
    disc: DiscSpec,
    delta: float,
    eps: float,
    sample_radius: Optional[float] = None,
    series: Optional[Callable[[int], TruncatedSeries]] = None,
    J_max: int = J_MAX,
) -> TransportedBlaschke:
    """Constant times a Blaschke product with zeros on ``|z - center| = radius``.

    Within ``eps`` of ``f`` on ``D(center, radius - delta)`` (measured on the
    pulled-back grid).  ``series`` gives the Taylor series of
    ``f o alpha_a`` directly; otherwise it is sampled on ``|z| = sample_radius``.
    """
    if not 0 < delta < disc.radius:
        raise ValueError("delta must lie in (0, radius)")
    check_nonvanishing(f, disc)
    amap = disc.map
    F = lambda z: f(amap(z))
    r = disc.pseudo_r
    # largest pullback modulus of the shrunk disc's boundary
    theta = 2 * np.pi * np.arange(1024) / 1024
    edge = disc.center + (disc.radius - delta) * np.exp(1j * theta)
    r_in = float(np.max(np.abs(amap.inverse(edge)))) * (1 + 1e-6)
    rho = (1 + r) / 2 if sample_radius is None else sample_radius
    if series is None:
        series = _pullback_series(F, rho)
    B, match = approximate_blaschke(F, series, r, 1 - r_in / r, eps, J_max=J_max)
    return TransportedBlaschke(B, disc, match)


@dataclass(frozen=True)
class FiniteBlaschke:
    """``lam * prod (z - a_k)/(1 - conj(a_k) z)``."""

    zeros: tuple
    lam: complex = 1.0

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.lam, dtype=complex)
        for a in self.zeros:
            out = out * (z - a) / (1 - np.conj(a) * z)
        return complex(out) if out.ndim == 0 else out


@dataclass
class PrescribedZerosApproximation:
    """``c0 * C1 * C2`` with ``C1`` carrying the prescribed zeros.

    ``C2`` is stored with its constant folded in, so ``c0`` is only reported.
    """

    C1: FiniteBlaschke
    C2: TransportedBlaschke

    @property
    def c0(self) -> complex:
        return self.C2.c

    def __iter__(self):
        return iter((self.c0, self.C1, self.C2))

    def __call__(self, z):
        return self.C1(z) * self.C2(z)


def factor_prescribed_zeros(
    zeros: Sequence[complex],
    remainder: Callable,
    disc: DiscSpec,
    delta: float,
    eps: float,
    **kwargs,
) -> PrescribedZerosApproximation:
    """Approximate ``C1 * remainder`` by ``c0 C1 C2`` on ``D(center, radius - delta)``.

    ``C1`` is the finite Blaschke product on the prescribed zeros, and ``C2``
    the boundary-zero product for the zero-free ``remainder``.  Since
    ``|C1| <= 1`` in the unit disc, the error is at most that of ``C2``.
    """
    zeros = tuple(complex(a) for a in zeros)
    if any(abs(a) >= 1 for a in zeros):
        raise ZeroOutsideDisc("prescribed zeros must lie in the open unit disc")
    C2 = approx_blaschke_on_disc(remainder, disc, delta, eps, **kwargs)
    return PrescribedZerosApproximation(FiniteBlaschke(zeros), C2)


def polynomial_roots(coeffs) -> np.ndarray:
    """Roots of ``sum c_k z^k`` from companion-matrix eigenvalues."""
    c = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    if c.size <= 1:
        return np.zeros(0, dtype=complex)
    return np.polynomial.polynomial.polyroots(c)


def reversed_polynomial(coeffs) -> np.ndarray:
    """``p*(z) = z^m conj(p(1/conj(z)))``: conjugated coefficients in reverse order."""
    c = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    return np.conj(c[::-1])


def rubinstein_approx(p, k: int) -> np.ndarray:
    """Coefficients (ascending) of ``p(z) + z^k p*(z)``; every root lies on the unit circle.

    ``p`` must have no roots in the closed unit disc.
    """
    if k < 1:
        raise ValueError("k must be positive")
    c = np.trim_zeros(np.asarray(p, dtype=complex), "b")
    if c.size == 0:
        raise ValueError("zero polynomial")
    roots = polynomial_roots(c)
    if roots.size and np.min(np.abs(roots)) <= 1 + 1e-12:
        raise RootInsideDisc("p has a root in the closed unit disc")
    star = reversed_polynomial(c)
    out = np.zeros(max(c.size, k + star.size), dtype=complex)
    out[: c.size] += c
    out[k : k + star.size] += star
    return out

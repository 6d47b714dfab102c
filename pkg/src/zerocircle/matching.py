"""Products of circle factors whose logarithmic derivative matches a target.

The polynomial variant builds

    g_J(z) = A * prod_{j<=J} (1 + xi_j z^j)^nu_j (1 + eta_j z^j),

with ``|xi_j| = |eta_j| = 1``, so every root of ``g_J`` lies on the unit
circle.  The rational variant divides each factor by the same factor at
``R^j z^j``.  Parameters are chosen index by index: the coefficient of
``z^K`` in ``g'/g`` only involves indices ``j`` dividing ``K + 1``, and the
new index ``K + 1`` enters linearly as ``(K+1)(nu xi + eta)``, which is
solved with :func:`zerocircle.annulus.decompose`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .annulus import decompose
from .errors import BudgetExceeded, DivergentTail, InvalidR, PoleHit, ZeroConstantTerm
from .grids import polar_grid
from .series import (
    TruncatedSeries,
    GrowthBound,
    log_derivative,
    series_mul,
    series_reciprocal,
)

__all__ = [
    "CircleFactor",
    "FactorProduct",
    "NuBoundReport",
    "MatchResult",
    "logderiv_of_factors",
    "match_factors",
    "formal_match_direct",
    "factor_series",
    "expand_product",
    "verify_nu_bound",
    "tail_bound",
    "evaluate_product",
    "approximant_constant",
    "approximate",
    "approximate_to_tolerance",
    "complex_log1p",
    "J_MAX",
]

J_MAX = 200
POLE_TOL = 1e-14


@dataclass(frozen=True)
class CircleFactor:
    """Index-``j`` factor ``(1 + xi z^j)^nu (1 + eta z^j)``.

    With ``denom_R`` set, each bracket is divided by its value at ``R^j z^j``.
    """

    j: int
    xi: complex
    eta: complex
    nu: int
    denom_R: Optional[float] = None

    def __post_init__(self):
        if self.j < 1:
            raise ValueError("factor index must be positive")
        if self.nu < 0:
            raise ValueError("multiplicity must be nonnegative")
        if self.denom_R is not None and not 0 <= self.denom_R < 1:
            raise InvalidR(f"denominator ratio {self.denom_R} not in [0, 1)")

    @property
    def degree(self) -> int:
        """Number of roots contributed by the numerator."""
        return self.j * (self.nu + 1)


@dataclass(frozen=True)
class FactorProduct:
    factors: tuple = ()
    leading_constant: complex = 1.0

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        js = [f.j for f in self.factors]
        if js != sorted(set(js)):
            raise ValueError("factors must be sorted by index with one factor per index")
        if self.leading_constant == 0:
            raise ZeroConstantTerm("leading constant must be nonzero")
        Rs = {f.denom_R for f in self.factors}
        if len(Rs) > 1:
            raise InvalidR("all factors of a product must share one denominator ratio")

    @property
    def J(self) -> int:
        return self.factors[-1].j if self.factors else 0

    @property
    def denom_R(self) -> Optional[float]:
        return self.factors[0].denom_R if self.factors else None

    @property
    def nu(self) -> np.ndarray:
        """Multiplicities indexed so that ``nu[j-1]`` belongs to index ``j``."""
        out = np.zeros(self.J, dtype=np.int64)
        for f in self.factors:
            out[f.j - 1] = f.nu
        return out

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def with_constant(self, c) -> "FactorProduct":
        return FactorProduct(self.factors, c)

    def append(self, factor: CircleFactor) -> "FactorProduct":
        return FactorProduct(self.factors + (factor,), self.leading_constant)

    def roots(self) -> np.ndarray:
        """Numerator roots with multiplicity; all on the unit circle.

        ``1 + xi z^j = 0`` exactly when ``z^j = -conj(xi)``.
        """
        out = []
        for f in self.factors:
            k = np.arange(f.j)
            for c, mult in ((f.xi, f.nu), (f.eta, 1)):
                if mult == 0:
                    continue
                base = np.exp(1j * (np.angle(-np.conj(c)) + 2 * np.pi * k) / f.j)
                out.append(np.repeat(base, mult))
        return np.concatenate(out) if out else np.zeros(0, dtype=complex)

    def __call__(self, z):
        return evaluate_product(self, z)


@dataclass(frozen=True)
class NuBoundReport:
    Cprime: float
    holds: bool
    kappa: float


def _divisor_lists(n_max: int) -> list[list[int]]:
    divs = [[] for _ in range(n_max + 1)]
    for d in range(1, n_max + 1):
        for mult in range(d, n_max + 1, d):
            divs[mult].append(d)
    return divs


def _divisor_term(n: int, j: int, xi: complex, eta: complex, nu: int) -> complex:
    # contribution of index j to the coefficient of z^(n-1) in g'/g
    q = n // j
    sign = -1.0 if q % 2 else 1.0
    return -sign * j * (nu * xi**q + eta**q)


def logderiv_of_factors(factors: FactorProduct, K: int) -> TruncatedSeries:
    """Coefficients ``b_0 .. b_K`` of ``g'/g`` from the divisor-sum formula.

    ``b_k = -sum_{j | k+1, j <= J} (-1)^{(k+1)/j} j (nu_j xi_j^{(k+1)/j} + eta_j^{(k+1)/j})``.
    For rational products ``c_k = (1 - R^{k+1}) b_k`` is returned.
    """
    by_j = {f.j: f for f in factors.factors}
    divs = _divisor_lists(K + 1)
    b = np.zeros(K + 1, dtype=complex)
    for k in range(K + 1):
        n = k + 1
        s = 0j
        for j in divs[n]:
            f = by_j.get(j)
            if f is not None:
                s += _divisor_term(n, j, f.xi, f.eta, f.nu)
        b[k] = s
    R = factors.denom_R
    if R is not None:
        b *= 1.0 - R ** np.arange(1, K + 2, dtype=float)
    return TruncatedSeries(b)


def _check_R(denom_R):
    if denom_R is not None and not 0 <= denom_R < 1:
        raise InvalidR(f"denominator ratio {denom_R} not in [0, 1)")


def match_factors(target: TruncatedSeries, J: int, denom_R: Optional[float] = None) -> FactorProduct:
    """Choose factors ``j = 1..J`` so that ``g'/g`` agrees with ``target`` through ``z^(J-1)``.

    Parameters
    ----------
    target : TruncatedSeries
        Coefficients ``a_0 .. a_{J-1}`` (at least) of ``f'/f``.
    J : int
        Number of factor indices.
    denom_R : float, optional
        Denominator ratio ``R`` in ``[0, 1)`` for the rational variant.

    Returns
    -------
    FactorProduct
        With leading constant 1.
    """
    _check_R(denom_R)
    if J < 1:
        raise ValueError("J must be positive")
    if target.order < J - 1:
        raise ValueError(f"target of order {target.order} cannot fix {J} coefficients")
    if not np.all(np.isfinite(target.coeffs[:J])):
        raise ValueError("target coefficients must be finite")
    divs = _divisor_lists(J)
    xi = [0j] * (J + 1)
    eta = [0j] * (J + 1)
    nu = [0] * (J + 1)
    factors = []
    for K in range(J):
        n = K + 1
        a = complex(target.coeffs[K])
        if denom_R is not None:
            a /= 1.0 - denom_R**n
        partial = 0j
        for j in divs[n][:-1]:
            partial += _divisor_term(n, j, xi[j], eta[j], nu[j])
        t = decompose((a - partial) / n, 1.0)
        xi[n], eta[n], nu[n] = t.xi, t.eta, t.m
        factors.append(CircleFactor(n, t.xi, t.eta, t.m, denom_R))
    return FactorProduct(tuple(factors), 1.0)


def factor_series(factor: CircleFactor, order: int) -> TruncatedSeries:
    """Taylor series of one factor through ``z^order``."""
    out = TruncatedSeries.constant(1.0, order)
    j = factor.j
    R = factor.denom_R
    for c, mult in ((factor.xi, factor.nu), (factor.eta, 1)):
        if mult == 0 or j > order:
            continue
        # (1 + c w)^mult in w = z^j, binomial coefficients
        kmax = order // j
        coef = np.zeros(order + 1, dtype=complex)
        for k in range(min(kmax, mult) + 1):
            coef[k * j] = math.comb(mult, k) * c**k
        num = TruncatedSeries(coef)
        if R is not None:
            d = np.zeros(order + 1, dtype=complex)
            for k in range(min(kmax, mult) + 1):
                d[k * j] = math.comb(mult, k) * (c * R**j) ** k
            num = series_mul(num, series_reciprocal(TruncatedSeries(d)))
        out = series_mul(out, num)
    return out


def expand_product(factors: FactorProduct, order: int) -> TruncatedSeries:
    """Taylor series of the whole product (leading constant included)."""
    out = TruncatedSeries.constant(factors.leading_constant, order)
    for f in factors.factors:
        if f.j <= order:
            out = series_mul(out, factor_series(f, order))
    return out


def formal_match_direct(f: TruncatedSeries, J: int, denom_R: Optional[float] = None) -> FactorProduct:
    """Match Taylor coefficients of ``f`` directly, one index at a time.

    After stage ``j`` the partial product agrees with ``f`` through ``z^j``.
    The next coefficient of ``f / (P_1 ... P_j)`` is split with the annulus
    decomposition; in the rational variant the factor's leading term is
    ``(1 - R^j) xi z^j``, so the split is taken with radius ``1 - R^j``.
    """
    _check_R(denom_R)
    if f.coeffs[0] == 0:
        raise ZeroConstantTerm("f(0) = 0")
    if f.order < J:
        raise ValueError(f"series of order {f.order} cannot fix coefficients through {J}")
    a0 = complex(f.coeffs[0])
    rem = TruncatedSeries(f.coeffs[: J + 1] / a0)
    factors = []
    for j in range(1, J + 1):
        R0 = 1.0 if denom_R is None else 1.0 - denom_R**j
        t = decompose(complex(rem.coeffs[j]), R0)
        fac = CircleFactor(j, t.xi / R0, t.eta / R0, t.m, denom_R)
        # renormalise away the last ulp so |xi| = |eta| = 1
        fac = CircleFactor(j, fac.xi / abs(fac.xi), fac.eta / abs(fac.eta), fac.nu, denom_R)
        factors.append(fac)
        rem = series_mul(rem, series_reciprocal(factor_series(fac, J)))
    return FactorProduct(tuple(factors), a0)


def verify_nu_bound(factors: FactorProduct, bound: GrowthBound) -> NuBoundReport:
    """Smallest ``C'`` with ``n nu(n) <= C' kappa^n`` over the stored indices."""
    kappa = bound.kappa
    best = 0.0
    for f in factors.factors:
        if f.nu:
            # log form: kappa**n overflows for long products
            best = max(best, math.exp(math.log(f.j * f.nu) - f.j * math.log(kappa)))
    return NuBoundReport(Cprime=best, holds=math.isfinite(best), kappa=kappa)


def tail_bound(J: int, kappa: float, z_abs: float, c_tail: float = 1.0) -> float:
    """``c_tail * J^2 kappa^J |z|^J / (1 - |z|)``.

    Valid only for ``|z| < 1/kappa``; ``c_tail`` is typically ``C' + 1`` from
    :func:`verify_nu_bound`, since ``sum_{j<=J} (j nu_j + j) <= (C' + 1) J^2 kappa^J``.
    """
    if kappa <= 1:
        raise ValueError("kappa must exceed 1")
    if z_abs < 0:
        raise ValueError("z_abs must be nonnegative")
    if z_abs * kappa >= 1:
        raise DivergentTail(f"|z| = {z_abs} is not below 1/kappa = {1 / kappa}")
    if z_abs == 0:
        return 0.0
    return c_tail * J**2 * (kappa * z_abs) ** J / (1.0 - z_abs)


def complex_log1p(x):
    """``log(1 + x)`` for complex ``x``, accurate when ``|x|`` is tiny."""
    x = np.asarray(x, dtype=complex)
    xr, xi = x.real, x.imag
    with np.errstate(divide="ignore", invalid="ignore"):
        re = 0.5 * np.log1p(2 * xr + xr * xr + xi * xi)
    im = np.arctan2(xi, 1.0 + xr)
    return re + 1j * im


def log_product(factors: FactorProduct, z) -> np.ndarray:
    """``log`` of the product without the constant, summed factor by factor.

    The imaginary part is only meaningful modulo ``2 pi``.
    """
    z = np.asarray(z, dtype=complex)
    acc = np.zeros(z.shape, dtype=complex)
    R = factors.denom_R
    for f in factors.factors:
        zj = z**f.j
        if R is not None:
            Rj = R**f.j
            for c in (f.xi, f.eta):
                if np.any(np.abs(1 + c * Rj * zj) < POLE_TOL):
                    raise PoleHit(f"denominator of factor j={f.j} vanishes")
        term = f.nu * complex_log1p(f.xi * zj) if f.nu else 0
        term = term + complex_log1p(f.eta * zj)
        if R is not None:
            Rj = R**f.j
            if f.nu:
                term = term - f.nu * complex_log1p(f.xi * Rj * zj)
            term = term - complex_log1p(f.eta * Rj * zj)
        acc = acc + term
    return acc


def evaluate_product(factors: FactorProduct, z):
    """Value of ``A * prod (...)`` at ``z`` (scalar or array).

    Evaluated as ``A * exp(sum of logs)`` so that large multiplicities
    neither overflow nor lose accuracy.
    """
    scalar = np.ndim(z) == 0
    with np.errstate(over="ignore", invalid="ignore"):
        out = factors.leading_constant * np.exp(log_product(factors, z))
    # a factor vanishing exactly gives -inf in the log; exp maps it to 0
    out = np.where(np.isnan(out), 0.0, out)
    return complex(out) if scalar else out


def approximant_constant(f0: complex) -> complex:
    """Multiplicative constant of the approximant: ``exp(log f(0)) = f(0)``."""
    if f0 == 0:
        raise ZeroConstantTerm("f(0) = 0; the target must not vanish at the centre")
    return complex(f0)


def approximate(f: TruncatedSeries, J: int, denom_R: Optional[float] = None) -> FactorProduct:
    """Factor product for ``f`` itself: match ``f'/f`` through ``z^(J-1)``, constant ``f(0)``.

    ``f`` must hold coefficients through ``z^J``.
    """
    if f.order < J:
        raise ValueError(f"series of order {f.order} is too short for J = {J}")
    target = log_derivative(f.truncate(J))
    fp = match_factors(target, J, denom_R)
    return fp.with_constant(approximant_constant(f.coeffs[0]))


@dataclass
class MatchResult:
    """Outcome of :func:`approximate_to_tolerance`."""

    product: FactorProduct
    J: int
    grid_error: float
    tail: float
    history: list = field(default_factory=list)


def approximate_to_tolerance(
    func: Callable,
    series: Callable[[int], TruncatedSeries],
    radius: float,
    eps: float,
    denom_R: Optional[float] = None,
    J_max: int = J_MAX,
    J_start: int = 4,
    J_step: int = 4,
    bound: Optional[GrowthBound] = None,
    grid: Optional[np.ndarray] = None,
) -> MatchResult:
    """Increase ``J`` until the measured error on ``|z| <= radius`` is below ``eps``.

    ``series(n)`` must return the Taylor series of ``func`` through ``z^n``.
    When ``bound`` is given and
    ``radius < 1/kappa``, the tail estimate (with ``c_tail = C' + 1``) is
    recorded for each ``J``; it is reported, not used as a stopping rule.

    Raises
    ------
    BudgetExceeded
        If ``J_max`` is reached first.
    """
    pts = polar_grid(radius) if grid is None else grid
    exact = np.asarray(func(pts), dtype=complex)
    full = series(J_max)
    history = []
    J = J_start
    while J <= J_max:
        fp = approximate(full.truncate(J), J, denom_R)
        err = float(np.max(np.abs(evaluate_product(fp, pts) - exact)))
        tail = math.nan
        if bound is not None and radius * bound.kappa < 1:
            rep = verify_nu_bound(fp, bound)
            tail = tail_bound(J, bound.kappa, radius, rep.Cprime + 1.0)
        history.append((J, err, tail))
        if err < eps:
            return MatchResult(fp, J, err, tail, history)
        J += J_step
    raise BudgetExceeded(f"error {history[-1][1]:.3g} still above {eps:.3g} at J = {J_max}")

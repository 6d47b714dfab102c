"""Finite Blaschke products with every zero on ``|w| = r``.

A rational factor product built with denominator ratio ``R = r**2`` for
``z -> g(r z)`` becomes, after substituting ``z = w / r``,

    c_B * prod_j ((alpha_j + w^j) / (1 + conj(alpha_j) w^j))^nu_j
               * ((beta_j + w^j) / (1 + conj(beta_j) w^j)),

with ``alpha_j = r^j conj(xi_j)`` and ``beta_j = r^j conj(eta_j)``.  Each
bracket contributes ``xi_j r^-j`` (resp. ``eta_j r^-j``) to ``c_B``, which is
astronomically large for long products, so it is stored as a logarithm.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import MissingDenominator, PoleHit
from .matching import (
    J_MAX,
    FactorProduct,
    MatchResult,
    approximate_to_tolerance,
)
from .series import TruncatedSeries, scale_argument

__all__ = [
    "BlaschkeTerm",
    "BlaschkeApproximant",
    "to_blaschke",
    "eval_blaschke",
    "blaschke_factor",
    "blaschke_zeros",
    "approximate_blaschke",
]

POLE_TOL = 1e-14


@dataclass(frozen=True)
class BlaschkeTerm:
    j: int
    alpha: complex
    beta: complex
    nu: int


@dataclass(frozen=True)
class BlaschkeApproximant:
    """``c_B * C(w)``; ``log_c`` is a complex logarithm of ``c_B``."""

    log_c: complex
    terms: tuple
    r: float

    @property
    def c_B(self) -> complex:
        """The constant itself; may overflow to ``inf`` for large products."""
        with np.errstate(over="ignore"):
            return complex(np.exp(self.log_c))

    @property
    def degree(self) -> int:
        return sum(t.j * (t.nu + 1) for t in self.terms)

    def __call__(self, w):
        return eval_blaschke(self, w)


def to_blaschke(factors: FactorProduct, r: float) -> BlaschkeApproximant:
    """Rewrite a rational product (ratio ``r**2``) as a Blaschke approximant in ``w = r z``."""
    if not 0 < r < 1:
        raise ValueError("r must lie in (0, 1)")
    A = complex(factors.leading_constant)
    if not factors.factors:
        return BlaschkeApproximant(np.log(A), (), r)
    R = factors.denom_R
    if R is None or not math.isclose(R, r * r, rel_tol=1e-12):
        raise MissingDenominator(f"expected denominator ratio r^2 = {r * r}, got {R}")
    log_r = math.log(r)
    log_c = complex(np.log(A))
    terms = []
    for f in factors.factors:
        rj = r**f.j
        terms.append(BlaschkeTerm(f.j, rj * f.xi.conjugate(), rj * f.eta.conjugate(), f.nu))
        log_c += 1j * (f.nu * np.angle(f.xi) + np.angle(f.eta)) - f.j * (f.nu + 1) * log_r
    return BlaschkeApproximant(log_c, tuple(terms), r)


def _log_C(B: BlaschkeApproximant, w) -> np.ndarray:
    w = np.asarray(w, dtype=complex)
    acc = np.zeros(w.shape, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        for t in B.terms:
            wj = w**t.j
            for c, mult in ((t.alpha, t.nu), (t.beta, 1)):
                if mult == 0:
                    continue
                den = 1 + np.conj(c) * wj
                if np.any(np.abs(den) < POLE_TOL):
                    raise PoleHit(f"denominator of term j={t.j} vanishes")
                acc = acc + mult * (np.log(c + wj) - np.log(den))
    return acc


def _finish(logs, scalar):
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.exp(logs)
    out = np.where(np.isnan(out), 0.0, out)
    return complex(out) if scalar else out


def blaschke_factor(B: BlaschkeApproximant, w):
    """The Blaschke product ``C(w)`` alone (no constant)."""
    return _finish(_log_C(B, w), np.ndim(w) == 0)


def eval_blaschke(B: BlaschkeApproximant, w):
    """``c_B * C(w)``, combined in log space."""
    return _finish(B.log_c + _log_C(B, w), np.ndim(w) == 0)


def blaschke_zeros(B: BlaschkeApproximant) -> np.ndarray:
    """All zeros with multiplicity: ``j``-th roots of ``-alpha_j`` (``nu_j`` times) and of ``-beta_j``."""
    out = []
    for t in B.terms:
        k = np.arange(t.j)
        for c, mult in ((t.alpha, t.nu), (t.beta, 1)):
            if mult == 0:
                continue
            roots = B.r * np.exp(1j * (np.angle(-c) + 2 * np.pi * k) / t.j)
            out.append(np.repeat(roots, mult))
    return np.concatenate(out) if out else np.zeros(0, dtype=complex)


def approximate_blaschke(
    func: Callable,
    series: Callable[[int], TruncatedSeries],
    r: float,
    delta: float,
    eps: float,
    J_max: int = J_MAX,
    **kwargs,
) -> tuple[BlaschkeApproximant, MatchResult]:
    """Blaschke approximant of ``g`` on ``|w| <= r (1 - delta)`` with zeros on ``|w| = r``.

    ``func`` evaluates ``g`` and ``series(n)`` returns its Taylor series
    through ``w^n``.  Matching runs on ``z -> g(r z)`` with ratio ``r**2``
    and stops once the grid error on ``|z| <= 1 - delta`` is below ``eps``.
    """
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    result = approximate_to_tolerance(
        lambda z: func(r * z),
        lambda n: scale_argument(series(n), r),
        1.0 - delta,
        eps,
        denom_R=r * r,
        J_max=J_max,
        **kwargs,
    )
    return to_blaschke(result.product, r), result

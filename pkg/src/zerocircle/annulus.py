"""Writing a complex number as ``m*xi + eta`` with ``|xi| = |eta| = R0``.

Geometrically ``m*xi`` is a point on the circle of radius ``m*R0`` about 0
whose distance to ``w`` is exactly ``R0``; so each admissible ``m`` gives the
intersection of two circles.  :func:`decompose` makes a deterministic pick,
:func:`count_representations` enumerates all of them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["AnnulusTriple", "decompose", "count_representations", "admissible_m"]

# relative slack used when classifying the radial position of |w|/R0
_BOUNDARY_RTOL = 1e-12


@dataclass(frozen=True)
class AnnulusTriple:
    m: int
    xi: complex
    eta: complex

    def value(self) -> complex:
        return self.m * self.xi + self.eta


def _smallest_m(t: float) -> int:
    # smallest positive m with m - 1 <= t <= m + 1
    m = max(1, math.ceil(t) - 1)
    while t > m + 1:
        m += 1
    return m


def _intersections(t: float, m: int):
    """Points ``zeta`` with ``|zeta| = m`` and ``|t - zeta| = 1`` (t > 0 real).

    Returns ``(px, py)``; the intersections are ``px +- i*py``.  ``py`` is
    clamped to 0 at tangency.
    """
    px = (t * t + (m - 1.0) * (m + 1.0)) / (2.0 * t)
    # m - px without cancellation when t and m are large and close
    gap = (1.0 - (t - m) * (t - m)) / (2.0 * t)
    py2 = gap * (m + px)
    py = math.sqrt(py2) if py2 > 0 else 0.0
    return px, py


def decompose(w: complex, R0: float = 1.0) -> AnnulusTriple:
    """Deterministic representation ``w = m*xi + eta``.

    ``m`` is the smallest positive integer for which the circle of radius
    ``m*R0`` about 0 meets the circle of radius ``R0`` about ``w``.  Of the two
    intersection points, ``m*xi`` is the one with the larger imaginary part
    (then the larger real part).  ``w = 0`` gives ``(1, R0, -R0)``.
    """
    if not R0 > 0:
        raise ValueError("R0 must be positive")
    w = complex(w)
    d = abs(w)
    if d == 0.0:
        return AnnulusTriple(1, complex(R0), complex(-R0))

    t = d / R0
    m = _smallest_m(t)
    px, py = _intersections(t, m)
    # eta in the rotated frame, written to avoid cancellation for large t
    ex = (t * t - (m - 1.0) * (m + 1.0)) / (2.0 * t)

    u = w / d
    candidates = []
    for s in (1.0, -1.0):
        zeta = u * complex(px, s * py)
        eta = u * complex(ex, -s * py)
        candidates.append((zeta.imag, zeta.real, zeta, eta))
    _, _, zeta, eta = max(candidates, key=lambda c: (c[0], c[1]))

    xi = zeta / abs(zeta) * R0
    eta = eta / abs(eta) * R0
    return AnnulusTriple(m, xi, eta)


def admissible_m(w: complex, R0: float = 1.0) -> list[int]:
    """All positive ``m`` with ``(m-1) R0 <= |w| <= (m+1) R0``."""
    t = abs(complex(w)) / R0
    lo = max(1, math.floor(t) - 1)
    return [m for m in range(lo, math.floor(t) + 2) if m - 1 <= t * (1 + _BOUNDARY_RTOL) and t <= (m + 1) * (1 + _BOUNDARY_RTOL)]


def count_representations(w: complex, R0: float = 1.0) -> dict[int, int]:
    """Number of distinct ``(xi, eta)`` pairs for each admissible ``m``.

    Tangent circles contribute one pair.  For ``|w|`` off the integer
    multiples of ``R0`` the total is 2 when ``|w| < R0`` and 4 otherwise.
    """
    if not R0 > 0:
        raise ValueError("R0 must be positive")
    w = complex(w)
    if w == 0:
        raise ValueError("w = 0 has infinitely many representations")
    t = abs(w) / R0
    tally = {}
    for m in admissible_m(w, R0):
        tangent = math.isclose(t, m - 1, rel_tol=_BOUNDARY_RTOL, abs_tol=_BOUNDARY_RTOL) or math.isclose(
            t, m + 1, rel_tol=_BOUNDARY_RTOL
        )
        tally[m] = 1 if tangent else 2
    return tally

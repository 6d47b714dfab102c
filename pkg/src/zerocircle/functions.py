"""Target functions given as text: Taylor coefficients, builtins, or rational functions.

Grammar (whitespace ignored)::

    exp | exp:c                 e^(c z)
    affine:c                    1 + c z
    geometric:c                 1 / (1 - c z)
    taylor:a0,a1,...  |  a0,a1,...
    rational:n0,n1,.../d0,d1,...

Complex numbers are written ``a+bi`` (``j`` also accepted).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ParseError
from .series import TruncatedSeries, series_mul, series_reciprocal

__all__ = ["FunctionSpec", "parse_function_spec", "parse_complex", "parse_complex_list"]

BUILTINS = ("exp", "affine", "geometric")


def parse_complex(token: str, position: int = 0) -> complex:
    """``'1.5-2i'`` -> ``(1.5-2j)``."""
    t = token.strip().replace("−", "-").replace(" ", "")
    if not t:
        raise ParseError("empty number", position)
    t = t.replace("i", "j")
    # bare unit: "2+i" -> "2+1j"
    t = re.sub(r"(^|[+-])j", r"\g<1>1j", t)
    try:
        return complex(t)
    except ValueError:
        raise ParseError(f"cannot read {token.strip()!r} as a complex number", position) from None


def parse_complex_list(text: str, offset: int = 0) -> list[complex]:
    out = []
    pos = 0
    for piece in text.split(","):
        out.append(parse_complex(piece, offset + pos))
        pos += len(piece) + 1
    return out


@dataclass(frozen=True)
class FunctionSpec:
    """A target function that can produce its Taylor series to any order."""

    kind: str
    name: str = ""
    param: complex = 1.0
    numerator: tuple = ()
    denominator: tuple = ()

    def series(self, order: int) -> TruncatedSeries:
        n = np.arange(order + 1)
        if self.kind == "taylor":
            return TruncatedSeries.from_coeffs(self.numerator, order)
        if self.kind == "rational":
            num = TruncatedSeries.from_coeffs(self.numerator, order)
            den = TruncatedSeries.from_coeffs(self.denominator, order)
            return series_mul(num, series_reciprocal(den))
        c = complex(self.param)
        if self.name == "exp":
            coeffs = np.ones(order + 1, dtype=complex)
            for k in range(1, order + 1):
                coeffs[k] = coeffs[k - 1] * c / k
            return TruncatedSeries(coeffs)
        if self.name == "affine":
            return TruncatedSeries.from_coeffs([1.0, c], order)
        if self.name == "geometric":
            return TruncatedSeries(c ** n.astype(complex))
        raise ValueError(f"unknown function {self.name!r}")

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        P = np.polynomial.polynomial
        if self.kind == "taylor":
            return P.polyval(z, np.asarray(self.numerator, dtype=complex))
        if self.kind == "rational":
            return P.polyval(z, np.asarray(self.numerator, dtype=complex)) / P.polyval(
                z, np.asarray(self.denominator, dtype=complex)
            )
        c = complex(self.param)
        if self.name == "exp":
            return np.exp(c * z)
        if self.name == "affine":
            return 1 + c * z
        return 1 / (1 - c * z)

    @property
    def value_at_zero(self) -> complex:
        if self.kind == "builtin":
            return 1.0 + 0j
        v = complex(self.numerator[0])
        if self.kind == "rational":
            v /= complex(self.denominator[0])
        return v

    def describe(self) -> str:
        if self.kind == "builtin":
            return f"{self.name}:{self.param}"
        if self.kind == "taylor":
            return "taylor:" + ",".join(str(c) for c in self.numerator)
        return "rational:" + ",".join(map(str, self.numerator)) + "/" + ",".join(map(str, self.denominator))


def parse_function_spec(text: str) -> FunctionSpec:
    """Parse a function description, or the contents of a file when ``text`` names one.

    Raises
    ------
    ParseError
        On malformed input, or when the constant term is zero (the target
        must not vanish at the centre).
    """
    if "\n" not in text and len(text) < 4096 and Path(text).is_file():
        text = Path(text).read_text()
    raw = text.strip()
    if not raw:
        raise ParseError("empty function specification", 0)
    head, sep, body = raw.partition(":")
    head_l = head.strip().lower()

    if head_l in BUILTINS:
        param = parse_complex(body, len(head) + 1) if sep else 1.0
        if head_l != "exp" and not sep:
            raise ParseError(f"{head_l} needs a parameter, e.g. {head_l}:0.5", len(raw))
        spec = FunctionSpec("builtin", head_l, param)
    elif head_l == "rational":
        if not sep:
            raise ParseError("rational needs numerator/denominator coefficients", len(raw))
        num_txt, slash, den_txt = body.partition("/")
        if not slash:
            raise ParseError("rational spec needs a '/' between numerator and denominator", len(head) + 1)
        off = len(head) + 1
        num = parse_complex_list(num_txt, off)
        den = parse_complex_list(den_txt, off + len(num_txt) + 1)
        if den[0] == 0:
            raise ParseError("denominator vanishes at 0", off + len(num_txt) + 1)
        spec = FunctionSpec("rational", numerator=tuple(num), denominator=tuple(den))
    else:
        if sep and head_l == "taylor":
            coeffs = parse_complex_list(body, len(head) + 1)
        elif sep:
            raise ParseError(f"unknown function kind {head.strip()!r}", 0)
        else:
            coeffs = parse_complex_list(raw, 0)
        spec = FunctionSpec("taylor", numerator=tuple(coeffs))

    if spec.value_at_zero == 0:
        raise ParseError("constant term is zero; the target must not vanish at 0", 0)
    return spec

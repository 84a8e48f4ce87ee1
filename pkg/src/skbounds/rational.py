"""Exact rational scalars: the numeric type plus parsing and rendering.

Every quantity in this package (weights, entropies, rates, LP coefficients)
is a `fractions.Fraction`.  Fractions carry arbitrary-precision integers and
are always kept in canonical form (positive denominator, numerator and
denominator coprime, zero stored as 0/1), so every computation reproduces
bit-exactly and no tolerance appears anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_FRACTION_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_DECIMAL_RE = re.compile(r"^[+-]?\d+\.\d+$")


def parse_rational(text: str) -> Fraction:
    """Parse "a/b", an integer "a", or a finite decimal "d.ddd" exactly.

    Decimals are scaled by a power of ten, never routed through binary
    floating point, so "1.5" parses to exactly 3/2.

    Raises ValueError on anything outside that grammar or on a zero
    denominator.
    """
    s = text.strip()
    if _FRACTION_RE.match(s):
        num, _, den = s.partition("/")
        if den:
            d = int(den)
            if d == 0:
                raise ValueError(f"zero denominator in {text!r}")
            return Fraction(int(num), d)
        return Fraction(int(num))
    if _DECIMAL_RE.match(s):
        return Fraction(s)
    raise ValueError(f"not a rational literal: {text!r}")


def format_rational(value: Fraction) -> str:
    """Canonical text form: "a/b" when the denominator is not 1, else "a"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

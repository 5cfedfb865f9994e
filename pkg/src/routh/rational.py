"""Exact rational scalars and their text/decimal renderings.

Every quantity in this package (coordinates, areas, volumes, division
ratios) is an arbitrary-precision rational.  ``fractions.Fraction`` already
maintains exactly the canonical form we rely on -- positive denominator,
``gcd(|numerator|, denominator) == 1``, zero stored as ``0/1`` -- so it is
re-exported as the scalar type instead of being reimplemented.  Equality of
values is therefore structural equality, which the identity checks and the
oracle comparisons depend on.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_TEXT = re.compile(r"[+-]?\d+(?:/[+-]?\d+)?\Z")


def make_rational(numerator: int, denominator: int = 1) -> Fraction:
    """Build numerator/denominator in canonical reduced form."""
    if denominator == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse the text form "n/d" (bare "n" means n/1) into a rational."""
    stripped = text.strip()
    if not _RATIONAL_TEXT.fullmatch(stripped):
        raise ValueError(f"not a rational: {text!r}")
    num, _, den = stripped.partition("/")
    return make_rational(int(num), int(den) if den else 1)


def format_rational(value: Fraction | int) -> str:
    """Render the canonical "n/d" text form; the denominator is always shown."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def to_decimal(value: Fraction | int, digits: int) -> str:
    """Fixed-point decimal string with exactly ``digits`` fractional digits.

    Ties round to even (``Fraction.__round__`` semantics), so renderings are
    reproducible and never drift in one direction.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scaled = round(Fraction(value) * 10**digits)
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled)).rjust(digits + 1, "0")
    return f"{sign}{body[:-digits]}.{body[-digits:]}"

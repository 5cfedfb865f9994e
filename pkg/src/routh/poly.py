"""Sparse polynomials in x, y, z, t and formal quotients of them.

A polynomial is stored as a dict mapping exponent vectors ``(ex, ey, ez, et)``
to nonzero integer coefficients; the zero polynomial is the empty dict.
Example::

    1 - x*y*z*t   ->   {(0, 0, 0, 0): 1, (1, 1, 1, 1): -1}

No zero coefficient is ever stored, so polynomial equality is structural
equality of the term maps.  The variable set is fixed to these four names:
all identities this package verifies live in x, y, z, t, and the
two-variable-fewer triangle identities embed with t-exponent 0.

``RatFunc`` is a formal quotient of two such polynomials.  Quotients are kept
unnormalized (no multivariate gcd); equality is decided by cross-multiplying
and testing the difference for the zero polynomial, which is exact and does
not need any factorization machinery.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

VARIABLES = ("x", "y", "z", "t")

Exponent = tuple[int, int, int, int]


class Poly:
    """Sparse integer-coefficient polynomial in x, y, z, t."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        self.terms: dict[Exponent, int] = (
            {e: c for e, c in terms.items() if c} if terms else {}
        )

    @classmethod
    def const(cls, value: int) -> Poly:
        return cls({(0, 0, 0, 0): value})

    @classmethod
    def variable(cls, name: str) -> Poly:
        index = VARIABLES.index(name)
        exponent = tuple(1 if i == index else 0 for i in range(4))
        return cls({exponent: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other: Poly | int) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other: Poly | int) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Poly | int) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Poly | int) -> Poly:
        return (-self) + other

    def __mul__(self, other: Poly | int) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # mutable term map; equality is structural

    def evaluate(self, values: Sequence[Fraction | int]) -> Fraction:
        """Exact substitution of four rational values for x, y, z, t."""
        vx, vy, vz, vt = (Fraction(v) for v in values)
        total = Fraction(0)
        for (ex, ey, ez, et), coeff in self.terms.items():
            total += coeff * vx**ex * vy**ey * vz**ez * vt**et
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exponent in sorted(self.terms):
            coeff = self.terms[exponent]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARIABLES, exponent)
                if e
            ]
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


ZERO = Poly()
ONE = Poly.const(1)
X = Poly.variable("x")
Y = Poly.variable("y")
Z = Poly.variable("z")
T = Poly.variable("t")


class RatFunc:
    """Formal quotient num/den of two polynomials, den not the zero polynomial.

    Stored without normalization; two quotients are equal iff
    ``num_a * den_b - num_b * den_a`` is the zero polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int, den: Poly | int | None = None):
        if isinstance(num, int):
            num = Poly.const(num)
        if den is None:
            den = ONE
        elif isinstance(den, int):
            den = Poly.const(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator polynomial")
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(value: RatFunc | Poly | int) -> RatFunc:
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (Poly, int)):
            return RatFunc(value)
        return NotImplemented

    def __add__(self, other: RatFunc | Poly | int) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: RatFunc | Poly | int) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RatFunc | Poly | int) -> RatFunc:
        return (-self) + other

    def __mul__(self, other: RatFunc | Poly | int) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatFunc | Poly | int) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: RatFunc | Poly | int) -> RatFunc:
        return self._coerce(other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Poly, int)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero

    __hash__ = None

    def evaluate(self, values: Sequence[Fraction | int]) -> Fraction:
        den = self.den.evaluate(values)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.num.evaluate(values) / den

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"


def ratfunc_combine(terms: Iterable[tuple[int, RatFunc]]) -> RatFunc:
    """Signed sum of quotients, folded over a growing common denominator."""
    total = RatFunc(ZERO)
    for sign, term in terms:
        if sign == 1:
            total = total + term
        elif sign == -1:
            total = total - term
        else:
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return total

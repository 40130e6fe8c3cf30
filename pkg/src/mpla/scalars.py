"""Exact scalars and small ring-generic vector helpers.

The ground field is the rationals, represented by ``fractions.Fraction``
(always in lowest terms, positive denominator).  Scalars serialize as
``"p/q"`` strings, or bare integers when the denominator is 1.

``DualNumber`` implements the truncated polynomial ring k[t]/(t^2): pairs
(a, b) standing for a + b*t with (a + b*t)(c + d*t) = ac + (ad + bc)t.
All axiom checkers in this package use only ring operations (+, -, *),
so they run unchanged over either scalar type.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MalformedTensor


def parse_rational(value) -> Fraction:
    """Parse an int or a "p/q" string into an exact Fraction.

    Rejects floats (inexact) and zero denominators.
    """
    if isinstance(value, bool):
        raise MalformedTensor(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            try:
                n = int(num)
                d = int(den)
            except ValueError:
                raise MalformedTensor(f"not a rational: {value!r}") from None
            if d == 0:
                raise MalformedTensor(f"zero denominator: {value!r}")
            return Fraction(n, d)
        try:
            return Fraction(int(text))
        except ValueError:
            raise MalformedTensor(f"not a rational: {value!r}") from None
    raise MalformedTensor(f"not a rational: {value!r}")


def format_rational(x) -> str | int:
    """Serialize a Fraction as an int (denominator 1) or a "p/q" string."""
    x = Fraction(x)
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


class DualNumber:
    """Element a + b*t of the ring k[t]/(t^2) over exact rationals."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def promote(cls, x) -> "DualNumber":
        if isinstance(x, DualNumber):
            return x
        return cls(x)

    def __add__(self, other):
        other = DualNumber.promote(other)
        return DualNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = DualNumber.promote(other)
        return DualNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return DualNumber.promote(other) - self

    def __neg__(self):
        return DualNumber(-self.a, -self.b)

    def __mul__(self, other):
        other = DualNumber.promote(other)
        return DualNumber(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DualNumber(other)
        if not isinstance(other, DualNumber):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"DualNumber({self.a}, {self.b})"


# -- ring-generic vector helpers (plain lists of scalars) --


def vzero(n):
    return [0] * n


def vadd(u, v):
    return [a + b for a, b in zip(u, v)]


def vsub(u, v):
    return [a - b for a, b in zip(u, v)]


def vneg(u):
    return [-a for a in u]


def vscale(c, u):
    return [c * a for a in u]


def vaccum(acc, c, u):
    """acc += c * u in place; returns acc."""
    for i, a in enumerate(u):
        if a:
            acc[i] = acc[i] + c * a
    return acc


def vis_zero(u) -> bool:
    return all(not a for a in u)

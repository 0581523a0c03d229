"""Exact half-integers and rationals.

Everything in this package that can be a half-integer (pattern entries,
Laurent exponents, partition parts) lives on the doubled-integer grid: the
value k/2 is stored as the plain int k.  This keeps x^(1/2) first class and
all arithmetic exact without a square-root symbol.

`HalfInt` wraps a doubled int for code that wants a typed value; most inner
loops work on the doubled ints directly.  `TOP` is an explicit greatest
element used for the +infinity boundary conventions, never a large number.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


class HalfInt:
    """An exact half-integer k/2, stored as the doubled integer k."""

    __slots__ = ("twice",)

    def __init__(self, twice):
        self.twice = int(twice)

    @staticmethod
    def from_int(n):
        return HalfInt(2 * n)

    @staticmethod
    def parse(s):
        """Parse "3", "-2" or "3/2" (denominator must be 1 or 2)."""
        s = s.strip()
        if "/" in s:
            num, den = s.split("/")
            num, den = int(num), int(den)
            if den == 2:
                return HalfInt(num)
            if den == 1:
                return HalfInt(2 * num)
            raise ValueError("not a half-integer: %r" % (s,))
        return HalfInt(2 * int(s))

    @property
    def is_integer(self):
        return self.twice % 2 == 0

    def as_fraction(self):
        return Fraction(self.twice, 2)

    def __add__(self, other):
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other):
        return HalfInt(self.twice - other.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __eq__(self, other):
        return isinstance(other, HalfInt) and self.twice == other.twice

    def __hash__(self):
        return hash(("HalfInt", self.twice))

    def __lt__(self, other):
        if other is TOP:
            return True
        return self.twice < other.twice

    def __le__(self, other):
        if other is TOP:
            return True
        return self.twice <= other.twice

    def __repr__(self):
        return "HalfInt(%s)" % (format_half(self.twice),)


class _Top:
    """Greatest element of the half-integer order (the +infinity sentinel)."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is TOP

    def __gt__(self, other):
        return other is not TOP

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "TOP"


TOP = _Top()


def format_half(twice):
    """Render a doubled int as "3", "-2" or "3/2"."""
    if twice % 2 == 0:
        return str(twice // 2)
    return "%d/2" % (twice,)


def parse_half(s):
    """Parse "3", "-2" or "3/2" to a doubled int."""
    return HalfInt.parse(str(s)).twice


def format_fraction(q):
    """Render a Fraction as "p/q", or "p" when integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_fraction(s):
    """Parse "p/q" or "p" to an exact Fraction."""
    s = str(s).strip()
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def fraction_sqrt(q):
    """Exact square root of a non-negative Fraction, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    pn, pd = isqrt(q.numerator), isqrt(q.denominator)
    if pn * pn != q.numerator or pd * pd != q.denominator:
        return None
    return Fraction(pn, pd)

"""Exact slope arithmetic on the boundary torus of a knot exterior.

Slopes are written a/b in meridian-longitude coordinates: the meridian is
1/0, the longitude 0/1, and integral surgery n is n/1.  Everything here is
arbitrary-precision integer arithmetic; floats never appear.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class SlopeError(ValueError):
    """A pair of integers that does not describe a normalized slope."""


@dataclass(frozen=True)
class Slope:
    """A slope a/b in lowest terms, with b >= 0 and b = 0 only for 1/0.

    Construct through :func:`make_slope` (or :meth:`Slope.parse`), which
    reduces and fixes signs; the raw constructor insists on normal form.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if (self.a, self.b) == (0, 0):
            raise SlopeError("0/0 is not a slope")
        if self.b < 0:
            raise SlopeError(f"denominator must be nonnegative: {self.a}/{self.b}")
        if gcd(abs(self.a), self.b) != 1:
            raise SlopeError(f"slope {self.a}/{self.b} is not reduced")
        if self.b == 0 and self.a != 1:
            raise SlopeError(f"meridian must be written 1/0, not {self.a}/0")

    # -- predicates ---------------------------------------------------

    @property
    def is_meridian(self) -> bool:
        return self.b == 0

    @property
    def is_integral(self) -> bool:
        return self.b == 1

    @property
    def is_even_integral(self) -> bool:
        return self.b == 1 and self.a % 2 == 0

    @property
    def is_odd_integral(self) -> bool:
        return self.b == 1 and self.a % 2 != 0

    @property
    def is_half_integral(self) -> bool:
        return self.b == 2

    @property
    def is_non_integral(self) -> bool:
        return self.b >= 2

    @property
    def has_even_numerator(self) -> bool:
        return self.a % 2 == 0

    # -- conversions --------------------------------------------------

    def as_fraction(self) -> Fraction:
        if self.b == 0:
            raise SlopeError("the meridian 1/0 has no rational value")
        return Fraction(self.a, self.b)

    def sort_key(self) -> tuple[int, Fraction]:
        """Total order with the meridian last; used for deterministic output."""
        if self.b == 0:
            return (1, Fraction(0))
        return (0, Fraction(self.a, self.b))

    @staticmethod
    def parse(text: str) -> "Slope":
        m = re.fullmatch(r"\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?", text)
        if not m:
            raise SlopeError(f"cannot parse slope {text!r}")
        a = int(m.group(1))
        b = int(m.group(2)) if m.group(2) is not None else 1
        return make_slope(a, b)

    def __str__(self) -> str:
        if self.b == 1:
            return str(self.a)
        return f"{self.a}/{self.b}"

    def __repr__(self) -> str:
        return f"Slope({self})"


def make_slope(a: int, b: int) -> Slope:
    """Reduce (a, b) and normalize signs so the denominator is >= 0."""
    if a == 0 and b == 0:
        raise SlopeError("0/0 is not a slope")
    g = gcd(abs(a), abs(b))
    a //= g
    b //= g
    if b < 0 or (b == 0 and a < 0):
        a, b = -a, -b
    return Slope(a, b)


def integer_slope(n: int) -> Slope:
    return Slope(n, 1)


MERIDIAN = Slope(1, 0)
LONGITUDE = Slope(0, 1)


def distance(s: Slope, t: Slope) -> int:
    """Minimal geometric intersection number |ad - bc| of two slopes."""
    return abs(s.a * t.b - s.b * t.a)


@dataclass(frozen=True)
class LatticePoint:
    """An integer point (x, y) of the first homology of the boundary torus."""

    x: int
    y: int

    @property
    def is_primitive(self) -> bool:
        return gcd(abs(self.x), abs(self.y)) == 1

    def as_slope(self) -> Slope:
        if (self.x, self.y) == (0, 0):
            raise SlopeError("the origin is not a slope class")
        return make_slope(self.x, self.y)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"

"""Closed-form boundary-slope data for the two classified pretzel families.

Only the closed forms and explicit lists needed by the classifier are
implemented; there is no general Montesinos edgepath machinery here.  Each
set carries a completeness tag saying what the generating formula proves:

* ``ALL_NONINTEGRAL``: the set is exactly the non-integral boundary slopes;
* ``FULL_LIST``: the set is the complete list of boundary slopes;
* ``CANDIDATE_ONLY``: no formula applies; the set proves nothing.

A formula value that reduces to an integer is excluded from non-integral
sets but kept on the ``dropped_integral`` shelf so certificates can record
that the formula degenerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .knots import FamilyError, FamilyTag, PretzelKnot, family
from .slopes import Slope, make_slope


class Completeness(Enum):
    ALL_NONINTEGRAL = "ALL_NONINTEGRAL"
    FULL_LIST = "FULL_LIST"
    CANDIDATE_ONLY = "CANDIDATE_ONLY"


@dataclass(frozen=True)
class BoundarySlopeSet:
    slopes: tuple[Slope, ...]
    completeness: Completeness
    dropped_integral: tuple[Slope, ...] = field(default=())

    def __post_init__(self) -> None:
        keys = [s.sort_key() for s in self.slopes]
        if keys != sorted(set(keys)):
            raise ValueError("boundary slopes must be deduplicated and sorted")

    @property
    def is_empty(self) -> bool:
        return not self.slopes

    def to_json(self) -> dict:
        return {
            "boundary_slopes": [str(s) for s in self.slopes],
            "completeness": self.completeness.value,
            "dropped_integral": [str(s) for s in self.dropped_integral],
        }


def _pack(values: list[Fraction], completeness: Completeness) -> BoundarySlopeSet:
    nonintegral: set[Slope] = set()
    dropped: set[Slope] = set()
    for v in values:
        s = make_slope(v.numerator, v.denominator)
        (dropped if s.is_integral else nonintegral).add(s)
    return BoundarySlopeSet(
        tuple(sorted(nonintegral, key=Slope.sort_key)),
        completeness,
        tuple(sorted(dropped, key=Slope.sort_key)),
    )


def _require_odd_pair(p: int, q: int) -> None:
    if p % 2 == 0 or q % 2 == 0 or not (3 <= p <= q):
        raise ValueError(f"need odd 3 <= p <= q, got p={p}, q={q}")


def _steep_value(v: int, r: int = 2) -> Fraction:
    """(v(v-1) + 1 - 3r) / ((v-1-r)/2), the steep non-integral slope formula.

    With r = 2 this specializes to (v^2 - v - 5) / ((v-3)/2), the form used
    for the (-2, p, q) family.
    """
    return Fraction(v * (v - 1) + 1 - 3 * r, (v - 1 - r) // 2)


def nonintegral_slopes_minus2_pq(p: int, q: int) -> BoundarySlopeSet:
    """All non-integral boundary slopes of the (-2,p,q) pretzel knot.

    The p-branch fires for p >= 7 and the q-branch for q >= 7; for smaller
    indices there are none.
    """
    _require_odd_pair(p, q)
    values = [_steep_value(v) for v in (p, q) if v >= 7]
    return _pack(values, Completeness.ALL_NONINTEGRAL)


def slope_list_minus2_5_q(q: int) -> BoundarySlopeSet:
    """The complete boundary-slope list of the (-2,5,q) pretzel knot, q >= 5 odd."""
    if q % 2 == 0 or q < 5:
        raise ValueError(f"need odd q >= 5, got q={q}")
    values = [Fraction(0), Fraction(14), Fraction(15), _steep_value(q),
              Fraction(2 * q + 10), Fraction(2 * q + 12)]
    slopes = {make_slope(v.numerator, v.denominator) for v in values}
    return BoundarySlopeSet(tuple(sorted(slopes, key=Slope.sort_key)),
                            Completeness.FULL_LIST)


def _require_pq_minus_r(p: int, q: int, r: int) -> None:
    _require_odd_pair(p, q)
    if r % 2 != 0 or r < 4:
        raise ValueError(f"need even r >= 4, got r={r}")


def small_p_value(p: int, q: int, r: int) -> Fraction:
    """The lone non-integral boundary-slope candidate when p < r."""
    return 2 * (p + q + r - 1) - Fraction(2 * (p - 1) * (q - 1), p + q - 2)


def nonintegral_slopes_pq_minus_r(p: int, q: int, r: int) -> BoundarySlopeSet:
    """Non-integral boundary slopes of the (p,q,-r) pretzel knot.

    For p >= 2r+1 the two steep formulas give the complete non-integral
    list; for p < r the single value of :func:`small_p_value` does (when it
    is non-integral).  In between no closed form is available and the tag
    CANDIDATE_ONLY warns callers against window arguments.
    """
    _require_pq_minus_r(p, q, r)
    if p >= 2 * r + 1:
        return _pack([_steep_value(v, r) for v in (p, q)],
                     Completeness.ALL_NONINTEGRAL)
    if p < r:
        return _pack([small_p_value(p, q, r)], Completeness.ALL_NONINTEGRAL)
    return BoundarySlopeSet((), Completeness.CANDIDATE_ONLY)


def toroidal_slope(k: PretzelKnot) -> Slope:
    """The filling 2(p+q) along which the double of the spanning surface
    becomes an incompressible torus; defined for both classified families."""
    fam = family(k)
    if fam.tag not in (FamilyTag.MINUS2_PQ, FamilyTag.PQ_MINUS_R):
        raise FamilyError(f"toroidal slope formula does not cover {k}")
    p, q = fam.odd_pair
    return make_slope(2 * (p + q), 1)


def toroidal_gaps_large_p(p: int, q: int, r: int) -> tuple[Fraction, Fraction]:
    """Exact gaps 2(p+q) - steep_value(v, r) for v = p and v = q.

    Equal to 2q - 2r - (r-1)^2/((p-1-r)/2) and its p/q swap; the knot-level
    elimination for p > 2r+1 checks both are >= 11.
    """
    _require_pq_minus_r(p, q, r)
    if p < 2 * r + 1:
        raise FamilyError("gap formula needs p >= 2r+1")
    tor = 2 * (p + q)
    return (tor - _steep_value(p, r), tor - _steep_value(q, r))

"""Symbolic total-norm model over a boundary-slope list, with exact feasibility.

The total norm of a primitive class g is modeled as the linear form

    |g| = 2 * sum_i a_i * distance(g, beta_i)

in unknown nonnegative coefficients a_1..a_n, together with the minimal
positive norm S.  Every rule in this module manipulates such forms exactly;
feasibility questions go through :mod:`pretzel_surgery.linprog` and return
either exact sample points or Farkas witnesses.

Infeasibility over nonnegative rationals implies infeasibility over the
nonnegative integers the geometric model calls for, which is the only
direction the classifier ever uses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linprog
from .boundary import BoundarySlopeSet, Completeness, slope_list_minus2_5_q
from .linprog import EQ, GE, LE, LinearRow
from .slopes import MERIDIAN, LatticePoint, Slope, distance, make_slope


class IncompleteSlopeDataError(ValueError):
    """A window argument was attempted on a CANDIDATE_ONLY slope set."""


def norm_coefficients(boundary: tuple[Slope, ...], gamma: Slope) -> tuple[int, ...]:
    """Coefficients (2 * distance(gamma, beta_i)) of the total-norm form."""
    if not boundary:
        raise ValueError("boundary slope list must be nonempty")
    coeffs = tuple(2 * distance(gamma, b) for b in boundary)
    assert all(c % 2 == 0 for c in coeffs)
    return coeffs


def norm_form_str(coeffs: tuple[int, ...]) -> str:
    terms = []
    for i, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        half = c // 2
        terms.append(f"a{i}" if half == 1 else f"{half}a{i}")
    return "2[" + " + ".join(terms) + "]" if terms else "0"


@dataclass(frozen=True)
class NormConstraint:
    """A relation  |gamma| (EQ|GE|LE) S + offset  over a fixed boundary list."""

    gamma: Slope
    coeffs: tuple[int, ...]
    rel: str
    offset: int = 0

    @property
    def rhs_label(self) -> str:
        return "S" if self.offset == 0 else f"S{self.offset:+d}"

    @property
    def label(self) -> str:
        return f"|{self.gamma}| {self.rel} {self.rhs_label}"

    def to_json(self) -> dict:
        return {"gamma": str(self.gamma), "kind": self.rel, "rhs": self.rhs_label}


@dataclass
class NormSystem:
    """A boundary list plus norm constraints; variables are (a_1..a_n, S)."""

    boundary: tuple[Slope, ...]
    constraints: list[NormConstraint] = field(default_factory=list)

    def add(self, gamma: Slope, rel: str, offset: int = 0) -> NormConstraint:
        c = NormConstraint(gamma, norm_coefficients(self.boundary, gamma), rel, offset)
        self.constraints.append(c)
        return c

    @property
    def nvars(self) -> int:
        return len(self.boundary) + 1

    def lp_rows(self) -> list[LinearRow]:
        rows = []
        for c in self.constraints:
            rows.append(linprog.row(c.coeffs + (-1,), c.rel, c.offset, c.label))
        return rows

    def to_json(self) -> dict:
        return {
            "boundary": [str(b) for b in self.boundary],
            "constraints": [c.to_json() for c in self.constraints],
        }


def _positivity_rows(n: int) -> list[LinearRow]:
    unit = [0] * (n + 1)
    unit[n] = 1
    return [linprog.row(tuple(unit), GE, 1, "S >= 1")]


def _pair_rows(n: int, i: int, j: int) -> list[LinearRow]:
    rows = []
    for k in (i, j):
        unit = [0] * (n + 1)
        unit[k] = 1
        rows.append(linprog.row(tuple(unit), GE, 1, f"a{k + 1} >= 1"))
    return rows


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of one pairwise feasibility test of a homogeneous norm system."""

    feasible: bool
    pair_tested: tuple[int, int]
    sample: tuple[Fraction, ...] | None = None
    witness: tuple[Fraction, ...] | None = None
    row_labels: tuple[str, ...] = ()


@dataclass(frozen=True)
class PairwiseInfeasibilityReport:
    q: int
    system: NormSystem
    verdicts: tuple[FeasibilityVerdict, ...]

    @property
    def infeasible_for_all_pairs(self) -> bool:
        return all(not v.feasible for v in self.verdicts)

    @property
    def offending_pair(self) -> tuple[int, int] | None:
        for v in self.verdicts:
            if v.feasible:
                return v.pair_tested
        return None

    def to_json(self) -> dict:
        out = self.system.to_json()
        out["verdict"] = "INFEASIBLE" if self.infeasible_for_all_pairs else "FEASIBLE"
        out["pairs"] = [
            {
                "pair": list(v.pair_tested),
                "feasible": v.feasible,
                "witness": [str(w) for w in v.witness] if v.witness else None,
                "rows": list(v.row_labels),
            }
            for v in self.verdicts
        ]
        return out


def minus2_5q_norm_system(q: int) -> NormSystem:
    """The norm model asserting that 2q+5 is a minimal-norm filling of (-2,5,q):
    |mu| = S, |2q+5| = S and |2q+4| >= S over the full boundary-slope list."""
    boundary = slope_list_minus2_5_q(q).slopes
    system = NormSystem(boundary)
    system.add(MERIDIAN, EQ, 0)
    system.add(make_slope(2 * q + 5, 1), EQ, 0)
    system.add(make_slope(2 * q + 4, 1), GE, 0)
    return system


def cyclic_infeasibility_minus2_5_q(q: int) -> PairwiseInfeasibilityReport:
    """Pairwise feasibility of the (-2,5,q) cyclic-surgery norm model, q >= 9 odd.

    For every pair i < j the homogeneous system is augmented with
    a_i >= 1 and a_j >= 1 (by scale invariance this captures every norm with
    at least two nonzero coefficients).  All pairs infeasible refutes the
    assumption that 2q+5 is a cyclic filling.
    """
    if q % 2 == 0 or q < 9:
        raise ValueError(
            f"pairwise norm contradiction needs odd q >= 9 (q={q}); "
            "smaller q are settled by explicit slope lists or external facts")
    system = minus2_5q_norm_system(q)
    n = len(system.boundary)
    base_rows = system.lp_rows() + _positivity_rows(n)
    verdicts = []
    for i, j in combinations(range(n), 2):
        rows = base_rows + _pair_rows(n, i, j)
        result = linprog.solve_feasibility(rows, system.nvars)
        verdicts.append(FeasibilityVerdict(
            feasible=result.feasible,
            pair_tested=(i, j),
            sample=result.point,
            witness=result.witness,
            row_labels=tuple(r.label for r in rows),
        ))
    return PairwiseInfeasibilityReport(q, system, tuple(verdicts))


def verify_infeasibility_report(report: PairwiseInfeasibilityReport) -> bool:
    """Re-verify every Farkas witness of a report from scratch."""
    system = minus2_5q_norm_system(report.q)
    n = len(system.boundary)
    base_rows = system.lp_rows() + _positivity_rows(n)
    expected_pairs = list(combinations(range(n), 2))
    if [v.pair_tested for v in report.verdicts] != expected_pairs:
        return False
    for v in report.verdicts:
        if v.feasible or v.witness is None:
            return False
        rows = base_rows + _pair_rows(n, *v.pair_tested)
        if not linprog.verify_witness(rows, v.witness):
            return False
    return True


@dataclass(frozen=True)
class DerivedNormBound:
    """|point| < S + offset, derived by convexity from midpoint averaging."""

    point: LatticePoint
    offset: int
    midpoint_of: tuple[str, str]

    @property
    def label(self) -> str:
        return f"|{self.point}| < S+{self.offset}"


def half_integral_norm_bound(alpha: Slope) -> tuple[DerivedNormBound, DerivedNormBound]:
    """Bounds forced at the two integral neighbours of a half-integral class.

    If |alpha| <= S+8 for alpha = (2a+1)/2 while both meridian classes have
    norm S, then averaging alpha with (1,0) and with (-1,0) bounds the
    lattice points (a+1, 1) and (a, 1) by S+4.
    """
    if alpha.b != 2:
        raise ValueError(f"need a half-integral slope, got {alpha}")
    a = (alpha.a - 1) // 2
    upper = DerivedNormBound(LatticePoint(a + 1, 1), 4, (str(alpha), "1/0"))
    lower = DerivedNormBound(LatticePoint(a, 1), 4, (str(alpha), "-1/0"))
    return (upper, lower)


@dataclass(frozen=True)
class NormLowerBound:
    """|gamma| >= S + offset."""

    gamma: Slope
    offset: int

    @property
    def label(self) -> str:
        return f"|{self.gamma}| >= S+{self.offset}"


def even_filling_lower_bound(gamma: Slope) -> tuple[bool, NormLowerBound | None]:
    """The S+12 floor at even-numerator classes 2a/b (b odd, coprime).

    Only applicable in the triangle-group regime the classifier checks
    separately; inapplicable classes return (False, None).
    """
    if gamma.b == 0 or gamma.a % 2 != 0:
        return (False, None)
    assert gamma.b % 2 == 1  # reduced, so an even numerator forces an odd b
    return (True, NormLowerBound(gamma, 12))


@dataclass(frozen=True)
class UniquenessContradiction:
    """Two odd integral fillings below S+8 trap an even one below S+8,
    violating the S+12 floor; certifies there is at most one such filling."""

    first: int
    second: int
    even_point: int


def unique_odd_finite_slope(u: int, v: int) -> UniquenessContradiction:
    if u % 2 == 0 or v % 2 == 0:
        raise ValueError("both slopes must be odd integral")
    if u == v:
        raise ValueError("slopes must be distinct")
    lo = min(u, v)
    return UniquenessContradiction(u, v, lo + 1)


def nearby_nonintegral_window(u: int, nonintegral: BoundarySlopeSet) -> bool:
    """Exact test for a non-integral boundary slope in the open window (u-1, u+1)."""
    if nonintegral.completeness is Completeness.CANDIDATE_ONLY:
        raise IncompleteSlopeDataError(
            "window test is unsound on a CANDIDATE_ONLY slope set")
    for s in nonintegral.slopes:
        if abs(u * s.b - s.a) < s.b:
            return True
    return False

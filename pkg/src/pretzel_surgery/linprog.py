"""Exact rational linear feasibility with replayable Farkas certificates.

A small phase-one simplex over ``fractions.Fraction`` with Bland's pivoting
rule decides systems ``{A x (>=|=|<=) b, x >= 0}``.  Feasible systems come
back with an exact sample point; infeasible ones with a dual witness ``y``
such that

* ``y_i >= 0`` on ``>=`` rows, ``y_i <= 0`` on ``<=`` rows, free on ``=``,
* ``sum_i y_i A_i <= 0`` in every column, and
* ``sum_i y_i b_i > 0``.

Both certificates re-verify by direct evaluation, which the solver does
before returning (and callers repeat when replaying certificates).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

EQ = "EQ"
GE = "GE"
LE = "LE"

_FLIP = {GE: LE, LE: GE, EQ: EQ}


@dataclass(frozen=True)
class LinearRow:
    coeffs: tuple[Fraction, ...]
    rel: str
    rhs: Fraction
    label: str = ""

    def evaluate(self, x: tuple[Fraction, ...]) -> Fraction:
        return sum((c * v for c, v in zip(self.coeffs, x)), Fraction(0))

    def holds_at(self, x: tuple[Fraction, ...]) -> bool:
        lhs = self.evaluate(x)
        if self.rel == EQ:
            return lhs == self.rhs
        if self.rel == GE:
            return lhs >= self.rhs
        return lhs <= self.rhs


def row(coeffs, rel: str, rhs, label: str = "") -> LinearRow:
    if rel not in (EQ, GE, LE):
        raise ValueError(f"unknown relation {rel!r}")
    return LinearRow(tuple(Fraction(c) for c in coeffs), rel, Fraction(rhs), label)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    point: tuple[Fraction, ...] | None = None
    witness: tuple[Fraction, ...] | None = None


def satisfies(rows: list[LinearRow], x: tuple[Fraction, ...]) -> bool:
    return all(r.holds_at(x) for r in rows)


def verify_witness(rows: list[LinearRow], y: tuple[Fraction, ...]) -> bool:
    """Re-check a Farkas witness from scratch; True means the system is empty."""
    if len(y) != len(rows):
        return False
    for r, yi in zip(rows, y):
        if r.rel == GE and yi < 0:
            return False
        if r.rel == LE and yi > 0:
            return False
    nvars = len(rows[0].coeffs) if rows else 0
    for j in range(nvars):
        if sum((yi * r.coeffs[j] for r, yi in zip(rows, y)), Fraction(0)) > 0:
            return False
    return sum((yi * r.rhs for r, yi in zip(rows, y)), Fraction(0)) > 0


def _pivot(T, obj, basis, leave: int, enter: int) -> None:
    piv = T[leave][enter]
    T[leave] = [v / piv for v in T[leave]]
    prow = T[leave]
    for i in range(len(T)):
        if i != leave and T[i][enter]:
            f = T[i][enter]
            T[i] = [v - f * p for v, p in zip(T[i], prow)]
    if obj[enter]:
        f = obj[enter]
        for j in range(len(obj)):
            obj[j] -= f * prow[j]
    basis[leave] = enter


def solve_feasibility(rows: list[LinearRow], nvars: int) -> FeasibilityResult:
    """Decide {rows, x >= 0} by a phase-one simplex with Bland's rule."""
    m = len(rows)
    for r in rows:
        if len(r.coeffs) != nvars:
            raise ValueError("row width does not match variable count")

    # Normalize to nonnegative right-hand sides, remembering the sign flips.
    flip = [1] * m
    norm: list[tuple[tuple[Fraction, ...], str, Fraction]] = []
    for i, r in enumerate(rows):
        if r.rhs < 0:
            flip[i] = -1
            norm.append((tuple(-c for c in r.coeffs), _FLIP[r.rel], -r.rhs))
        else:
            norm.append((r.coeffs, r.rel, r.rhs))

    slack_col: dict[int, int] = {}
    art_col: dict[int, int] = {}
    ncols = nvars
    for i, (_, rel, _) in enumerate(norm):
        if rel in (LE, GE):
            slack_col[i] = ncols
            ncols += 1
    for i, (_, rel, _) in enumerate(norm):
        if rel in (GE, EQ):
            art_col[i] = ncols
            ncols += 1

    zero = Fraction(0)
    T = [[zero] * (ncols + 1) for _ in range(m)]
    basis = [-1] * m
    for i, (coeffs, rel, rhs) in enumerate(norm):
        for j, c in enumerate(coeffs):
            T[i][j] = Fraction(c)
        T[i][ncols] = rhs
        if rel == LE:
            T[i][slack_col[i]] = Fraction(1)
            basis[i] = slack_col[i]
        elif rel == GE:
            T[i][slack_col[i]] = Fraction(-1)
            T[i][art_col[i]] = Fraction(1)
            basis[i] = art_col[i]
        else:
            T[i][art_col[i]] = Fraction(1)
            basis[i] = art_col[i]

    artificial = set(art_col.values())
    # Phase-one reduced costs for min(sum of artificials); obj[ncols] = -w.
    obj = [zero] * (ncols + 1)
    for i in range(m):
        if basis[i] in artificial:
            for j in range(ncols + 1):
                obj[j] -= T[i][j]
    for j in artificial:
        obj[j] += 1

    while True:
        enter = -1
        for j in range(ncols):
            if j not in artificial and obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][ncols] / T[i][enter]
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise ArithmeticError("phase-one objective unbounded; cannot happen")
        _pivot(T, obj, basis, leave, enter)

    infeasibility = -obj[ncols]
    if infeasibility == 0:
        x = [zero] * nvars
        for i in range(m):
            if basis[i] < nvars:
                x[basis[i]] = T[i][ncols]
        point = tuple(x)
        if not satisfies(rows, point):
            raise ArithmeticError("feasible sample failed exact recheck")
        return FeasibilityResult(True, point=point)

    # Duals from the reduced costs over the initial identity columns.
    y = [zero] * m
    for i in range(m):
        if i in art_col:
            y[i] = Fraction(1) - obj[art_col[i]]
        else:
            y[i] = -obj[slack_col[i]]
    witness = tuple(flip[i] * y[i] for i in range(m))
    if not verify_witness(rows, witness):
        raise ArithmeticError("Farkas witness failed exact recheck")
    return FeasibilityResult(False, witness=witness)

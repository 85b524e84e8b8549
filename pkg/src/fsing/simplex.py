"""Exact rational simplex with Bland anti-cycling and dual certificates.

Solves

    maximize    c . x
    subject to  A_le x <= b_le,   A_eq x = b_eq,   x >= 0

entirely over `fractions.Fraction`.  A two-phase full tableau is used:
phase 1 drives artificial variables to zero (or proves infeasibility),
phase 2 optimizes the real objective.  Bland's rule (smallest eligible
index enters, ratio ties broken by smallest basic index) guarantees
termination even on degenerate problems.

Optimal results carry exact dual multipliers recovered from the slack and
artificial columns of the final tableau, so strong duality

    value == dual_le . b_le + dual_eq . b_eq

holds as an identity of rationals, with dual_le >= 0 componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class SimplexResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    dual_le: tuple[Fraction, ...] | None = None
    dual_eq: tuple[Fraction, ...] | None = None


class _Tableau:
    def __init__(self, nstruct: int, le_rows, le_rhs, eq_rows, eq_rhs):
        self.nstruct = nstruct
        self.nle = len(le_rows)
        self.neq = len(eq_rows)
        m = self.nle + self.neq
        self.ncols = nstruct + self.nle + m  # structural, slacks, artificials
        self.slack0 = nstruct
        self.art0 = nstruct + self.nle
        self.flip = [1] * m

        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        for i, (row, b) in enumerate(list(zip(le_rows, le_rhs)) + list(zip(eq_rows, eq_rhs))):
            full = [Fraction(v) for v in row] + [_ZERO] * (self.nle + m)
            if i < self.nle:
                full[self.slack0 + i] = _ONE
            b = Fraction(b)
            if b < 0:
                full = [-v for v in full]
                b = -b
                self.flip[i] = -1
            full[self.art0 + i] = _ONE
            rows.append(full)
            rhs.append(b)
        self.rows = rows
        self.rhs = rhs
        self.basis = [self.art0 + i for i in range(m)]

    def pivot(self, leave_row: int, enter_col: int):
        rows, rhs = self.rows, self.rhs
        piv = rows[leave_row][enter_col]
        inv = _ONE / piv
        rows[leave_row] = [v * inv for v in rows[leave_row]]
        rhs[leave_row] *= inv
        for k in range(len(rows)):
            if k == leave_row:
                continue
            factor = rows[k][enter_col]
            if factor:
                src = rows[leave_row]
                rows[k] = [a - factor * b for a, b in zip(rows[k], src)]
                rhs[k] -= factor * rhs[leave_row]
        self.basis[leave_row] = enter_col

    def objective_row(self, costs: list[Fraction]) -> tuple[list[Fraction], Fraction]:
        """Reduced costs c_j - c_B B^-1 A_j and current objective value."""
        m = len(self.rows)
        red = list(costs)
        value = _ZERO
        for i in range(m):
            cb = costs[self.basis[i]]
            if cb:
                row = self.rows[i]
                for j in range(self.ncols):
                    if row[j]:
                        red[j] -= cb * row[j]
                value += cb * self.rhs[i]
        return red, value

    def run(self, costs: list[Fraction], banned: set[int]) -> tuple[str, Fraction]:
        """Maximize ``costs`` from the current basis; Bland's rule throughout."""
        red, value = self.objective_row(costs)
        m = len(self.rows)
        while True:
            enter = -1
            for j in range(self.ncols):
                if j not in banned and red[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL, value
            leave = -1
            best = None
            for i in range(m):
                a = self.rows[i][enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return UNBOUNDED, value
            self.pivot(leave, enter)
            # update reduced costs by the same elimination
            factor = red[enter]
            src = self.rows[leave]
            for j in range(self.ncols):
                if src[j]:
                    red[j] -= factor * src[j]
            value += factor * self.rhs[leave]


def maximize(
    objective: Sequence,
    le_rows: Sequence[Sequence] = (),
    le_rhs: Sequence = (),
    eq_rows: Sequence[Sequence] = (),
    eq_rhs: Sequence = (),
) -> SimplexResult:
    """Solve the LP; see module docstring for the exact problem form."""
    nstruct = len(objective)
    if len(le_rows) != len(le_rhs) or len(eq_rows) != len(eq_rhs):
        raise ValueError("row/rhs length mismatch")
    for row in list(le_rows) + list(eq_rows):
        if len(row) != nstruct:
            raise ValueError("constraint row length does not match objective")

    tab = _Tableau(nstruct, le_rows, le_rhs, eq_rows, eq_rhs)
    m = tab.nle + tab.neq

    # Phase 1: maximize -(sum of artificials).
    phase1 = [_ZERO] * tab.ncols
    for j in range(tab.art0, tab.ncols):
        phase1[j] = Fraction(-1)
    status, value = tab.run(phase1, banned=set())
    assert status == OPTIMAL  # phase 1 is bounded above by 0
    if value != 0:
        return SimplexResult(status=INFEASIBLE)

    # Drive artificials out of the basis; drop rows that are redundant.
    art_cols = set(range(tab.art0, tab.ncols))
    for i in range(m):
        if tab.basis[i] in art_cols:
            pivot_col = next(
                (j for j in range(tab.art0) if tab.rows[i][j] != 0), None
            )
            if pivot_col is not None:
                tab.pivot(i, pivot_col)

    # Phase 2: the real objective; artificials may not re-enter.
    costs = [Fraction(v) for v in objective] + [_ZERO] * (tab.ncols - nstruct)
    status, value = tab.run(costs, banned=art_cols)
    if status == UNBOUNDED:
        return SimplexResult(status=UNBOUNDED)

    x = [_ZERO] * nstruct
    for i, b in enumerate(tab.basis):
        if b < nstruct:
            x[b] = tab.rhs[i]

    red, _ = tab.objective_row(costs)
    dual_le = tuple(-red[tab.slack0 + i] for i in range(tab.nle))
    dual_eq = tuple(
        -red[tab.art0 + tab.nle + i] * tab.flip[tab.nle + i] for i in range(tab.neq)
    )
    return SimplexResult(
        status=OPTIMAL, x=tuple(x), value=value, dual_le=dual_le, dual_eq=dual_eq
    )

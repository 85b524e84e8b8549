"""Exact linear programs over term-exponent matrices.

An :class:`ExponentProgram` records, for polynomials f_1..f_s in n variables
of which the first c form a complete intersection, the exponent vectors of
all their terms, grouped into one block per polynomial.  Coefficients are
deliberately not recorded: they only enter the theory through a
very-generality hypothesis.

``solve_lct_lp`` maximizes the total weight put on the auxiliary blocks
subject to

    (exponent rows) . w <= 1         componentwise,
    sum of block i          = 1      for i <= c,
    sum of block i         <= 1      for i > c,
    w >= 0,

over exact rationals.  ``howald_lct`` is the Newton-polyhedron threshold of
a monomial ideal, max { t : 1 in t * P(a) }, as the LP
max sum(w) s.t. sum_j w_j a_j <= 1, w >= 0 (valid because P(a) is the convex
hull of the generators plus the nonnegative orthant).

``uniqueness_check`` decides whether some optimal weight vector is the only
optimal solution with its matrix image: it enumerates the vertices of the
optimal face and tests whether the fiber { w >= 0 : M w = M v } collapses to
the single point v.  A fiber is pinned as soon as every coordinate maximum
over it equals v (block rows fix the coordinate sum, so maxima suffice).
Checking vertices is enough: the set of image points with single-point
fibers is a union of faces of the image polytope, hence nonempty only if it
contains a vertex image, and the fiber over such a vertex is a vertex of the
optimal face.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import simplex
from .errors import (
    BlockSumExceedsPMinusOne,
    CapExceeded,
    ConstantTermError,
    FormatError,
    NonIntegralExponent,
    ZeroPolynomialError,
)
from .modular import is_prime, multinomial_mod
from .polynomials import SparsePolynomial

#: Caps for the brute-force vertex enumeration behind uniqueness_check.
MAX_UNIQUENESS_COLUMNS = 12
MAX_VERTEX_BASES = 400_000


@dataclass(frozen=True)
class ExponentProgram:
    """Blocked term-exponent matrix for the threshold linear program."""

    nvars: int
    ci_count: int
    blocks: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        if not 0 <= self.ci_count <= len(self.blocks):
            raise ValueError("complete-intersection count out of range")
        if not self.blocks:
            raise ValueError("program needs at least one block")
        for block in self.blocks:
            if not block:
                raise ZeroPolynomialError("empty block (zero polynomial)")
            for col in block:
                if len(col) != self.nvars:
                    raise ValueError(f"column {col} has wrong length")
                if any(e < 0 for e in col):
                    raise ValueError(f"negative exponent in column {col}")
                if not any(col):
                    raise ConstantTermError("constant term column (all-zero exponents)")

    @property
    def poly_count(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def col_count(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(col for block in self.blocks for col in block)

    def block_spans(self) -> list[tuple[int, int]]:
        spans = []
        start = 0
        for block in self.blocks:
            spans.append((start, start + len(block)))
            start += len(block)
        return spans

    def exponent_rows(self) -> list[list[int]]:
        cols = self.columns
        return [[col[i] for col in cols] for i in range(self.nvars)]

    def matrix(self) -> list[list[int]]:
        """All n + s rows: exponent rows, then the 0/1 block indicator rows."""
        rows = self.exponent_rows()
        for start, end in self.block_spans():
            rows.append([1 if start <= j < end else 0 for j in range(self.col_count)])
        return rows


@dataclass(frozen=True)
class LPSolution:
    """Outcome of the threshold LP, exact throughout.

    ``dual`` has one multiplier per matrix row (n exponent rows, then the s
    block rows) and certifies optimality: the dual objective equals
    ``value`` as an identity of rationals.
    """

    status: str
    value: Fraction | None = None
    primal: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None


def build_program(polys: Sequence[SparsePolynomial], ci_count: int) -> ExponentProgram:
    """Columns enumerate the terms of each polynomial in canonical order."""
    if not polys:
        raise ValueError("need at least one polynomial")
    nvars = polys[0].ring.nvars
    blocks = []
    for f in polys:
        if f.ring.nvars != nvars:
            raise ValueError("polynomials live in different rings")
        if f.is_zero:
            raise ZeroPolynomialError(f"zero polynomial in position {len(blocks) + 1}")
        if not f.vanishes_at_origin():
            raise ConstantTermError(
                f"polynomial {len(blocks) + 1} does not vanish at the origin"
            )
        blocks.append(tuple(f.exponents()))
    return ExponentProgram(nvars=nvars, ci_count=ci_count, blocks=tuple(blocks))


def solve_lct_lp(prog: ExponentProgram) -> LPSolution:
    """Solve the threshold LP with an exact dual certificate.

    Infeasibility (possible only when ci blocks are present) signals that the
    complete-intersection normalization cannot be met under the exponent
    constraints.  Unboundedness cannot occur: every column belongs to a block
    whose sum is capped.
    """
    spans = prog.block_spans()
    cols = prog.col_count
    exp_rows = prog.exponent_rows()

    le_rows = [list(r) for r in exp_rows]
    le_rhs = [1] * prog.nvars
    eq_rows = []
    for i, (start, end) in enumerate(spans):
        indicator = [1 if start <= j < end else 0 for j in range(cols)]
        if i < prog.ci_count:
            eq_rows.append(indicator)
        else:
            le_rows.append(indicator)
            le_rhs.append(1)
    objective = [0] * cols
    for start, end in spans[prog.ci_count:]:
        for j in range(start, end):
            objective[j] = 1

    result = simplex.maximize(
        objective, le_rows, le_rhs, eq_rows, [1] * prog.ci_count
    )
    if result.status == simplex.INFEASIBLE:
        return LPSolution(status="infeasible")
    assert result.status == simplex.OPTIMAL, "threshold LP cannot be unbounded"

    dual = list(result.dual_le[: prog.nvars])
    aux_duals = list(result.dual_le[prog.nvars:])
    eq_duals = list(result.dual_eq)
    for i in range(prog.poly_count):
        dual.append(eq_duals[i] if i < prog.ci_count else aux_duals[i - prog.ci_count])
    return LPSolution(
        status="optimal",
        value=result.value,
        primal=result.x,
        dual=tuple(dual),
    )


# ---------------------------------------------------------------------------
# uniqueness of the optimal matrix image


def _reduce_against(pivots, row, rhs):
    """Reduce (row, rhs) against the pivot rows; returns a new pivot triple
    (col, row, rhs), None if dependent-and-consistent, or 'bad' if the
    combined system is inconsistent."""
    row = list(row)
    for col, prow, prhs in pivots:
        factor = row[col]
        if factor:
            row = [a - factor * b for a, b in zip(row, prow)]
            rhs = rhs - factor * prhs
    for col, v in enumerate(row):
        if v:
            inv = Fraction(1) / v
            return col, [x * inv for x in row], rhs * inv
    return None if rhs == 0 else "bad"


def _back_substitute(pivots, m):
    x = [Fraction(0)] * m
    for col, row, rhs in reversed(pivots):
        total = rhs
        for c in range(m):
            if c != col and row[c] and x[c]:
                total -= row[c] * x[c]
        x[col] = total
    return tuple(x)


def _optimal_face_vertices(prog: ExponentProgram, value: Fraction) -> list[tuple[Fraction, ...]]:
    """All vertices of the optimal face, by depth-first enumeration of
    independent tight-constraint sets (dependent rows are pruned as they
    appear, so only spanning subsets are visited)."""
    m = prog.col_count
    spans = prog.block_spans()

    ineq_rows: list[list[Fraction]] = []
    ineq_rhs: list[Fraction] = []
    for row in prog.exponent_rows():
        ineq_rows.append([Fraction(v) for v in row])
        ineq_rhs.append(Fraction(1))
    for i, (start, end) in enumerate(spans):
        if i >= prog.ci_count:
            ineq_rows.append(
                [Fraction(1) if start <= j < end else Fraction(0) for j in range(m)]
            )
            ineq_rhs.append(Fraction(1))
    for j in range(m):
        row = [Fraction(0)] * m
        row[j] = Fraction(-1)
        ineq_rows.append(row)
        ineq_rhs.append(Fraction(0))

    eq_rows: list[list[Fraction]] = []
    eq_rhs: list[Fraction] = []
    for i in range(prog.ci_count):
        start, end = spans[i]
        eq_rows.append([Fraction(1) if start <= j < end else Fraction(0) for j in range(m)])
        eq_rhs.append(Fraction(1))
    objective = [Fraction(0)] * m
    for start, end in spans[prog.ci_count:]:
        for j in range(start, end):
            objective[j] = Fraction(1)
    eq_rows.append(objective)
    eq_rhs.append(Fraction(value))

    base: list = []
    for row, rhs in zip(eq_rows, eq_rhs):
        reduced = _reduce_against(base, row, rhs)
        if reduced == "bad":
            raise ValueError("optimal value is not attained (inconsistent face)")
        if reduced is not None:
            base.append(reduced)

    need = m - len(base)
    n_ineq = len(ineq_rows)
    if need > n_ineq or math.comb(n_ineq, need) > MAX_VERTEX_BASES:
        raise CapExceeded(
            f"vertex enumeration would scan {math.comb(n_ineq, max(need, 0))} bases; "
            f"cap is {MAX_VERTEX_BASES}"
        )

    def feasible(x: tuple[Fraction, ...]) -> bool:
        for row, b in zip(ineq_rows, ineq_rhs):
            if sum(r * v for r, v in zip(row, x) if r) > b:
                return False
        return True

    vertices: set[tuple[Fraction, ...]] = set()

    def dfs(start: int, pivots: list, remaining: int):
        if remaining == 0:
            x = _back_substitute(pivots, m)
            if feasible(x):
                vertices.add(x)
            return
        for i in range(start, n_ineq - remaining + 1):
            reduced = _reduce_against(pivots, ineq_rows[i], ineq_rhs[i])
            if reduced is None or reduced == "bad":
                continue
            pivots.append(reduced)
            dfs(i + 1, pivots, remaining - 1)
            pivots.pop()

    dfs(0, base, need)
    return sorted(vertices)


def _fiber_is_point(prog: ExponentProgram, vertex: tuple[Fraction, ...]) -> bool:
    matrix = prog.matrix()
    image = [sum(r * v for r, v in zip(row, vertex)) for row in matrix]
    m = prog.col_count
    for j in range(m):
        objective = [0] * m
        objective[j] = 1
        result = simplex.maximize(objective, eq_rows=matrix, eq_rhs=image)
        assert result.status == simplex.OPTIMAL
        if result.value != vertex[j]:
            return False
    return True


def uniqueness_check(prog: ExponentProgram, sol: LPSolution) -> bool:
    """True iff some optimal weight vector is pinned by its matrix image.

    This is the hypothesis under which the LP value equals the threshold it
    predicts; with several optima sharing one image (as for the 2x3-minors
    program) it fails and the LP value is only an upper bound.
    """
    if sol.status != "optimal":
        raise ValueError("uniqueness_check needs an optimal solution")
    if prog.col_count > MAX_UNIQUENESS_COLUMNS:
        raise CapExceeded(
            f"uniqueness_check is capped at {MAX_UNIQUENESS_COLUMNS} columns"
        )
    vertices = _optimal_face_vertices(prog, sol.value)
    assert vertices, "optimal face of a nonempty compact polytope has a vertex"
    return any(_fiber_is_point(prog, v) for v in vertices)


# ---------------------------------------------------------------------------
# Newton polyhedra of monomial ideals


def howald_lct(monomials: Sequence[Sequence[int]], nvars: int) -> Fraction:
    """max { t : the all-ones vector lies in t * P(a) } for the monomial
    ideal a generated by the given exponent vectors."""
    if not monomials:
        raise ValueError("need at least one monomial")
    cols = []
    for mono in monomials:
        col = tuple(int(e) for e in mono)
        if len(col) != nvars:
            raise ValueError(f"monomial {col} has wrong length")
        if any(e < 0 for e in col):
            raise ValueError(f"negative exponent in {col}")
        if not any(col):
            raise ValueError("the unit monomial is not allowed")
        cols.append(col)
    le_rows = [[col[i] for col in cols] for i in range(nvars)]
    result = simplex.maximize([1] * len(cols), le_rows, [1] * nvars)
    assert result.status == simplex.OPTIMAL, "threshold of a monomial ideal is finite"
    return result.value


def interior_test(monomials: Sequence[Sequence[int]], nvars: int, t) -> bool:
    """True iff the all-ones vector lies in the interior of t * P(a).

    For this polyhedron family (full-dimensional and upward closed),
    interiority along the diagonal ray reduces to the strict comparison
    howald_lct > t.
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    return howald_lct(monomials, nvars) > t


def split_multinomial_nonzero(
    prog: ExponentProgram, weights: Sequence[Fraction], p: int
) -> tuple[bool, int]:
    """Residue of the distinguished multinomial coefficient of a weight split.

    For weights w conforming to the program blocks with every w_ij (p-1)
    a nonnegative integer and per-block sums at most p-1, computes

        prod_i  C( sum_j w_ij (p-1) ; w_i1 (p-1), ... )   mod p

    and reports (nonzero?, residue).  Only this single coefficient is
    evaluated; per-block sums <= p-1 keep p out of each factor, which is why
    the sweep in the tests never sees a zero.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if len(weights) != prog.col_count:
        raise ValueError("weight vector does not match program columns")
    scaled: list[int] = []
    for w in weights:
        value = Fraction(w) * (p - 1)
        if value.denominator != 1 or value < 0:
            raise NonIntegralExponent(
                f"weight {w} times (p-1) = {value} is not a nonnegative integer"
            )
        scaled.append(int(value))
    residue = 1
    for start, end in prog.block_spans():
        parts = scaled[start:end]
        if sum(parts) > p - 1:
            raise BlockSumExceedsPMinusOne(
                f"block sum {sum(parts)} exceeds p-1 = {p - 1}"
            )
        residue = residue * multinomial_mod(parts, p) % p
    return residue != 0, residue


# ---------------------------------------------------------------------------
# text import/export


def program_to_text(prog: ExponentProgram) -> str:
    """Render as the block-delimited text table (header ``n s c``)."""
    lines = [f"{prog.nvars} {prog.poly_count} {prog.ci_count}"]
    for block in prog.blocks:
        lines.append(f"block {len(block)}")
        for col in block:
            lines.append(" ".join(str(e) for e in col))
    return "\n".join(lines) + "\n"


def program_from_text(text: str) -> ExponentProgram:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty program table")
    header = lines[0].split()
    if len(header) != 3:
        raise FormatError(f"expected header 'n s c', got {lines[0]!r}")
    try:
        nvars, s, c = (int(v) for v in header)
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    blocks = []
    idx = 1
    for _ in range(s):
        if idx >= len(lines) or not lines[idx].startswith("block"):
            raise FormatError(f"expected 'block <size>' at line {idx + 1}")
        try:
            size = int(lines[idx].split()[1])
        except (IndexError, ValueError) as exc:
            raise FormatError(f"bad block header {lines[idx]!r}") from exc
        idx += 1
        cols = []
        for _ in range(size):
            if idx >= len(lines):
                raise FormatError("unexpected end of program table")
            try:
                col = tuple(int(v) for v in lines[idx].split())
            except ValueError as exc:
                raise FormatError(f"bad column {lines[idx]!r}") from exc
            if len(col) != nvars:
                raise FormatError(f"column {lines[idx]!r} should have {nvars} entries")
            cols.append(col)
            idx += 1
        blocks.append(tuple(cols))
    if idx != len(lines):
        raise FormatError("trailing content after program table")
    return ExponentProgram(nvars=nvars, ci_count=c, blocks=tuple(blocks))

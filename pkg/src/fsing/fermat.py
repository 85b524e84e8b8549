"""Frobenius action on the top local cohomology of Fermat hypersurfaces.

For the degree-d Fermat hypersurface in P^n over F_p, the graded piece of
degree -d of the top local cohomology of the ambient polynomial ring has a
monomial basis indexed by vectors b in Z^{n+1} with every b_i >= 1 and
sum b_i = d (so it is empty when d <= n).  The twisted Frobenius action

    xi  |->  f^(p-1) * Frobenius(xi),        f = x_0^d + ... + x_n^d,

acts on that piece by a matrix assembled from the multinomial expansion of
f^(p-1): the term with exponent vector a = d*c (sum c_i = p-1) sends the
basis vector b to the basis vector p*b - a whenever that stays strictly
positive, and dies otherwise.  Injectivity of the action is invertibility
of this matrix over F_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import EmptyBasisError
from .modular import inverse_mod, is_prime, multinomial_mod


def build_basis(n: int, d: int) -> list[tuple[int, ...]]:
    """Monomial basis of the degree -d graded piece, in ascending
    lexicographic order; empty iff d <= n.  Size C(d-1, n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if d < 1:
        raise ValueError("d must be >= 1")
    basis: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], remaining: int):
        slots = n + 1 - len(prefix)
        if slots == 0:
            if remaining == 0:
                basis.append(prefix)
            return
        for value in range(1, remaining - (slots - 1) + 1):
            extend(prefix + (value,), remaining - value)

    extend((), d)
    return basis


@dataclass(frozen=True)
class FrobeniusMatrix:
    """Matrix of the twisted Frobenius action in the monomial basis."""

    p: int
    n: int
    d: int
    basis: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, ...], ...]  # entries[row][col] in [0, p)

    @property
    def size(self) -> int:
        return len(self.basis)


def build_frobenius_matrix(n: int, d: int, p: int) -> FrobeniusMatrix:
    """Assemble the action matrix by expanding f^(p-1) multinomially.

    Only feasible exponent vectors are enumerated: column b admits c with
    c_i <= (p*b_i - 1) // d, which keeps the image strictly positive.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    basis = build_basis(n, d)
    if not basis:
        raise EmptyBasisError(f"degree -{d} piece is zero for n = {n} (d <= n)")
    index = {b: i for i, b in enumerate(basis)}
    size = len(basis)
    entries = [[0] * size for _ in range(size)]

    for col, b in enumerate(basis):
        caps = [(p * bi - 1) // d for bi in b]

        def scan(position: int, remaining: int, parts: list[int]):
            if position == n:
                if remaining <= caps[n]:
                    parts.append(remaining)
                    coeff = multinomial_mod(parts, p)
                    if coeff:
                        row_vec = tuple(p * bi - d * ci for bi, ci in zip(b, parts))
                        row = index[row_vec]
                        entries[row][col] = (entries[row][col] + coeff) % p
                    parts.pop()
                return
            tail = sum(caps[position + 1:])
            low = max(0, remaining - tail)
            high = min(caps[position], remaining)
            for c in range(low, high + 1):
                parts.append(c)
                scan(position + 1, remaining - c, parts)
                parts.pop()

        scan(0, p - 1, [])

    return FrobeniusMatrix(
        p=p,
        n=n,
        d=d,
        basis=tuple(basis),
        entries=tuple(tuple(row) for row in entries),
    )


def _invertible_mod_p(entries, p: int) -> bool:
    size = len(entries)
    work = [list(row) for row in entries]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] % p), None)
        if pivot is None:
            return False
        work[col], work[pivot] = work[pivot], work[col]
        inv = inverse_mod(work[col][col], p)
        work[col] = [v * inv % p for v in work[col]]
        for r in range(size):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [(a - factor * b) % p for a, b in zip(work[r], work[col])]
    return True


def frobenius_injective(n: int, d: int, p: int) -> bool:
    """True iff the twisted Frobenius action is bijective on the degree -d
    piece; vacuously true when the piece is zero (d <= n)."""
    if d <= n:
        return True
    return _invertible_mod_p(build_frobenius_matrix(n, d, p).entries, p)


def expected_basis_size(n: int, d: int) -> int:
    return comb(d - 1, n)


def matrix_to_text(matrix: FrobeniusMatrix) -> str:
    """Text grid of the matrix, basis vectors as row labels."""
    width = max(len(str(matrix.p - 1)), 1)
    lines = [f"p: {matrix.p}  n: {matrix.n}  d: {matrix.d}  size: {matrix.size}"]
    for label, row in zip(matrix.basis, matrix.entries):
        cells = " ".join(f"{v:>{width}}" for v in row)
        lines.append(f"{'(' + ','.join(map(str, label)) + ')'}: {cells}")
    return "\n".join(lines) + "\n"

"""Pure-Python truncated-product kernel (fallback for the compiled one).

Multiplies two prime-field exponent maps and discards every monomial with an
exponent >= q.  Inputs are assumed canonical: exponents already < q and
coefficients in [1, p).
"""

from __future__ import annotations


def mul_trunc_mod(
    a: dict[tuple[int, ...], int],
    b: dict[tuple[int, ...], int],
    p: int,
    q: int,
) -> dict[tuple[int, ...], int]:
    if len(a) > len(b):
        a, b = b, a
    acc: dict[tuple[int, ...], int] = {}
    get = acc.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(int.__add__, ea, eb))
            if max(e) >= q:
                continue
            acc[e] = (get(e, 0) + ca * cb) % p
    return {e: c for e, c in acc.items() if c}

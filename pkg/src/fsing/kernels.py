"""Kernel selection: compiled extension when importable, pure Python otherwise.

The compiled path packs exponent vectors into int64 radix words; it is used
only when the packing fits (n * bits <= 62) and coefficients stay clear of
int64 overflow.  Set ``FSING_PURE_KERNEL=1`` to force the pure kernel, e.g.
for benchmarking or debugging.
"""

from __future__ import annotations

import os

from ._ptrunc_py import mul_trunc_mod as _mul_trunc_py

try:
    from . import _ptrunc as _compiled
except ImportError:
    _compiled = None

_FORCE_PURE = os.environ.get("FSING_PURE_KERNEL", "") == "1"

# Largest prime for which (p-1)^2 + p fits comfortably in int64.
_MAX_COMPILED_PRIME = 1 << 31

# Below this many term pairs the pack/unpack overhead of the compiled path
# outweighs its loop speed; measured with benchmarks/bench_kernel.py.
_COMPILED_CUTOVER = 400


def compiled_available() -> bool:
    return _compiled is not None


def active_kernel() -> str:
    return "compiled" if (_compiled is not None and not _FORCE_PURE) else "pure"


def _pack_width(q: int) -> int:
    # Digit sums during a product reach 2q - 2; the field must hold them.
    return max((2 * q - 1).bit_length(), 1)


def _pack(terms: dict[tuple[int, ...], int], bits: int):
    import numpy as np

    keys = np.empty(len(terms), dtype=np.int64)
    coefs = np.empty(len(terms), dtype=np.int64)
    for i, (exps, c) in enumerate(terms.items()):
        key = 0
        for v, e in enumerate(exps):
            key |= e << (v * bits)
        keys[i] = key
        coefs[i] = c
    return keys, coefs


def _unpack(keys, coefs, nvars: int, bits: int) -> dict[tuple[int, ...], int]:
    mask = (1 << bits) - 1
    out: dict[tuple[int, ...], int] = {}
    for key, c in zip(keys.tolist(), coefs.tolist()):
        out[tuple((key >> (v * bits)) & mask for v in range(nvars))] = c
    return out


def mul_trunc_mod(
    a: dict[tuple[int, ...], int],
    b: dict[tuple[int, ...], int],
    p: int,
    q: int,
    nvars: int,
) -> dict[tuple[int, ...], int]:
    """Product of two F_p exponent maps reduced mod (x_1^q, ..., x_n^q)."""
    if not a or not b:
        return {}
    if _compiled is None or _FORCE_PURE or len(a) * len(b) < _COMPILED_CUTOVER:
        return _mul_trunc_py(a, b, p, q)
    bits = _pack_width(q)
    if nvars * bits > 62 or p >= _MAX_COMPILED_PRIME:
        return _mul_trunc_py(a, b, p, q)
    # packing requires every exponent < q; dead monomials cannot contribute
    a = {e: c for e, c in a.items() if max(e) < q}
    b = {e: c for e, c in b.items() if max(e) < q}
    if not a or not b:
        return {}
    ka, ca = _pack(a, bits)
    kb, cb = _pack(b, bits)
    keys, coefs = _compiled.mul_trunc_packed(ka, ca, kb, cb, p, q, nvars, bits)
    return _unpack(keys, coefs, nvars, bits)


def mul_trunc_mod_pure(a, b, p, q, nvars=None):
    """Pure-Python kernel, exposed for benchmarks and differential tests."""
    return _mul_trunc_py(a, b, p, q)

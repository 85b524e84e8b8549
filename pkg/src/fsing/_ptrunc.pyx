# distutils: language = c++
"""Compiled truncated-product kernel.

Exponent vectors arrive packed into int64 radix words (one field of `bits`
bits per variable, radix chosen so digit sums cannot carry).  The hot double
loop and the hash accumulation then run entirely in C++.
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libcpp.unordered_map cimport unordered_map

import numpy as np

cimport numpy as cnp

ctypedef cnp.int64_t i64


def mul_trunc_packed(i64[::1] keys_a, i64[::1] coefs_a,
                     i64[::1] keys_b, i64[::1] coefs_b,
                     i64 p, i64 q, int nvars, int bits):
    """Truncated product of two packed exponent maps over F_p.

    Returns (keys, coefs) arrays of the surviving monomials, unordered.
    """
    cdef unordered_map[i64, i64] acc
    cdef i64 mask = ((<i64>1) << bits) - 1
    cdef Py_ssize_t i, j
    cdef Py_ssize_t na = keys_a.shape[0], nb = keys_b.shape[0]
    cdef int v
    cdef i64 key
    cdef bint drop
    acc.reserve(<size_t>(na + nb))
    for i in range(na):
        for j in range(nb):
            key = keys_a[i] + keys_b[j]
            drop = False
            for v in range(nvars):
                if ((key >> (v * bits)) & mask) >= q:
                    drop = True
                    break
            if drop:
                continue
            acc[key] = (acc[key] + coefs_a[i] * coefs_b[j]) % p

    out_keys = np.empty(acc.size(), dtype=np.int64)
    out_coefs = np.empty(acc.size(), dtype=np.int64)
    cdef i64[::1] vk = out_keys
    cdef i64[::1] vc = out_coefs
    cdef Py_ssize_t m = 0
    cdef unordered_map[i64, i64].iterator it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            vk[m] = deref(it).first
            vc[m] = deref(it).second
            m += 1
        inc(it)
    return out_keys[:m], out_coefs[:m]

#!/usr/bin/env python3
"""Benchmark: compiled truncated-product kernel vs the pure-Python fallback.

Times the workloads that dominate real runs: nu-value searches and the
exponent-split sweep on the 2x3-minors pair, plus a dense random product.
Run after building the extension (``pip install -e . --no-build-isolation``):

    python benchmarks/bench_kernel.py
"""

from __future__ import annotations

import random
import time

import fsing.kernels as kernels
from fsing import BracketBound, mul_trunc, pair_nu_value, poly_parse
from fsing.fedder import CompleteIntersectionPair


def minors_pair() -> CompleteIntersectionPair:
    return CompleteIntersectionPair(
        nvars=6,
        aux_gens=(
            poly_parse("x1*x5 - x2*x4", 6),
            poly_parse("x2*x6 - x3*x5", 6),
            poly_parse("x1*x6 - x3*x4", 6),
        ),
        t=2,
    )


def bench_minors_nu(p: int) -> float:
    pair = minors_pair()
    start = time.perf_counter()
    pair_nu_value(pair, p, 1)
    return time.perf_counter() - start


def bench_dense_product(p: int, q: int, nterms: int) -> float:
    """One truncated product of two dense random polynomials."""
    import fsing.polynomials as polys
    from fsing.polynomials import PolyRing, SparsePolynomial

    rng = random.Random(12345)

    def dense():
        terms = {}
        while len(terms) < nterms:
            exps = tuple(rng.randint(0, q - 1) for _ in range(3))
            if any(exps):
                terms[exps] = rng.randint(1, p - 1)
        return SparsePolynomial(PolyRing(3, p), terms)

    f, g = dense(), dense()
    saved = polys.MAX_TERMS
    polys.MAX_TERMS = max(saved, nterms * nterms + 1)
    try:
        start = time.perf_counter()
        mul_trunc(f, g, BracketBound(q))
        return time.perf_counter() - start
    finally:
        polys.MAX_TERMS = saved


def run(label: str) -> dict[str, float]:
    return {
        "minors nu, p=13": bench_minors_nu(13),
        "minors nu, p=17": bench_minors_nu(17),
        "dense product, q=13, 1500^2 pairs": bench_dense_product(13, 13, 1500),
        "dense product, q=27, 2000^2 pairs": bench_dense_product(3, 27, 2000),
    }


def main() -> None:
    if not kernels.compiled_available():
        print("compiled kernel not available; showing pure timings only")
    results = {}
    for label in ("compiled", "pure"):
        if label == "compiled" and not kernels.compiled_available():
            continue
        kernels._FORCE_PURE = label == "pure"
        results[label] = run(label)
    kernels._FORCE_PURE = False

    names = list(next(iter(results.values())).keys())
    width = max(len(n) for n in names)
    header = f"{'workload':<{width}}  " + "  ".join(f"{k:>10}" for k in results)
    if len(results) == 2:
        header += "  " + f"{'speedup':>8}"
    print(header)
    for name in names:
        row = f"{name:<{width}}  " + "  ".join(
            f"{results[k][name]:>9.3f}s" for k in results
        )
        if len(results) == 2:
            ratio = results["pure"][name] / max(results["compiled"][name], 1e-9)
            row += f"  {ratio:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()

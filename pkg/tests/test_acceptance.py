"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
pass lines.  Every tolerance is exact (rational equality); the runtime
budgets come with the criteria.
"""

import random
import time
from fractions import Fraction

from fsing import (
    BracketBound,
    CompleteIntersectionPair,
    ExponentProgram,
    build_program,
    exponent_split_search,
    fpt_estimate,
    frobenius_injective,
    howald_lct,
    nu_value,
    pair_nu_value,
    poly_parse,
    poly_pow_truncated,
    reduce_mod_p,
    solve_lct_lp,
    split_multinomial_nonzero,
    uniqueness_check,
)
from fsing.modular import primes_in_progression
from fsing.polynomials import PolyRing, SparsePolynomial
from corpus import ENTRIES, MINORS_2X3
from oracles import naive_pow_then_truncate, newton_lct_by_facets

MINORS = list(MINORS_2X3.aux_gens)


def test_criterion_1_minors_lp_value_and_uniqueness():
    start = time.perf_counter()
    prog = build_program(MINORS, 0)
    sol = solve_lct_lp(prog)
    unique = uniqueness_check(prog, sol)
    elapsed = time.perf_counter() - start
    assert sol.status == "optimal"
    assert sol.value == Fraction(3)
    assert unique is False
    assert elapsed < 1.0, f"criterion 1 took {elapsed:.2f}s, budget 1s"
    print(f"PASS criterion 1: minors LP value 3, uniqueness false ({elapsed:.2f}s)")


def test_criterion_2_minors_fedder_at_four_primes():
    start = time.perf_counter()
    for p in (5, 7, 11, 13):
        split = exponent_split_search(MINORS_2X3, p, 1)  # t = 2
        assert split is not None, f"no split at p={p}, t=2"
        assert sum(split) == 2 * (p - 1)
        above = Fraction(2) + Fraction(1, p - 1)  # total 2(p-1) + 1
        assert exponent_split_search(MINORS_2X3, p, 1, t=above) is None, (
            f"split found above the threshold at p={p}"
        )
        nu = pair_nu_value(MINORS_2X3, p, 1)
        assert nu == 2 * (p - 1)
        (est,) = fpt_estimate(MINORS, p, 1)
        assert est.nu == nu
        assert est.lower <= 2 <= est.upper
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0, f"criterion 2 took {elapsed:.1f}s, budget 120s"
    print(f"PASS criterion 2: minors nu = 2(p-1) and interval contains 2 "
          f"at p in {{5,7,11,13}} ({elapsed:.2f}s)")


def test_criterion_3_fermat_sweep():
    start = time.perf_counter()
    for d in (3, 4, 5):
        for n in range(1, d):
            for p in primes_in_progression(1, d, 3):
                assert frobenius_injective(n, d, p) is True, f"not injective at {(n, d, p)}"
    assert frobenius_injective(2, 3, 5) is False
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"criterion 3 took {elapsed:.1f}s, budget 10s"
    print(f"PASS criterion 3: Frobenius injective on the sweep, (2,3,5) false "
          f"({elapsed:.2f}s)")


def test_criterion_4_howald_diagonal_exactness():
    rng = random.Random(2024)
    instances = []
    for a in range(1, 7):
        instances.append((a,))
    for a in range(1, 7):
        for b in range(a, 7):
            instances.append((a, b))
    while len(instances) < 50 + 27:
        instances.append(tuple(rng.randint(1, 6) for _ in range(3)))
    checked = 0
    for exps in instances:
        nvars = len(exps)
        monos = [
            tuple(e if i == j else 0 for i in range(nvars)) for j, e in enumerate(exps)
        ]
        expected = sum(Fraction(1, e) for e in exps)
        assert howald_lct(monos, nvars) == expected
        assert newton_lct_by_facets(monos, nvars) == expected
        checked += 1
    assert checked >= 50
    print(f"PASS criterion 4: diagonal Newton thresholds exact on {checked} instances")


def test_criterion_5_truncated_power_oracle():
    rng = random.Random(99)
    mismatches = 0
    for _ in range(200):
        p, e = rng.choice([(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)])
        q = p**e
        nvars = rng.randint(1, 3)
        ring = PolyRing(nvars, p)
        terms = {}
        for _ in range(rng.randint(0, 5)):
            exps = tuple(rng.randint(0, 4) for _ in range(nvars))
            terms[exps] = rng.randint(0, p - 1)
        f = SparsePolynomial(ring, terms)
        k = rng.randint(0, 8)
        if poly_pow_truncated(f, k, BracketBound(q)) != naive_pow_then_truncate(f, k, q):
            mismatches += 1
    assert mismatches == 0
    print("PASS criterion 5: 200/200 truncated powers match the naive oracle")


def test_criterion_6_property_suite_over_corpus():
    assert len(ENTRIES) >= 20
    checked = {"supermult": 0, "nesting": 0, "duality": 0, "perm": 0, "scaling": 0}
    rng = random.Random(6)

    for entry in ENTRIES:
        pair = entry.pair
        gens = list(pair.ci_gens) + list(pair.aux_gens)

        # nu-supermultiplicativity and interval nesting at q, q^2
        for p in entry.deep_primes:
            try:
                reduced = [reduce_mod_p(f, p) for f in gens]
            except Exception:
                continue
            nu1 = nu_value(reduced, BracketBound(p), max_power=256)
            nu2 = nu_value(reduced, BracketBound(p * p), max_power=256)
            assert nu2 >= p * nu1
            checked["supermult"] += 1
            ests = fpt_estimate(gens, p, 2, max_power=256)
            assert ests[0].lower <= ests[1].lower
            assert ests[1].lower <= ests[0].upper
            checked["nesting"] += 1

        # LP duality: dual value equals primal value exactly
        prog = build_program(gens, pair.ci_count)
        sol = solve_lct_lp(prog)
        if sol.status == "optimal":
            assert sum(sol.dual) == sol.value
            matrix = prog.matrix()
            spans = prog.block_spans()
            obj = [0] * prog.col_count
            for s_, e_ in spans[pair.ci_count:]:
                for j in range(s_, e_):
                    obj[j] = 1
            for j in range(prog.col_count):
                assert sum(sol.dual[i] * matrix[i][j] for i in range(len(matrix))) >= obj[j]
            checked["duality"] += 1

            # column and variable permutation invariance
            blocks = []
            for block in prog.blocks:
                cols = list(block)
                rng.shuffle(cols)
                blocks.append(tuple(cols))
            assert solve_lct_lp(ExponentProgram(
                nvars=prog.nvars, ci_count=prog.ci_count, blocks=tuple(blocks)
            )).value == sol.value
            perm = list(range(prog.nvars))
            rng.shuffle(perm)
            permuted = tuple(
                tuple(tuple(col[perm[i]] for i in range(prog.nvars)) for col in block)
                for block in prog.blocks
            )
            assert solve_lct_lp(ExponentProgram(
                nvars=prog.nvars, ci_count=prog.ci_count, blocks=permuted
            )).value == sol.value
            checked["perm"] += 1

        # Newton-polyhedron scaling on the term ideal of the first generator
        monos = gens[0].exponents()
        m = rng.randint(2, 4)
        scaled = [tuple(m * e for e in col) for col in monos]
        assert howald_lct(scaled, pair.nvars) == howald_lct(monos, pair.nvars) / m
        checked["scaling"] += 1

    assert all(count > 0 for count in checked.values())
    print(f"PASS criterion 6: property suite over {len(ENTRIES)} corpus inputs {checked}")


def test_criterion_7_multinomial_nonvanishing():
    rng = random.Random(97)
    primes = [p for p in range(2, 98) if all(p % d for d in range(2, p))]
    hits = 0
    while hits < 100:
        p = rng.choice(primes)
        nblocks = rng.randint(1, 3)
        blocks = []
        weights = []
        for _ in range(nblocks):
            size = rng.randint(1, 3)
            parts = []
            budget = p - 1
            for _ in range(size):
                k = rng.randint(0, budget)
                parts.append(k)
                budget -= k
            block_cols = tuple(
                tuple(rng.randint(0, 2) for _ in range(2)) for _ in range(size)
            )
            block_cols = tuple(c if any(c) else (1, 0) for c in block_cols)
            blocks.append(block_cols)
            weights.extend(Fraction(k, p - 1) for k in parts)
        prog = ExponentProgram(nvars=2, ci_count=0, blocks=tuple(blocks))
        ok, residue = split_multinomial_nonzero(prog, weights, p)
        assert ok, f"vanishing multinomial at p={p}, weights={weights}"
        assert residue % p != 0
        hits += 1
    print("PASS criterion 7: 100/100 distinguished multinomials nonzero mod p")

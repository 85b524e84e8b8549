"""F-purity tests: membership, nu-values, split search, threshold intervals."""

import random
from fractions import Fraction

import pytest

from fsing import (
    BracketBound,
    CapExceeded,
    CompleteIntersectionPair,
    CongruenceViolated,
    ConstantTermError,
    PrimeExcluded,
    exponent_split_search,
    fedder_pair_test,
    fpt_estimate,
    nu_value,
    pair_nu_value,
    poly_parse,
    reduce_mod_p,
)
from corpus import ENTRIES, MINORS_2X3


def simple_pair(nvars, aux, t=1, ci=(), witness=None):
    return CompleteIntersectionPair(
        nvars=nvars,
        ci_gens=tuple(poly_parse(f, nvars) for f in ci),
        aux_gens=tuple(poly_parse(f, nvars) for f in aux),
        t=Fraction(t),
        witness=witness,
    )


class TestPairValidation:
    def test_rejects_constant_term(self):
        with pytest.raises(ConstantTermError):
            simple_pair(1, ["x1 + 1"])

    def test_rejects_too_many_ci(self):
        with pytest.raises(ValueError):
            simple_pair(1, [], ci=["x1", "x1^2"])

    def test_rejects_negative_t(self):
        with pytest.raises(ValueError):
            simple_pair(1, ["x1"], t=-1)


class TestFedderPairTest:
    def test_monomial_survives(self):
        pair = simple_pair(2, ["x1*x2"])
        assert fedder_pair_test(pair, 5, 1, (4,)) is True

    def test_power_q_dies(self):
        pair = simple_pair(1, ["x1"])
        assert fedder_pair_test(pair, 5, 1, (5,)) is False

    def test_minors_at_five(self):
        assert fedder_pair_test(MINORS_2X3, 5, 1, (4, 4, 0)) is True
        assert fedder_pair_test(MINORS_2X3, 5, 1, (0, 4, 4)) is True

    def test_split_length_checked(self):
        with pytest.raises(ValueError):
            fedder_pair_test(MINORS_2X3, 5, 1, (4, 4))

    def test_prime_excluded(self):
        pair = simple_pair(1, ["1/3*x1"])
        with pytest.raises(PrimeExcluded):
            fedder_pair_test(pair, 3, 1, (1,))

    def test_witness_congruence(self):
        pair = simple_pair(2, ["x1"], witness=(poly_parse("x2", 2), 3))
        with pytest.raises(CongruenceViolated):
            fedder_pair_test(pair, 5, 1, (1,))
        assert fedder_pair_test(pair, 7, 1, (1,)) is True

    def test_monotone_in_split(self):
        # survival at a bigger split implies survival at any smaller one
        rng = random.Random(47)
        pair = simple_pair(2, ["x1*x2", "x1 + x2"])
        for _ in range(20):
            p = rng.choice([2, 3, 5])
            big = (rng.randint(0, 4), rng.randint(0, 4))
            if fedder_pair_test(pair, p, 1, big):
                small = tuple(rng.randint(0, b) for b in big)
                assert fedder_pair_test(pair, p, 1, small)

    def test_holds_at_multiples_of_e(self):
        # a level-e certificate propagates to level 2e
        for entry in ENTRIES:
            pair = entry.pair
            for p in entry.deep_primes:
                try:
                    split1 = exponent_split_search(pair, p, 1)
                except (PrimeExcluded, CongruenceViolated):
                    continue
                if split1 is not None:
                    assert exponent_split_search(pair, p, 2) is not None


class TestNuValue:
    def test_single_variable(self):
        for p, e in [(2, 1), (3, 1), (5, 1), (3, 2)]:
            gens = [poly_parse("x1", 1, p=p)]
            assert nu_value(gens, BracketBound(p**e)) == p**e - 1

    def test_two_axes(self):
        # frozen by brute force: x^a y^b survives iff a, b <= p-1
        for p in (2, 3, 5):
            gens = [poly_parse("x1", 2, p=p), poly_parse("x2", 2, p=p)]
            assert nu_value(gens, BracketBound(p)) == 2 * (p - 1)

    def test_cusp_at_seven(self):
        # frozen by expanding (x^2+y^3)^k mod (x^7, y^7) for k = 1..6
        gens = [poly_parse("x1^2 + x2^3", 2, p=7)]
        assert nu_value(gens, BracketBound(7)) == 5

    def test_single_monomial_closed_form(self):
        # nu(x^a) = ceil(q/a) - 1
        for a in range(1, 7):
            for p, e in [(2, 1), (2, 2), (3, 1), (5, 1), (7, 1), (3, 2)]:
                q = p**e
                gens = [poly_parse(f"x1^{a}", 1, p=p)]
                assert nu_value(gens, BracketBound(q)) == -(-q // a) - 1

    def test_supermultiplicativity_on_corpus(self):
        for entry in ENTRIES:
            pair = entry.pair
            gens = list(pair.ci_gens) + list(pair.aux_gens)
            for p in entry.deep_primes:
                try:
                    reduced = [reduce_mod_p(f, p) for f in gens]
                except Exception:
                    continue
                nu1 = nu_value(reduced, BracketBound(p), max_power=256)
                nu2 = nu_value(reduced, BracketBound(p**2), max_power=256)
                assert nu2 >= p * nu1

    def test_crude_cap(self):
        for entry in ENTRIES:
            pair = entry.pair
            gens = list(pair.ci_gens) + list(pair.aux_gens)
            s = len(gens)
            for p in entry.deep_primes:
                try:
                    reduced = [reduce_mod_p(f, p) for f in gens]
                except Exception:
                    continue
                nu = nu_value(reduced, BracketBound(p), max_power=256)
                assert 0 <= nu <= s * (p - 1)

    def test_cap_exceeded_reported(self):
        gens = [poly_parse("x1", 1, p=7)]
        with pytest.raises(CapExceeded):
            nu_value(gens, BracketBound(7), max_power=3)


class TestSplitSearch:
    def test_two_vars_t2(self):
        pair = simple_pair(2, ["x1", "x2"], t=2)
        assert exponent_split_search(pair, 3, 1) == (2, 2)

    def test_single_var_t2_absent(self):
        pair = simple_pair(1, ["x1"], t=2)
        for p in (2, 3, 5):
            assert exponent_split_search(pair, p, 1) is None

    def test_minors_t2(self):
        split = exponent_split_search(MINORS_2X3, 5, 1)
        assert split is not None
        assert sum(split) == 8
        assert fedder_pair_test(MINORS_2X3, 5, 1, split)

    def test_canonical_order(self):
        # ascending lexicographic: the first surviving split is returned
        pair = simple_pair(2, ["x1", "x2"], t=1)
        assert exponent_split_search(pair, 3, 1) == (0, 2)

    def test_ci_twist_zero_gives_none(self):
        # (x^2)^(q-1) already lies in the bracket power at q = 2
        pair = simple_pair(1, ["x1"], ci=["x1^2"], t=0)
        assert exponent_split_search(pair, 2, 1) is None
        assert pair_nu_value(pair, 2, 1) == -1


class TestPairNu:
    def test_matches_targets_on_minors(self):
        assert pair_nu_value(MINORS_2X3, 5, 1) == 8
        assert pair_nu_value(MINORS_2X3, 7, 1) == 12

    def test_aux_free_pair(self):
        pair = simple_pair(2, [], ci=["x1"])
        assert pair_nu_value(pair, 3, 1) == 0


class TestFptEstimate:
    def test_coordinate_hyperplane(self):
        for p in (2, 5):
            ests = fpt_estimate([poly_parse("x1", 1)], p, 2)
            assert [(e.nu, e.lower, e.upper) for e in ests] == [
                (p - 1, Fraction(p - 1, p), Fraction(1)),
                (p * p - 1, Fraction(p * p - 1, p * p), Fraction(1)),
            ]

    def test_cusp_at_seven(self):
        (est,) = fpt_estimate([poly_parse("x1^2 + x2^3", 2)], 7, 1)
        assert est.nu == 5
        assert est.lower == Fraction(5, 7)
        assert est.upper == Fraction(6, 7)
        assert est.lower <= Fraction(5, 6) <= est.upper

    def test_minors_interval_contains_two(self):
        gens = list(MINORS_2X3.aux_gens)
        (est,) = fpt_estimate(gens, 5, 1)
        assert est.nu == 8
        assert est.lower <= 2 <= est.upper

    def test_interval_nesting_on_corpus(self):
        for entry in ENTRIES:
            pair = entry.pair
            gens = list(pair.ci_gens) + list(pair.aux_gens)
            for p in entry.deep_primes:
                try:
                    ests = fpt_estimate(gens, p, 2, max_power=256)
                except PrimeExcluded:
                    continue
                lowers = [e.lower for e in ests]
                assert lowers == sorted(lowers)
                for first, second in zip(ests, ests[1:]):
                    assert second.lower <= first.upper  # successive intervals meet

    def test_prime_excluded(self):
        with pytest.raises(PrimeExcluded):
            fpt_estimate([poly_parse("1/3*x1", 1)], 3, 1)

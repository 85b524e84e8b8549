"""F-purity tests at the origin: Fedder-type membership, nu-values, and
F-pure-threshold intervals.

A :class:`CompleteIntersectionPair` packages the data of a pair presented
inside affine n-space: ci generators f_1..f_c cutting out a complete
intersection, auxiliary generators f_{c+1}..f_s with a rational coefficient
t, and an optional defect witness (g, r) twisting the test when the ambient
subvariety is not a local complete intersection.  The caller is responsible
for f_1..f_c actually forming a regular sequence; that precondition is not
verified here (it would require a dimension computation).

The core test, with q = p^e and an exponent split k_{c+1..s}, asks whether

    (f_1 ... f_c)^(q-1) * g^((q-1)/r) * prod_j f_j^(k_j)

escapes the bracket power (x_1^q, ..., x_n^q).  All arithmetic happens over
F_p with truncation interleaved into every product.

nu-values count how far powers of an ideal escape the bracket power:
nu(q) is the largest k such that some product of k generators survives.
Survival is monotone (the bracket power is an ideal), so the search ascends
from k = 0 and stops at the first level with no survivors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    CapExceeded,
    CongruenceViolated,
    ConstantTermError,
    DenominatorDivisibleByP,
    PrimeExcluded,
    ZeroPolynomialError,
)
from .modular import is_prime
from .polynomials import (
    BracketBound,
    PolyRing,
    SparsePolynomial,
    mul_trunc,
    poly_pow_truncated,
    reduce_mod_p,
    truncate_mod_bracket,
)

#: Configured desk-scale caps; exceeding them raises CapExceeded rather than
#: silently truncating a search.
MAX_AUX_GENS = 6
MAX_TOTAL_EXPONENT = 64


@dataclass(frozen=True)
class CompleteIntersectionPair:
    """A pair (X; t Z) at the origin, X presented as a complete intersection.

    ``ci_gens`` may be empty (c = 0 means the ambient affine space itself).
    ``witness`` is an optional (g, r): a polynomial whose image cuts the
    twisting divisor, and the index r; tests then require p = 1 mod r.
    """

    nvars: int
    ci_gens: tuple[SparsePolynomial, ...] = ()
    aux_gens: tuple[SparsePolynomial, ...] = ()
    t: Fraction = Fraction(1)
    witness: tuple[SparsePolynomial, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))
        object.__setattr__(self, "ci_gens", tuple(self.ci_gens))
        object.__setattr__(self, "aux_gens", tuple(self.aux_gens))
        if self.t < 0:
            raise ValueError("t must be nonnegative")
        if len(self.ci_gens) > self.nvars:
            raise ValueError("more ci generators than variables")
        for f in self.ci_gens + self.aux_gens:
            if f.ring.p is not None or f.ring.nvars != self.nvars:
                raise ValueError(f"generators must be rational in {self.nvars} variables")
            if f.is_zero:
                raise ZeroPolynomialError("zero generator")
            if not f.vanishes_at_origin():
                raise ConstantTermError("generators must vanish at the origin")
        if self.witness is not None:
            g, r = self.witness
            if r < 1:
                raise ValueError("witness index r must be >= 1")
            if g.ring.p is not None or g.ring.nvars != self.nvars:
                raise ValueError("witness polynomial must be rational, same ring")
            if g.is_zero:
                raise ZeroPolynomialError("zero witness polynomial")

    @property
    def ci_count(self) -> int:
        return len(self.ci_gens)

    @property
    def aux_count(self) -> int:
        return len(self.aux_gens)

    @property
    def gen_count(self) -> int:
        return self.ci_count + self.aux_count


@dataclass(frozen=True)
class FptEstimate:
    """Level-e certificate for the F-pure threshold at a prime p.

    ``lower = nu / q`` is always a certified lower bound.  ``upper`` is the
    pigeonhole bound (nu + mu)/q where mu is the generator count, which for
    a principal ideal is the familiar (nu + 1)/q.
    """

    p: int
    e: int
    nu: int
    lower: Fraction
    upper: Fraction


def ceil_fraction(value: Fraction) -> int:
    return -((-value.numerator) // value.denominator)


def _reduce_gens(gens: Sequence[SparsePolynomial], p: int) -> list[SparsePolynomial]:
    try:
        return [reduce_mod_p(f, p) for f in gens]
    except DenominatorDivisibleByP as exc:
        raise PrimeExcluded(p, str(exc)) from exc


def nu_value(
    gens: Sequence[SparsePolynomial],
    bound: BracketBound,
    *,
    seed: SparsePolynomial | None = None,
    max_power: int = MAX_TOTAL_EXPONENT,
    max_gens: int = MAX_AUX_GENS,
) -> int:
    """Largest k such that some product of k generators (times ``seed``)
    escapes the bracket power; -1 only if the seed itself does not.

    Products are enumerated as multisets with truncation after every factor;
    a dead product prunes all its extensions, which is sound because the
    bracket power is an ideal.
    """
    gens = list(gens)
    if len(gens) > max_gens:
        raise CapExceeded(f"{len(gens)} generators exceed the cap {max_gens}")
    for f in gens:
        if f.ring.p is None or not bound.is_power_of(f.ring.p):
            raise ValueError(
                "generators must live over F_p with the cap q a power of p"
            )
        if not f.vanishes_at_origin():
            raise ValueError("generators must vanish at the origin")
    if seed is None:
        if not gens:
            raise ValueError("need at least one generator")
        seed = gens[0].ring.one()
    seed = truncate_mod_bracket(seed, bound)
    if seed.is_zero:
        return -1

    truncated = [truncate_mod_bracket(f, bound) for f in gens]
    frontier: dict[tuple[int, ...], SparsePolynomial] = {(0,) * len(gens): seed}
    nu = 0
    while frontier:
        new_frontier: dict[tuple[int, ...], SparsePolynomial] = {}
        for counts, product in frontier.items():
            last = 0
            for j in range(len(gens) - 1, -1, -1):
                if counts[j]:
                    last = j
                    break
            for j in range(last, len(gens)):
                extended = mul_trunc(product, truncated[j], bound)
                if extended.is_zero:
                    continue
                key = counts[:j] + (counts[j] + 1,) + counts[j + 1:]
                new_frontier[key] = extended
        if not new_frontier:
            return nu
        nu += 1
        if nu > max_power:
            raise CapExceeded(
                f"nu-value search passed the power cap {max_power}; the true value "
                "is larger than the configured limit"
            )
        frontier = new_frontier
    return nu


def _twist_factor(
    pair: CompleteIntersectionPair, p: int, e: int
) -> SparsePolynomial:
    """(f_1...f_c)^(q-1) * g^((q-1)/r) over F_p, truncated."""
    q = p**e
    bound = BracketBound.from_prime_power(p, e)
    ci = _reduce_gens(pair.ci_gens, p)
    if pair.witness is not None:
        g, r = pair.witness
        if (p - 1) % r != 0:
            raise CongruenceViolated(p, r)
        g_p = _reduce_gens([g], p)[0]
        product = poly_pow_truncated(g_p, (q - 1) // r, bound)
    else:
        product = PolyRing(pair.nvars, p).one()
    for f in ci:
        product = mul_trunc(product, poly_pow_truncated(f, q - 1, bound), bound)
        if product.is_zero:
            break
    return product


def fedder_pair_test(
    pair: CompleteIntersectionPair,
    p: int,
    e: int,
    split: Sequence[int] | None = None,
) -> bool:
    """Membership test at q = p^e for an explicit exponent split.

    ``split`` assigns one exponent per auxiliary generator (omit it, or pass
    an empty tuple, when there are none); the coefficient t does not enter
    here, only through callers that choose the split total.  True means the
    twisted product escapes the bracket power, certifying sharp F-purity of
    the pair at this level.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("e must be >= 1")
    if split is None:
        split = ()
    split = tuple(int(k) for k in split)
    if len(split) != pair.aux_count:
        raise ValueError(
            f"split has {len(split)} entries, pair has {pair.aux_count} auxiliary generators"
        )
    if any(k < 0 for k in split):
        raise ValueError("split entries must be nonnegative")

    bound = BracketBound.from_prime_power(p, e)
    product = _twist_factor(pair, p, e)
    if product.is_zero:
        return False
    aux = _reduce_gens(pair.aux_gens, p)
    for f, k in zip(aux, split):
        if k:
            product = mul_trunc(product, poly_pow_truncated(f, k, bound), bound)
            if product.is_zero:
                return False
    return not product.is_zero


def _split_search(
    aux_powers: list[list[SparsePolynomial]],
    base: SparsePolynomial,
    total: int,
    bound: BracketBound,
) -> tuple[int, ...] | None:
    """First split (in ascending lexicographic order) whose product survives."""
    caps = [len(p) - 1 for p in aux_powers]

    def recurse(idx: int, remaining: int, product: SparsePolynomial) -> tuple[int, ...] | None:
        if idx == len(aux_powers) - 1:
            if remaining > caps[idx]:
                return None
            final = mul_trunc(product, aux_powers[idx][remaining], bound)
            return (remaining,) if not final.is_zero else None
        tail_cap = sum(caps[idx + 1:])
        low = max(0, remaining - tail_cap)
        high = min(caps[idx], remaining)
        for k in range(low, high + 1):
            extended = mul_trunc(product, aux_powers[idx][k], bound)
            if extended.is_zero:
                continue
            found = recurse(idx + 1, remaining - k, extended)
            if found is not None:
                return (k,) + found
        return None

    if not aux_powers:
        return () if (total == 0 and not base.is_zero) else None
    if total > sum(caps):
        return None
    return recurse(0, total, base)


def _aux_power_tables(
    pair: CompleteIntersectionPair, p: int, e: int, limit: int
) -> list[list[SparsePolynomial]]:
    """aux_powers[j][k] = truncated f_j^k, stopping at the first zero power."""
    bound = BracketBound.from_prime_power(p, e)
    tables = []
    for f in _reduce_gens(pair.aux_gens, p):
        base = truncate_mod_bracket(f, bound)
        powers = [f.ring.one()]
        current = base
        k = 1
        while k <= limit and not current.is_zero:
            powers.append(current)
            current = mul_trunc(current, base, bound)
            k += 1
        tables.append(powers)
    return tables


def exponent_split_search(
    pair: CompleteIntersectionPair,
    p: int,
    e: int,
    *,
    t: Fraction | None = None,
    max_total: int = MAX_TOTAL_EXPONENT,
) -> tuple[int, ...] | None:
    """Search for an exponent split certifying the pair at threshold t.

    The split total is ceil(t (q-1)) with t = pair.t unless overridden.
    Returns the first surviving split in canonical (ascending lexicographic)
    order, or None when the search is exhaustive and empty.  Per-generator
    power caps (the largest power of each generator that itself survives)
    prune the enumeration.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("e must be >= 1")
    if len(pair.aux_gens) > MAX_AUX_GENS:
        raise CapExceeded(f"{len(pair.aux_gens)} auxiliary generators exceed {MAX_AUX_GENS}")
    q = p**e
    t = pair.t if t is None else Fraction(t)
    total = ceil_fraction(t * (q - 1))
    if total > max_total:
        raise CapExceeded(f"split total {total} exceeds the cap {max_total}")
    bound = BracketBound.from_prime_power(p, e)
    base = _twist_factor(pair, p, e)
    if base.is_zero:
        return None
    if pair.aux_count == 0:
        return () if total == 0 else None
    tables = _aux_power_tables(pair, p, e, total)
    return _split_search(tables, base, total, bound)


def pair_nu_value(
    pair: CompleteIntersectionPair,
    p: int,
    e: int,
    *,
    max_power: int = MAX_TOTAL_EXPONENT,
) -> int:
    """Largest split total with a surviving product; -1 if even the twisted
    complete-intersection factor dies (possible only when c > 0 or a witness
    is present)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    bound = BracketBound.from_prime_power(p, e)
    base = _twist_factor(pair, p, e)
    if pair.aux_count == 0:
        return 0 if not base.is_zero else -1
    aux = _reduce_gens(pair.aux_gens, p)
    return nu_value(aux, bound, seed=base, max_power=max_power)


def fpt_estimate(
    gens: Sequence[SparsePolynomial],
    p: int,
    e_max: int,
    *,
    max_power: int = MAX_TOTAL_EXPONENT,
) -> list[FptEstimate]:
    """Certified threshold intervals for the ideal (gens) at q = p, ..., p^e_max.

    Successive intervals intersect and the lower bounds are nondecreasing
    (nu is supermultiplicative under Frobenius powers).
    """
    if not gens:
        raise ValueError("need at least one generator")
    if e_max < 1:
        raise ValueError("e_max must be >= 1")
    mu = len(gens)
    reduced = _reduce_gens(gens, p)
    estimates = []
    for e in range(1, e_max + 1):
        bound = BracketBound.from_prime_power(p, e)
        nu = nu_value(reduced, bound, max_power=max_power)
        q = p**e
        estimates.append(
            FptEstimate(p=p, e=e, nu=nu, lower=Fraction(nu, q), upper=Fraction(nu + mu, q))
        )
    return estimates

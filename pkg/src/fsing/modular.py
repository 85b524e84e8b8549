"""Number-theoretic helpers: primality, inverses, multinomials mod p.

Multinomial coefficients are computed from factorial tables mod p together
with Legendre's formula for the p-adic valuation, so the residue is exact
even when the plain integer value would be astronomically large.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


def is_prime(n: int) -> bool:
    """Deterministic trial division, adequate for desk-scale primes."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def inverse_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo the prime ``p``; ``a`` must be a unit."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 is not invertible mod {p}")
    return pow(a, p - 2, p)


@lru_cache(maxsize=None)
def _factorials_mod(p: int) -> tuple[int, ...]:
    table = [1] * p
    for i in range(2, p):
        table[i] = table[i - 1] * i % p
    return tuple(table)


def legendre_valuation(n: int, p: int) -> int:
    """p-adic valuation of n! (Legendre's formula)."""
    total = 0
    while n:
        n //= p
        total += n
    return total


def factorial_unit_mod(n: int, p: int) -> int:
    """The unit part of n! (all factors of p removed), reduced mod p.

    Uses Wilson's theorem blockwise: the product of the units below each
    multiple of p contributes (p-1)! = -1 mod p per block.
    """
    table = _factorials_mod(p)
    result = 1
    while n:
        result = result * table[n % p] % p
        n //= p
        if n % 2 == 1:
            result = p - result if result else 0
    return result


def multinomial_mod(parts: Sequence[int], p: int) -> int:
    """C(sum(parts); parts) reduced mod p, 0 when p divides it."""
    if any(k < 0 for k in parts):
        raise ValueError("multinomial parts must be nonnegative")
    n = sum(parts)
    valuation = legendre_valuation(n, p) - sum(legendre_valuation(k, p) for k in parts)
    if valuation > 0:
        return 0
    numerator = factorial_unit_mod(n, p)
    denominator = 1
    for k in parts:
        denominator = denominator * factorial_unit_mod(k, p) % p
    return numerator * inverse_mod(denominator, p) % p


def binomial_mod(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    return multinomial_mod((k, n - k), p)


def iter_primes_in_progression(residue: int, modulus: int, skip: Iterable[int] = ()):
    """Ascending primes congruent to ``residue`` mod ``modulus``, excluding
    ``skip``.  Dirichlet guarantees the stream never dries up when
    gcd(residue, modulus) = 1."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    excluded = set(skip)
    n = 2
    target = residue % modulus
    while True:
        if n % modulus == target and n not in excluded and is_prime(n):
            yield n
        n += 1


def primes_in_progression(
    residue: int, modulus: int, count: int, skip: Iterable[int] = ()
) -> list[int]:
    """First ``count`` primes congruent to ``residue`` mod ``modulus``."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    stream = iter_primes_in_progression(residue, modulus, skip)
    return [next(stream) for _ in range(count)]

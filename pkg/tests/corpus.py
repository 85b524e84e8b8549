"""Bundled example corpus used by the property suites (22 inputs).

Each entry carries a pair, the primes to sweep in level-1 tests, and the
(smaller) primes safe for e = 2 supermultiplicativity checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from fsing import CompleteIntersectionPair, poly_parse


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    pair: CompleteIntersectionPair
    primes: tuple[int, ...] = (2, 3, 5)
    deep_primes: tuple[int, ...] = (2, 3)  # used where q = p^2 arises


def _pair(nvars, aux, t=1, ci=(), witness=None):
    return CompleteIntersectionPair(
        nvars=nvars,
        ci_gens=tuple(poly_parse(f, nvars) for f in ci),
        aux_gens=tuple(poly_parse(f, nvars) for f in aux),
        t=Fraction(t),
        witness=None if witness is None else (poly_parse(witness[0], nvars), witness[1]),
    )


MINORS_2X3 = _pair(
    6,
    ["x1*x5 - x2*x4", "x2*x6 - x3*x5", "x1*x6 - x3*x4"],
    t=2,
)

ENTRIES: list[CorpusEntry] = [
    CorpusEntry("coordinate line", _pair(1, ["x1"]), primes=(2, 3, 5, 7)),
    CorpusEntry("double point", _pair(1, ["x1^2"]), primes=(2, 3, 5, 7)),
    CorpusEntry("triple point", _pair(1, ["x1^3"]), primes=(3, 5, 7)),
    CorpusEntry("two axes", _pair(2, ["x1", "x2"], t=2)),
    CorpusEntry("three axes", _pair(3, ["x1", "x2", "x3"], t=3)),
    CorpusEntry("node xy", _pair(2, ["x1*x2"])),
    CorpusEntry("monomial x2y3", _pair(2, ["x1^2*x2^3"])),
    CorpusEntry("cusp", _pair(2, ["x1^2 + x2^3"], t="5/6"), primes=(5, 7, 11)),
    CorpusEntry("tacnode-ish", _pair(2, ["x1^2 + x2^5"], t="7/10"), primes=(3, 7, 11)),
    CorpusEntry("hyperplane sum", _pair(2, ["x1 + x2"])),
    CorpusEntry("fermat cubic curve", _pair(2, ["x1^3 + x2^3"], t="2/3"), primes=(5, 7, 13)),
    CorpusEntry("smooth conic", _pair(2, ["x1^2 + x2^2"]), primes=(3, 5, 7)),
    CorpusEntry("square of sum", _pair(2, ["x1^2 + 2*x1*x2 + x2^2"], t="1/2"), primes=(3, 5, 7)),
    CorpusEntry("diagonal pair", _pair(2, ["x1^2", "x2^3"], t="5/6")),
    CorpusEntry("single minor", _pair(4, ["x1*x4 - x2*x3"])),
    CorpusEntry("2x3 minors", MINORS_2X3, primes=(2, 3, 5), deep_primes=(2, 3)),
    CorpusEntry("quadric 6vars", _pair(6, ["x1*x4 + x2*x5 + x3*x6"], t=3), primes=(2, 3, 5)),
    CorpusEntry(
        "space monomial curve",
        _pair(3, ["x1*x3 - x2^2", "x2*x3 - x1^3", "x3^2 - x1^2*x2"], t=1),
        primes=(2, 3, 5),
    ),
    CorpusEntry("binomial ci aux", _pair(4, ["x1"], ci=["x1*x2 - x3*x4"])),
    CorpusEntry("ci two axes", _pair(2, ["x2"], ci=["x1"])),
    CorpusEntry(
        "quadric cone witness",
        _pair(3, ["x1"], ci=["x1^2 + x2^2 + x3^2"], witness=("x1", 1)),
        primes=(3, 5, 7),
        deep_primes=(3,),
    ),
    CorpusEntry("monomial ideal mixed", _pair(2, ["x1^2*x2", "x1*x2^2"], t="2/3")),
]

assert len(ENTRIES) >= 20

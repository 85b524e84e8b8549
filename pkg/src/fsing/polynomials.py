"""Exact sparse multivariate polynomials over Q and over prime fields F_p.

Representation
--------------
A polynomial is a finite map from exponent vectors to nonzero coefficients:

    SparsePolynomial.terms : dict[tuple[int, ...], Fraction | int]

Exponent vectors are dense tuples of nonnegative integers, one entry per
variable of the ring.  Coefficients are `fractions.Fraction` over the
rationals and plain integers in ``[1, p)`` over F_p.  The zero polynomial is
the empty map, and every constructor canonicalizes (merges duplicate
exponents, drops zero coefficients), so structural equality is polynomial
equality.  No floating point is used anywhere.

Bracket powers
--------------
The F-purity tests work modulo Frobenius bracket powers of the maximal ideal
at the origin, ``(x_1^q, ..., x_n^q)`` with ``q = p^e``.  Since that is a
monomial ideal, reducing a product is just discarding monomials with an
exponent >= q, and the discarding may be interleaved with multiplication.
``poly_pow_truncated`` exploits this: binary exponentiation with truncation
after every product keeps intermediate term counts bounded by q^n.

The grammar accepted by :func:`poly_parse` uses variables ``x1..xn``,
integer or rational coefficients (``3``, ``-3/2``), and the operators
``+ - * ^``; implicit multiplication is not allowed and whitespace is
ignored.  Example: ``x1^2*x2 - 3/2*x3^4``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from . import kernels
from .errors import (
    CapExceeded,
    DenominatorDivisibleByP,
    PolyParseError,
    RingMismatchError,
)
from .modular import inverse_mod, is_prime

Coefficient = Union[Fraction, int]

#: Safety cap on the term count of any single product.  Exceeding it raises
#: CapExceeded rather than silently truncating.  Override with the
#: environment variable FSING_MAX_TERMS.
MAX_TERMS = int(os.environ.get("FSING_MAX_TERMS", "500000"))


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring: variable count plus coefficient domain.

    ``p is None`` means rational coefficients; otherwise coefficients live
    in the prime field F_p.
    """

    nvars: int
    p: int | None = None

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("ring needs at least one variable")
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def coerce(self, value) -> Coefficient:
        """Map an int/Fraction into the coefficient domain."""
        if self.p is None:
            return Fraction(value)
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise DenominatorDivisibleByP(self.p, value)
        return value.numerator * inverse_mod(value.denominator, self.p) % self.p

    def zero(self) -> SparsePolynomial:
        return SparsePolynomial(self, {})

    def one(self) -> SparsePolynomial:
        return SparsePolynomial(self, {(0,) * self.nvars: 1})

    def constant(self, value) -> SparsePolynomial:
        return SparsePolynomial(self, {(0,) * self.nvars: value})

    def variable(self, index: int) -> SparsePolynomial:
        """The variable x_{index}, 1-based."""
        if not 1 <= index <= self.nvars:
            raise ValueError(f"variable index {index} out of range 1..{self.nvars}")
        exps = [0] * self.nvars
        exps[index - 1] = 1
        return SparsePolynomial(self, {tuple(exps): 1})

    def __str__(self) -> str:
        domain = "QQ" if self.p is None else f"GF({self.p})"
        return f"{domain}[x1..x{self.nvars}]"


@dataclass(frozen=True)
class BracketBound:
    """Per-variable cap q for reduction mod (x_1^q, ..., x_n^q).

    The Frobenius semantics require q to be a power p^e of the ring
    characteristic; the F-purity layer always constructs bounds through
    :meth:`from_prime_power` and validates with :meth:`is_power_of`.  The
    truncation mechanics themselves are valid for any positive cap.
    """

    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("cap q must be positive")

    @classmethod
    def from_prime_power(cls, p: int, e: int) -> BracketBound:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("exponent e must be >= 1")
        return cls(p**e)

    def is_power_of(self, p: int) -> bool:
        q = self.q
        if q < p:
            return False
        while q % p == 0:
            q //= p
        return q == 1


class SparsePolynomial:
    """Immutable sparse polynomial in canonical form."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], Coefficient]):
        canonical: dict[tuple[int, ...], Coefficient] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != ring.nvars:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, ring has "
                    f"{ring.nvars} variables"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            total = ring.coerce(Fraction(canonical.get(exps, 0)) + Fraction(coeff))
            if total:
                canonical[exps] = total
            else:
                canonical.pop(exps, None)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", canonical)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> SparsePolynomial:
        """Internal fast path: ``terms`` must already be canonical."""
        self = object.__new__(cls)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("SparsePolynomial is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_coefficient(self) -> Coefficient:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def vanishes_at_origin(self) -> bool:
        return (0,) * self.ring.nvars not in self.terms

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Coefficient]]:
        """Terms in the canonical order: descending lexicographic."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def exponents(self) -> list[tuple[int, ...]]:
        return [exps for exps, _ in self.sorted_terms()]

    def _require_same_ring(self, other: SparsePolynomial):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            items = tuple(sorted(self.terms.items()))
            object.__setattr__(self, "_hash", hash((self.ring, items)))
        return self._hash

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._require_same_ring(other)
        out = dict(self.terms)
        p = self.ring.p
        for exps, coeff in other.terms.items():
            total = out.get(exps, 0) + coeff
            if p is not None:
                total %= p
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
        return SparsePolynomial._raw(self.ring, out)

    def __neg__(self) -> SparsePolynomial:
        p = self.ring.p
        if p is None:
            return SparsePolynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})
        return SparsePolynomial._raw(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        return self + (-other)

    def __mul__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._require_same_ring(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        if len(self.terms) * len(other.terms) > MAX_TERMS:
            raise CapExceeded(
                f"product of {len(self.terms)} x {len(other.terms)} terms exceeds "
                f"the term cap {MAX_TERMS}; raise FSING_MAX_TERMS to override"
            )
        p = self.ring.p
        acc: dict[tuple[int, ...], Coefficient] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(map(int.__add__, ea, eb))
                acc[e] = acc.get(e, 0) + ca * cb
        if p is None:
            out = {e: c for e, c in acc.items() if c}
        else:
            out = {e: c % p for e, c in acc.items() if c % p}
        if len(out) > MAX_TERMS:
            raise CapExceeded(f"product has {len(out)} terms, cap is {MAX_TERMS}")
        return SparsePolynomial._raw(self.ring, out)

    def __pow__(self, k: int) -> SparsePolynomial:
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __str__(self) -> str:
        return poly_format(self)

    def __repr__(self) -> str:
        return f"<{self.ring}: {poly_format(self)}>"


# ---------------------------------------------------------------------------
# parsing / formatting


_TOKEN_RE = re.compile(r"(?P<ws>\s+)|(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*/^])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def poly_parse(text: str, nvars: int, p: int | None = None) -> SparsePolynomial:
    """Parse the polynomial grammar into a canonical polynomial.

    Raises :class:`PolyParseError` with the offending position on syntax
    errors, unknown variables, and coefficients not representable in the
    requested domain.
    """
    ring = PolyRing(nvars, p)
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx]

    def take(kind: str, what: str):
        nonlocal idx
        tok = tokens[idx]
        if tok[0] != kind:
            raise PolyParseError(f"expected {what}, found {tok[1]!r}" if tok[1] else
                                 f"expected {what}, found end of input", tok[2])
        idx += 1
        return tok

    def parse_coefficient() -> Coefficient:
        nonlocal idx
        tok = take("int", "a number")
        value = Fraction(int(tok[1]))
        if peek()[0] == "op" and peek()[1] == "/":
            idx += 1
            den_tok = take("int", "a denominator")
            den = int(den_tok[1])
            if den == 0:
                raise PolyParseError("zero denominator", den_tok[2])
            value /= den
        if ring.p is not None:
            try:
                return ring.coerce(value)
            except DenominatorDivisibleByP:
                raise PolyParseError(
                    f"coefficient {value} not representable in GF({ring.p})", tok[2]
                ) from None
        return value

    def parse_factor() -> tuple[Coefficient, tuple[int, ...]]:
        nonlocal idx
        tok = peek()
        if tok[0] == "int":
            return parse_coefficient(), (0,) * ring.nvars
        if tok[0] == "var":
            idx += 1
            index = int(tok[1][1:])
            if not 1 <= index <= ring.nvars:
                raise PolyParseError(
                    f"unknown variable {tok[1]} (ring has {ring.nvars} variables)", tok[2]
                )
            exponent = 1
            if peek()[0] == "op" and peek()[1] == "^":
                idx += 1
                exponent = int(take("int", "an exponent")[1])
            exps = [0] * ring.nvars
            exps[index - 1] = exponent
            return ring.coerce(1), tuple(exps)
        raise PolyParseError(
            f"expected a coefficient or variable, found {tok[1]!r}" if tok[1] else
            "expected a coefficient or variable, found end of input", tok[2])

    def parse_term() -> tuple[Coefficient, tuple[int, ...]]:
        nonlocal idx
        coeff, exps = parse_factor()
        while peek()[0] == "op" and peek()[1] == "*":
            idx += 1
            c2, e2 = parse_factor()
            coeff = coeff * c2 if ring.p is None else coeff * c2 % ring.p
            exps = tuple(map(int.__add__, exps, e2))
        return coeff, exps

    terms: dict[tuple[int, ...], Coefficient] = {}

    def add_term(sign: int):
        coeff, exps = parse_term()
        if sign < 0:
            coeff = -coeff if ring.p is None else (-coeff) % ring.p
        total = terms.get(exps, 0) + coeff
        if ring.p is not None:
            total %= ring.p
        if total:
            terms[exps] = total
        else:
            terms.pop(exps, None)

    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if peek()[1] == "-" else 1
        idx += 1
    add_term(sign)
    while peek()[0] != "end":
        tok = take("op", "'+' or '-'")
        if tok[1] not in "+-":
            raise PolyParseError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
        add_term(-1 if tok[1] == "-" else 1)

    return SparsePolynomial._raw(ring, terms)


def _format_monomial(exps: tuple[int, ...]) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def poly_format(f: SparsePolynomial) -> str:
    """Canonical text form; round-trips through :func:`poly_parse`."""
    if f.is_zero:
        return "0"
    pieces = []
    for exps, coeff in f.sorted_terms():
        mono = _format_monomial(exps)
        negative = f.ring.p is None and coeff < 0
        magnitude = -coeff if negative else coeff
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


# ---------------------------------------------------------------------------
# reduction mod p and bracket-power arithmetic


def reduce_mod_p(f: SparsePolynomial, p: int) -> SparsePolynomial:
    """Reduce a rational polynomial mod p.

    Raises :class:`DenominatorDivisibleByP` when some coefficient a/b has
    p | b, which marks p as a prime of bad reduction for this input.
    """
    if f.ring.p is not None:
        raise RingMismatchError("reduce_mod_p expects a rational polynomial")
    ring = PolyRing(f.ring.nvars, p)
    out: dict[tuple[int, ...], int] = {}
    for exps, coeff in f.terms.items():
        c = ring.coerce(coeff)
        if c:
            out[exps] = c
    return SparsePolynomial._raw(ring, out)


def truncate_mod_bracket(f: SparsePolynomial, bound: BracketBound) -> SparsePolynomial:
    """Discard every monomial with some exponent >= q."""
    q = bound.q
    kept = {e: c for e, c in f.terms.items() if max(e) < q}
    if len(kept) == len(f.terms):
        return f
    return SparsePolynomial._raw(f.ring, kept)


def is_nonzero_mod_bracket(f: SparsePolynomial, bound: BracketBound) -> bool:
    """True iff f has a monomial with all exponents < q, i.e. f is not in
    the bracket power (x_1^q, ..., x_n^q)."""
    q = bound.q
    return any(max(e) < q for e in f.terms)


def mul_trunc(a: SparsePolynomial, b: SparsePolynomial, bound: BracketBound) -> SparsePolynomial:
    """Product reduced mod the bracket power, via the selected kernel."""
    a._require_same_ring(b)
    if a.ring.p is None:
        raise RingMismatchError("mul_trunc expects prime-field polynomials")
    if not a.terms or not b.terms:
        return a.ring.zero()
    if len(a.terms) * len(b.terms) > MAX_TERMS:
        raise CapExceeded(
            f"truncated product of {len(a.terms)} x {len(b.terms)} terms exceeds "
            f"the term cap {MAX_TERMS}; raise FSING_MAX_TERMS to override"
        )
    out = kernels.mul_trunc_mod(a.terms, b.terms, a.ring.p, bound.q, a.ring.nvars)
    if len(out) > MAX_TERMS:
        raise CapExceeded(f"truncated product has {len(out)} terms, cap is {MAX_TERMS}")
    return SparsePolynomial._raw(a.ring, out)


def poly_mul(a: SparsePolynomial, b: SparsePolynomial) -> SparsePolynomial:
    """Exact product (no truncation)."""
    return a * b


def poly_pow_truncated(f: SparsePolynomial, k: int, bound: BracketBound) -> SparsePolynomial:
    """f^k reduced mod the bracket power (x_1^q, ..., x_n^q).

    Binary exponentiation, truncating after every product; sound because the
    bracket power is a monomial ideal and therefore absorbing.
    """
    if f.ring.p is None:
        raise RingMismatchError("poly_pow_truncated expects a prime-field polynomial")
    if k < 0:
        raise ValueError("negative powers are not defined")
    result = f.ring.one()
    base = truncate_mod_bracket(f, bound)
    while k:
        if k & 1:
            result = mul_trunc(result, base, bound)
        k >>= 1
        if k:
            base = mul_trunc(base, base, bound)
    return result

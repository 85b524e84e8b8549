"""Exception hierarchy for the fsing package.

Everything raised on purpose derives from :class:`FsingError`, so callers
(and the CLI) can distinguish expected computational failures from bugs.
"""

from __future__ import annotations


class FsingError(Exception):
    """Base class for all errors raised by this package."""


class PolyParseError(FsingError):
    """Syntax error in the polynomial grammar, with a 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RingMismatchError(FsingError):
    """Operands live in different polynomial rings."""


class DenominatorDivisibleByP(FsingError):
    """A rational coefficient has a denominator divisible by p.

    Signals that this prime has bad reduction and must be excluded from
    prime sweeps.
    """

    def __init__(self, p: int, coefficient):
        super().__init__(f"denominator of {coefficient} is divisible by {p}")
        self.p = p
        self.coefficient = coefficient


class PrimeExcluded(FsingError):
    """The requested prime cannot be used (bad reduction of the input)."""

    def __init__(self, p: int, reason: str = "bad reduction"):
        super().__init__(f"prime {p} excluded: {reason}")
        self.p = p


class CongruenceViolated(FsingError):
    """A prime fails the congruence required by a defect witness."""

    def __init__(self, p: int, modulus: int):
        super().__init__(f"prime {p} is not congruent to 1 mod {modulus}")
        self.p = p
        self.modulus = modulus


class CapExceeded(FsingError):
    """A configured safety cap (term count, power, enumeration size) was hit.

    Raised instead of silently truncating a computation.
    """


class ZeroPolynomialError(FsingError):
    """A nonzero polynomial was required."""


class ConstantTermError(FsingError):
    """A polynomial was required to vanish at the origin."""


class NonIntegralExponent(FsingError):
    """A rational weight does not scale to an integer exponent at this prime."""


class BlockSumExceedsPMinusOne(FsingError):
    """A block of weights sums beyond p - 1 after scaling."""


class EmptyBasisError(FsingError):
    """The requested cohomology basis is empty (degree too small)."""


class FormatError(FsingError):
    """A structured input file or report is malformed."""


class UsageError(FsingError):
    """Invalid command line (maps to exit code 2)."""

"""fsing: exact F-purity and log-canonical-threshold computations.

Sparse polynomial arithmetic over Q and F_p with Frobenius bracket-power
reduction, Fedder-type F-purity tests and nu-values, an exact rational
simplex driving Newton-polyhedron threshold programs, prime sweeps comparing
the two sides, and Frobenius matrices of Fermat hypersurfaces.
"""

from .correspondence import (
    CorrespondenceReport,
    PrimePlan,
    PrimeRecord,
    lcm_of_denominators,
    prime_stream,
    report_from_json,
    report_to_json,
    report_to_text,
    run_correspondence,
)
from .errors import (
    BlockSumExceedsPMinusOne,
    CapExceeded,
    CongruenceViolated,
    ConstantTermError,
    DenominatorDivisibleByP,
    EmptyBasisError,
    FormatError,
    FsingError,
    NonIntegralExponent,
    PolyParseError,
    PrimeExcluded,
    RingMismatchError,
    UsageError,
    ZeroPolynomialError,
)
from .fedder import (
    CompleteIntersectionPair,
    FptEstimate,
    exponent_split_search,
    fedder_pair_test,
    fpt_estimate,
    nu_value,
    pair_nu_value,
)
from .fermat import (
    FrobeniusMatrix,
    build_basis,
    build_frobenius_matrix,
    frobenius_injective,
)
from .kernels import active_kernel, compiled_available
from .newton import (
    ExponentProgram,
    LPSolution,
    build_program,
    howald_lct,
    interior_test,
    program_from_text,
    program_to_text,
    solve_lct_lp,
    split_multinomial_nonzero,
    uniqueness_check,
)
from .polynomials import (
    BracketBound,
    PolyRing,
    SparsePolynomial,
    is_nonzero_mod_bracket,
    mul_trunc,
    poly_format,
    poly_mul,
    poly_parse,
    poly_pow_truncated,
    reduce_mod_p,
    truncate_mod_bracket,
)

__version__ = "0.1.0"

"""Exact nonzero-counting toolkit for sparse polynomials on finite grids.

The package detects leading-monomial hypotheses, derives certified lower
bounds on the number of grid points where a polynomial is nonzero, and
checks every claim against brute-force enumeration.  Companion tools
cover grid trimming, coefficient extraction from grid values, randomized
identity testing of expression DAGs, and an extremal search over small
multiplication/addition table pairs.
"""

from .analysis import (
    CONDITIONS,
    D_LEADING,
    LEX_LARGEST,
    MAXIMAL_MONOMIAL,
    PARTIAL_DEGREES,
    SUCCESSIVELY_LARGEST,
    TOTAL_DEGREE,
    HypothesisReport,
    classify,
    forbidden_set,
    hypothesis_holds,
    is_d_leading,
    lex_largest,
    maximal_monomials,
    successively_largest,
)
from .bounds import (
    AFInstance,
    BoundReport,
    additive_existence_bound,
    alon_furedi_original_bound,
    collect_bounds,
    demillo_lipton_bound,
    erdos_density_bound,
    gen_alon_furedi_bound,
    kst_exponent,
    min_products_by_total,
    product_bound,
    schwartz_additive_bound,
    schwartz_zippel_count,
    sz_probability,
    zippel_bound,
)
from .errors import (
    ArityMismatchError,
    ExponentOverflowError,
    GridTooLargeError,
    HypothesisViolationError,
    InsufficientSampleSpaceError,
    NullgridError,
    ParseError,
    RingMismatchError,
    SearchBudgetError,
    UnknownVariableError,
    UnsupportedRingError,
    ZeroPolynomialError,
)
from .oracle import (
    BoundCheck,
    GridCount,
    MinNonzeroResult,
    VerificationReport,
    count_nonzeros,
    min_nonzero_search,
    random_polynomial,
    tightness_family,
    verify_bounds,
)
from .parser import (
    ExprDag,
    DagBuilder,
    expand_dag,
    infer_variables,
    parse_dag,
    parse_poly,
)
from .pit import PitVerdict, dag_difference, degree_upper_bound, eval_dag, identity_test
from .poly import (
    GridSpec,
    Polynomial,
    check_compatible,
    decompose_by_variable,
    divide_linear,
    recompose,
    vanishing_poly,
)
from .puzzle import (
    AgreementPattern,
    LocalSearchResult,
    PuzzleInstance,
    SearchResult,
    agreement_count,
    exhaustive_search,
    from_polynomial,
    k22_check,
    local_search,
    zarankiewicz_k22_bound,
)
from .ring import CheckResult, RingElem, RingSpec, grid_condition_check, is_prime
from .transform import (
    Multipliers,
    coefficient_via_grid,
    grid_values,
    trim,
    vandermonde_multipliers,
)

__version__ = "0.1.0"

__all__ = [
    "AFInstance",
    "AgreementPattern",
    "ArityMismatchError",
    "BoundCheck",
    "BoundReport",
    "CONDITIONS",
    "CheckResult",
    "D_LEADING",
    "DagBuilder",
    "ExponentOverflowError",
    "ExprDag",
    "GridCount",
    "GridSpec",
    "GridTooLargeError",
    "HypothesisReport",
    "HypothesisViolationError",
    "InsufficientSampleSpaceError",
    "LEX_LARGEST",
    "LocalSearchResult",
    "MAXIMAL_MONOMIAL",
    "MinNonzeroResult",
    "Multipliers",
    "NullgridError",
    "PARTIAL_DEGREES",
    "ParseError",
    "PitVerdict",
    "Polynomial",
    "PuzzleInstance",
    "RingElem",
    "RingMismatchError",
    "RingSpec",
    "SUCCESSIVELY_LARGEST",
    "SearchBudgetError",
    "SearchResult",
    "TOTAL_DEGREE",
    "UnknownVariableError",
    "UnsupportedRingError",
    "VerificationReport",
    "ZeroPolynomialError",
    "additive_existence_bound",
    "agreement_count",
    "alon_furedi_original_bound",
    "check_compatible",
    "classify",
    "coefficient_via_grid",
    "collect_bounds",
    "count_nonzeros",
    "dag_difference",
    "decompose_by_variable",
    "degree_upper_bound",
    "demillo_lipton_bound",
    "divide_linear",
    "erdos_density_bound",
    "eval_dag",
    "exhaustive_search",
    "expand_dag",
    "forbidden_set",
    "from_polynomial",
    "gen_alon_furedi_bound",
    "grid_condition_check",
    "grid_values",
    "hypothesis_holds",
    "identity_test",
    "infer_variables",
    "is_d_leading",
    "is_prime",
    "k22_check",
    "kst_exponent",
    "lex_largest",
    "local_search",
    "maximal_monomials",
    "min_nonzero_search",
    "min_products_by_total",
    "parse_dag",
    "parse_poly",
    "product_bound",
    "random_polynomial",
    "recompose",
    "schwartz_additive_bound",
    "schwartz_zippel_count",
    "successively_largest",
    "sz_probability",
    "tightness_family",
    "trim",
    "vandermonde_multipliers",
    "vanishing_poly",
    "verify_bounds",
    "zarankiewicz_k22_bound",
    "zippel_bound",
]

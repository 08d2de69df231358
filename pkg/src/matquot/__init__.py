"""Exact linear algebra over elementary divisor domains.

Solve B * X = A over the integers or over rational-coefficient
polynomials, parametrize every solution, and construct the left gcd and
left lcm of the solution set, both of which are themselves solutions.
"""

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    MatquotError,
    MatrixParseError,
    NotDivisible,
    NotSolvable,
    ReductionInvariantError,
    TooLarge,
)
from .gcd_lcm import (
    GcdLcmPair,
    cofactor,
    gcd_lcm_pair,
    lcm_projector,
    left_divides,
    left_gcd,
    left_lcm,
    mutually_associate,
    right_divides,
)
from .matio import format_matrix, matrix_to_json, parse_matrix_file, parse_matrix_text
from .matrix import Matrix, hstack, vstack
from .normal_forms import (
    HermiteDecomposition,
    SmithDecomposition,
    hermite_col,
    invariant_factors,
    smith,
    verified_reduction_count,
)
from .oracle import ColumnModule, column_module, exhaustive_solutions, hnf_solve
from .rings import QX, ZZ, BezoutTriple, IntegerRing, QPoly, RationalPolyRing, RINGS
from .solver import (
    AnnihilatorParameter,
    SolutionParameter,
    SolutionSet,
    SolvabilityCertificate,
    annihilator_element,
    annihilator_generators,
    build_solution_set,
    certify,
    check_solvable_augmented,
    divisibility_failure,
    general_solution,
    particular_solution,
    solution_core,
)

__version__ = "0.1.0"

__all__ = [
    "AnnihilatorParameter",
    "BezoutTriple",
    "ColumnModule",
    "DimensionMismatch",
    "DivisionByZero",
    "GcdLcmPair",
    "HermiteDecomposition",
    "IntegerRing",
    "MatquotError",
    "Matrix",
    "MatrixParseError",
    "NotDivisible",
    "NotSolvable",
    "QPoly",
    "QX",
    "RINGS",
    "RationalPolyRing",
    "ReductionInvariantError",
    "SmithDecomposition",
    "SolutionParameter",
    "SolutionSet",
    "SolvabilityCertificate",
    "TooLarge",
    "ZZ",
    "annihilator_element",
    "annihilator_generators",
    "build_solution_set",
    "certify",
    "check_solvable_augmented",
    "cofactor",
    "column_module",
    "divisibility_failure",
    "exhaustive_solutions",
    "format_matrix",
    "gcd_lcm_pair",
    "general_solution",
    "hermite_col",
    "hnf_solve",
    "hstack",
    "invariant_factors",
    "lcm_projector",
    "left_divides",
    "left_gcd",
    "left_lcm",
    "matrix_to_json",
    "mutually_associate",
    "parse_matrix_file",
    "parse_matrix_text",
    "particular_solution",
    "right_divides",
    "smith",
    "solution_core",
    "verified_reduction_count",
    "vstack",
]

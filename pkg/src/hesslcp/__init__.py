"""Exact-arithmetic solver for linear complementarity problems whose matrix
is a tridiagonal or Hessenberg P-matrix, with a brute-force oracle,
matrix-class analyzers, and the orientation digraph over the basis hypercube.
"""

from .analysis import (
    StructureProfile,
    classify,
    has_t_hole,
    is_nondegenerate,
    is_p_matrix,
    is_z_matrix,
)
from .digraph import (
    OrientationDigraph,
    build_digraph,
    contains_cycle,
    find_cycle,
    find_sinks,
    to_dot,
)
from .errors import (
    AllZeroError,
    DimensionMismatchError,
    HessLCPError,
    IndexSetError,
    InstanceFormatError,
    InvalidArgumentError,
    MalformedCycleError,
    NoCandidatePassedError,
    NoOptimalBasisError,
    PrefixIncompleteError,
    SingularMatrixError,
    StructureError,
    TooLargeError,
)
from .exact import (
    BACKEND,
    Matrix,
    Vector,
    as_scalar,
    determinant,
    format_scalar,
    gauss_solve,
    parse_scalar,
    principal_submatrix,
    solve_column,
    subvector,
)
from .instance_io import (
    dump_instance,
    dumps_instance,
    load_cycle,
    load_instance,
    loads_cycle,
    loads_instance,
)
from .lcp import (
    Basis,
    ComplementaryPair,
    LCPInstance,
    basis_matrix,
    basis_solution,
    basis_test,
    basis_test_lex,
    complementary_pair,
    lex_sign,
    lex_table,
    verify_solution,
)
from .oracle import (
    EnumerationResult,
    brute_force_solve,
    generate_instance,
    prefix_bases_brute,
)
from .solver import (
    PrefixBases,
    SolveReport,
    candidates,
    reverse_instance,
    solve,
    solve_lower_hessenberg,
    solve_upper_hessenberg,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroError",
    "BACKEND",
    "Basis",
    "ComplementaryPair",
    "DimensionMismatchError",
    "EnumerationResult",
    "HessLCPError",
    "IndexSetError",
    "InstanceFormatError",
    "InvalidArgumentError",
    "LCPInstance",
    "MalformedCycleError",
    "Matrix",
    "NoCandidatePassedError",
    "NoOptimalBasisError",
    "OrientationDigraph",
    "PrefixBases",
    "PrefixIncompleteError",
    "SingularMatrixError",
    "SolveReport",
    "StructureError",
    "StructureProfile",
    "TooLargeError",
    "Vector",
    "as_scalar",
    "basis_matrix",
    "basis_solution",
    "basis_test",
    "basis_test_lex",
    "brute_force_solve",
    "build_digraph",
    "candidates",
    "classify",
    "complementary_pair",
    "contains_cycle",
    "determinant",
    "dump_instance",
    "dumps_instance",
    "find_cycle",
    "find_sinks",
    "format_scalar",
    "gauss_solve",
    "generate_instance",
    "has_t_hole",
    "is_nondegenerate",
    "is_p_matrix",
    "is_z_matrix",
    "lex_sign",
    "lex_table",
    "load_cycle",
    "load_instance",
    "loads_cycle",
    "loads_instance",
    "parse_scalar",
    "prefix_bases_brute",
    "principal_submatrix",
    "reverse_instance",
    "solve",
    "solve_column",
    "solve_lower_hessenberg",
    "solve_upper_hessenberg",
    "subvector",
    "to_dot",
    "verify_solution",
]

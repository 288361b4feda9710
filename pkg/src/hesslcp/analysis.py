"""Structural classification and matrix-class predicates.

classify() measures half-bandwidths; the class checks (P-matrix,
nondegeneracy) are exhaustive and exact, so they carry a size guard and are
never called implicitly by the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import IndexSetError, InvalidArgumentError, SingularMatrixError
from .exact import Matrix, ZERO, determinant, principal_submatrix
from .lcp import Basis, LCPInstance, basis_solution, check_basis
from .limits import DEFAULT_ENUMERATION_LIMIT, check_dimension


@dataclass(frozen=True)
class StructureProfile:
    """Band structure of a square matrix.

    left_half_bandwidth is the largest i - j over nonzero entries below the
    diagonal (0 if none), right_half_bandwidth the mirror image above it, and
    bandwidth counts the diagonals of the enclosing band (0 for the zero
    matrix, left + right + 1 otherwise).
    """

    n: int
    left_half_bandwidth: int
    right_half_bandwidth: int
    is_zero: bool

    @property
    def bandwidth(self) -> int:
        if self.is_zero:
            return 0
        return self.left_half_bandwidth + self.right_half_bandwidth + 1

    @property
    def is_lower_hessenberg(self) -> bool:
        return self.right_half_bandwidth <= 1

    @property
    def is_upper_hessenberg(self) -> bool:
        return self.left_half_bandwidth <= 1

    @property
    def is_tridiagonal(self) -> bool:
        return self.left_half_bandwidth <= 1 and self.right_half_bandwidth <= 1

    @property
    def label(self) -> str:
        if self.is_tridiagonal:
            return "tridiagonal"
        if self.is_lower_hessenberg:
            return "lower_hessenberg"
        if self.is_upper_hessenberg:
            return "upper_hessenberg"
        return "general"


def classify(m: Matrix) -> StructureProfile:
    """Measure the half-bandwidths of a square matrix."""
    if not m.is_square:
        raise InvalidArgumentError(f"classify needs a square matrix, got {m.n_rows}x{m.n_cols}")
    n = m.n_rows
    left = right = 0
    nonzero = False
    for i in range(n):
        row = m.row(i)
        for j in range(n):
            if row[j] != ZERO:
                nonzero = True
                if i > j:
                    left = max(left, i - j)
                elif j > i:
                    right = max(right, j - i)
    return StructureProfile(n, left, right, not nonzero)


def is_p_matrix(m: Matrix, limit: int | None = None) -> bool:
    """True iff every principal minor is positive (2^n - 1 determinants)."""
    if not m.is_square:
        raise InvalidArgumentError("is_p_matrix needs a square matrix")
    n = m.n_rows
    check_dimension(n, DEFAULT_ENUMERATION_LIMIT, limit, "is_p_matrix")
    # 1x1 minors first: they reject most non-P matrices before any elimination
    for size in range(1, n + 1):
        for subset in combinations(range(1, n + 1), size):
            if determinant(principal_submatrix(m, subset)) <= ZERO:
                return False
    return True


def is_z_matrix(m: Matrix) -> bool:
    """True iff every off-diagonal entry is <= 0 (diagonal unconstrained)."""
    if not m.is_square:
        raise InvalidArgumentError("is_z_matrix needs a square matrix")
    n = m.n_rows
    return all(m[i, j] <= ZERO for i in range(n) for j in range(n) if i != j)


def is_nondegenerate(instance: LCPInstance, limit: int | None = None) -> bool:
    """True iff no basis solves to a coordinate that is exactly zero.

    Exhaustive over all 2^n bases.  Bases whose basis matrix is singular
    contribute no coordinates and are skipped (they cannot occur when M has
    all principal minors nonzero).
    """
    n = instance.n
    check_dimension(n, DEFAULT_ENUMERATION_LIMIT, limit, "is_nondegenerate")
    for bits in range(1 << n):
        basis = frozenset(i + 1 for i in range(n) if bits >> i & 1)
        try:
            x = basis_solution(instance, basis)
        except SingularMatrixError:
            continue
        if any(xi == ZERO for xi in x):
            return False
    return True


def has_t_hole(basis: Basis, k: int, t: int) -> bool:
    """True iff some contiguous window {i, ..., i+t-1} inside {1..k} misses the basis.

    t larger than k means no window exists, hence False.
    """
    if k < 0:
        raise InvalidArgumentError(f"k must be nonnegative, got {k}")
    if t < 1:
        raise InvalidArgumentError(f"t must be at least 1, got {t}")
    b = check_basis(basis, k)
    if t > k:
        return False
    for i in range(1, k - t + 2):
        if all(j not in b for j in range(i, i + t)):
            return True
    return False

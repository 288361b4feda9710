"""Core objects for the linear complementarity problem.

An instance is a square matrix M and a vector q; a solution is a pair of
nonnegative vectors (w, z) with w - M z = q and w_i z_i = 0 for every i.
Each candidate basis B (a subset of {1..n}) selects, per coordinate, whether
the z-variable (i in B) or the w-variable (i not in B) is allowed to be
nonzero, and solving the corresponding square system decides whether B is
optimal: it is exactly when the solved coordinates come out nonnegative.

Degenerate instances (some solved coordinate exactly zero) can have several
optimal bases.  The lexicographic routines break those ties by perturbing q
to q + (eps, eps^2, ..., eps^n) symbolically: a coordinate's sign for every
small eps > 0 is the first nonzero of the row [x_i | row i of the basis
matrix inverse], so no numeric eps is ever chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import AllZeroError, DimensionMismatchError, IndexSetError
from .exact import Matrix, Vector, ZERO, scalar_sign, solve_column, gauss_solve

Basis = frozenset[int]

EMPTY_BASIS: Basis = frozenset()


@dataclass(frozen=True)
class LCPInstance:
    """A matrix M and right-hand side q of matching size."""

    matrix: Matrix
    rhs: Vector
    name: Optional[str] = None

    def __post_init__(self):
        if not self.matrix.is_square:
            raise DimensionMismatchError(
                f"M must be square, got {self.matrix.n_rows}x{self.matrix.n_cols}"
            )
        if len(self.rhs) != self.matrix.n_rows:
            raise DimensionMismatchError(
                f"q has length {len(self.rhs)}, M is {self.matrix.n_rows}x{self.matrix.n_rows}"
            )

    @property
    def n(self) -> int:
        return self.matrix.n_rows


class ComplementaryPair(NamedTuple):
    w: Vector
    z: Vector


def check_basis(basis, n: int) -> Basis:
    """Validate a basis as a subset of {1..n} (empty allowed)."""
    b = frozenset(basis)
    for i in b:
        if not isinstance(i, int) or isinstance(i, bool):
            raise IndexSetError(f"basis entries must be ints, got {i!r}")
        if i < 1 or i > n:
            raise IndexSetError(f"basis entry {i} out of range 1..{n}")
    return b


def basis_matrix(instance: LCPInstance, basis: Basis) -> Matrix:
    """Square matrix whose column j is -M[:,j] if j+1 is in the basis, else e_j."""
    m, n = instance.matrix, instance.n
    basis = check_basis(basis, n)
    rows = []
    for i in range(n):
        mrow = m.row(i)
        rows.append(
            [
                -mrow[j] if (j + 1) in basis else (1 if i == j else 0)
                for j in range(n)
            ]
        )
    return Matrix(rows)


def basis_solution(instance: LCPInstance, basis: Basis) -> Vector:
    """The solved coordinates x with (basis matrix) x = q.

    x_i is the value of z_i when i is in the basis and of w_i otherwise.
    Raises SingularMatrixError when the basis matrix is singular (never the
    case when M has all principal minors nonzero).
    """
    return solve_column(basis_matrix(instance, basis), instance.rhs)


def complementary_pair(
    instance: LCPInstance, basis: Basis, x: Optional[Vector] = None
) -> ComplementaryPair:
    """Scatter the solved coordinates of a basis into the full (w, z) pair."""
    if x is None:
        x = basis_solution(instance, basis)
    n = instance.n
    w = Vector(ZERO if (i + 1) in basis else x[i] for i in range(n))
    z = Vector(x[i] if (i + 1) in basis else ZERO for i in range(n))
    # w - M z = q must hold identically; anything else is an internal bug
    residual = Vector(
        wi - mz for wi, mz in zip(w, instance.matrix.mul_vector(z))
    )
    assert residual == instance.rhs, "complementary pair does not satisfy w - M z = q"
    return ComplementaryPair(w, z)


def basis_test(instance: LCPInstance, basis: Basis) -> bool:
    """True when the basis is optimal for the unperturbed instance."""
    return all(xi >= ZERO for xi in basis_solution(instance, basis))


def verify_solution(instance: LCPInstance, pair: ComplementaryPair) -> bool:
    """Check nonnegativity, w - M z = q, and complementarity, all exactly."""
    w, z = pair
    if len(w) != instance.n or len(z) != instance.n:
        return False
    if any(x < ZERO for x in w) or any(x < ZERO for x in z):
        return False
    mz = instance.matrix.mul_vector(z)
    if any(wi - mzi != qi for wi, mzi, qi in zip(w, mz, instance.rhs)):
        return False
    return all(wi * zi == ZERO for wi, zi in zip(w, z))


def lex_table(instance: LCPInstance, basis: Basis) -> Matrix:
    """Rows of [x | inverse of the basis matrix], the symbolic-perturbation table.

    Row i of this n x (n+1) matrix lists the coefficients of coordinate i of
    the solution as a polynomial in eps: constant term first, then the eps^1
    .. eps^n coefficients coming from perturbing q by (eps, ..., eps^n).
    """
    bm = basis_matrix(instance, basis)
    n = instance.n
    aug = Matrix(
        [[instance.rhs[i]] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    )
    return gauss_solve(bm, aug)


def lex_sign(row) -> int:
    """Sign of the first nonzero coefficient; the row must not be all zero."""
    for x in row:
        s = scalar_sign(x)
        if s != 0:
            return s
    raise AllZeroError("perturbation row is identically zero")


def lex_positive(row) -> bool:
    return lex_sign(row) > 0


def basis_test_lex(instance: LCPInstance, basis: Basis) -> bool:
    """True when the basis is optimal for the symbolically perturbed instance.

    Cheap path first: with a strictly positive (or somewhere-negative) plain
    solution the perturbation cannot change the verdict, so the full table is
    computed only when some coordinate is exactly zero.
    """
    x = basis_solution(instance, basis)
    if any(xi < ZERO for xi in x):
        return False
    if all(xi > ZERO for xi in x):
        return True
    table = lex_table(instance, basis)
    return all(lex_positive(table.row(i)) for i in range(instance.n))

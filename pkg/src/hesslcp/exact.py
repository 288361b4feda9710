"""Exact rational scalars, dense matrices/vectors, and Gaussian elimination.

Everything downstream computes with arbitrary-precision rationals; there is
no floating point anywhere in the solve path.  Scalars are gmpy2.mpq when
gmpy2 is importable (much faster gcd/normalization) and fractions.Fraction
otherwise; both expose .numerator/.denominator and identical arithmetic.

Matrix and Vector use 0-based positions, Python style.  Index *sets* (bases,
principal submatrix selectors) are 1-based throughout the package, matching
the usual 1..n convention of the problem statement and all human-facing
output.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .errors import DimensionMismatchError, IndexSetError, SingularMatrixError

try:
    from gmpy2 import mpq as _rational

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _rational = Fraction
    BACKEND = "fractions"

Scalar = type(_rational(0))

ZERO = _rational(0)
ONE = _rational(1)

# optional sign, integer, optionally "/" positive-integer; floats never match
_RATIONAL_RE = re.compile(r"^[+-]?[0-9]+(?:/[0-9]+)?$")


def parse_scalar(text: str):
    """Parse a rational literal such as "-81" or "7/3" into a scalar."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    s = s.removeprefix("+")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return _rational(int(num), int(den))
    return _rational(int(s))


def format_scalar(x) -> str:
    """Canonical text form: "5" for integers, "p/q" otherwise."""
    num, den = x.numerator, x.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def as_scalar(value):
    """Coerce int, rational literal string, Fraction, or scalar to a scalar.

    Floats are rejected: they would silently destroy exactness.
    """
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return _rational(value)
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, Fraction):
        return _rational(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError(f"float {value!r} rejected: arithmetic here is exact")
    raise TypeError(f"cannot interpret {type(value).__name__} as a scalar")


def scalar_sign(x) -> int:
    """-1, 0, or +1."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


class Vector:
    """Immutable dense vector of exact rationals."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable):
        self._entries = tuple(as_scalar(x) for x in entries)
        if not self._entries:
            raise DimensionMismatchError("vector must have at least one entry")

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i: int):
        return self._entries[i]

    def __eq__(self, other):
        return isinstance(other, Vector) and self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return f"Vector([{', '.join(format_scalar(x) for x in self._entries)}])"

    def dot(self, other: "Vector"):
        if len(self) != len(other):
            raise DimensionMismatchError("dot product needs equal lengths")
        return sum((a * b for a, b in zip(self, other)), ZERO)


class Matrix:
    """Immutable dense matrix of exact rationals.

    Band-structured inputs are stored dense as well: problem sizes here are
    desk scale and exact elimination dominates the cost anyway.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self._rows = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if not self._rows:
            raise DimensionMismatchError("matrix must have at least one row")
        width = len(self._rows[0])
        if width == 0 or any(len(r) != width for r in self._rows):
            raise DimensionMismatchError("matrix rows must be nonempty and equally long")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, vec: Vector) -> "Matrix":
        """The n x 1 matrix holding vec."""
        return cls([[x] for x in vec])

    @property
    def n_rows(self) -> int:
        return len(self._rows)

    @property
    def n_cols(self) -> int:
        return len(self._rows[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def rows(self):
        return iter(self._rows)

    def col(self, j: int) -> Vector:
        return Vector(r[j] for r in self._rows)

    def col_entries(self, j: int) -> list:
        return [r[j] for r in self._rows]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._rows))

    def mul_vector(self, vec: Vector) -> Vector:
        if len(vec) != self.n_cols:
            raise DimensionMismatchError("matrix-vector size mismatch")
        return Vector(sum((a * x for a, x in zip(row, vec)), ZERO) for row in self._rows)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.n_cols != other.n_rows:
            raise DimensionMismatchError("matrix-matrix size mismatch")
        cols = [other.col_entries(j) for j in range(other.n_cols)]
        return Matrix(
            [sum((a * b for a, b in zip(row, col)), ZERO) for col in cols]
            for row in self._rows
        )

    def __eq__(self, other):
        return isinstance(other, Matrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join(
            "[" + ", ".join(format_scalar(x) for x in row) + "]" for row in self._rows
        )
        return f"Matrix([{body}])"


def _require_square(a: Matrix, what: str = "matrix"):
    if not a.is_square:
        raise DimensionMismatchError(f"{what} must be square, got {a.n_rows}x{a.n_cols}")


def gauss_solve(a: Matrix, rhs: Matrix) -> Matrix:
    """Solve A X = RHS exactly for a square A and a multi-column RHS.

    Elimination pivots on the first nonzero entry of each column: with exact
    arithmetic there is nothing numerical to stabilize, and the deterministic
    choice keeps runs reproducible.  Raises SingularMatrixError when some
    column has no pivot.
    """
    _require_square(a)
    n = a.n_rows
    if rhs.n_rows != n:
        raise DimensionMismatchError("right-hand side row count must match A")
    m = rhs.n_cols
    width = n + m
    aug = [list(a.row(i)) + list(rhs.row(i)) for i in range(n)]

    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col] != ZERO:
                piv = r
                break
        if piv is None:
            raise SingularMatrixError(f"no pivot in column {col + 1}")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        pval = prow[col]
        for r in range(col + 1, n):
            factor = aug[r][col]
            if factor == ZERO:
                continue
            factor = factor / pval
            rrow = aug[r]
            for c in range(col + 1, width):
                rrow[c] = rrow[c] - factor * prow[c]
            rrow[col] = ZERO

    sol = [[ZERO] * m for _ in range(n)]
    for i in range(n - 1, -1, -1):
        arow = aug[i]
        pivot = arow[i]
        for j in range(m):
            s = arow[n + j]
            for k in range(i + 1, n):
                akk = arow[k]
                if akk != ZERO:
                    s = s - akk * sol[k][j]
            sol[i][j] = s / pivot
    return Matrix(sol)


def solve_column(a: Matrix, rhs: Vector) -> Vector:
    """Convenience wrapper: solve A x = rhs for a single column."""
    return gauss_solve(a, Matrix.column(rhs)).col(0)


def determinant(a: Matrix):
    """Exact determinant via elimination with row-swap sign tracking."""
    _require_square(a)
    n = a.n_rows
    rows = [list(a.row(i)) for i in range(n)]
    sign = 1
    det = ONE
    for col in range(n):
        piv = None
        for r in range(col, n):
            if rows[r][col] != ZERO:
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        prow = rows[col]
        pval = prow[col]
        det = det * pval
        for r in range(col + 1, n):
            factor = rows[r][col]
            if factor == ZERO:
                continue
            factor = factor / pval
            rrow = rows[r]
            for c in range(col + 1, n):
                rrow[c] = rrow[c] - factor * prow[c]
    return det if sign > 0 else -det


def _check_index_set(indices, n: int) -> list[int]:
    """Validate a 1-based index set against size n; return it sorted."""
    idx = sorted(indices)
    if not idx:
        raise IndexSetError("index set must be nonempty")
    if len(set(idx)) != len(idx):
        raise IndexSetError(f"duplicate indices in {idx}")
    if idx[0] < 1 or idx[-1] > n:
        raise IndexSetError(f"indices {idx} out of range 1..{n}")
    return idx


def principal_submatrix(a: Matrix, indices) -> Matrix:
    """Rows and columns of a square matrix restricted to a 1-based index set."""
    _require_square(a)
    idx = _check_index_set(indices, a.n_rows)
    return Matrix([[a[i - 1, j - 1] for j in idx] for i in idx])


def subvector(v: Vector, indices) -> Vector:
    """Entries of a vector restricted to a 1-based index set, order preserved."""
    idx = _check_index_set(indices, len(v))
    return Vector(v[i - 1] for i in idx)

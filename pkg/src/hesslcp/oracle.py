"""Brute-force reference solver and seeded instance generators.

The enumeration here is the ground truth the staged solver is tested
against: it shares the basis-test primitives but none of the staging logic,
so agreement between the two is meaningful evidence.  Its only virtue is
obvious correctness; there is deliberately no pruning.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .analysis import is_p_matrix
from .errors import (
    InvalidArgumentError,
    NoOptimalBasisError,
    SingularMatrixError,
)
from .exact import Matrix, Vector
from .lcp import Basis, LCPInstance, basis_test, basis_test_lex
from .limits import DEFAULT_ENUMERATION_LIMIT, check_dimension
from .solver import PrefixBases, _prefix_instance


@dataclass(frozen=True)
class EnumerationResult:
    """Everything the exhaustive pass over all 2^n bases found."""

    optimal_bases: tuple          # all bases passing the plain test, bitmask order
    lex_optimal_basis: Basis      # the basis passing the perturbed test
    tested_count: int             # always 2^n: every basis is visited


def _bitmask_basis(bits: int, n: int) -> Basis:
    return frozenset(i + 1 for i in range(n) if bits >> i & 1)


def brute_force_solve(instance: LCPInstance, limit: int | None = None) -> EnumerationResult:
    """Visit every basis in bitmask order; classify by plain and perturbed tests.

    Bases with singular basis matrices are visited but pass neither test.
    Raises NoOptimalBasisError when no basis passes the perturbed test, which
    certifies that M is not a P-matrix.  Several lex-optimal bases cannot
    occur for a P-matrix; if a non-P input produces several, the first in
    enumeration order is reported.
    """
    n = instance.n
    check_dimension(n, DEFAULT_ENUMERATION_LIMIT, limit, "brute_force_solve")
    plain = []
    lex = []
    for bits in range(1 << n):
        basis = _bitmask_basis(bits, n)
        try:
            if basis_test(instance, basis):
                plain.append(basis)
            if basis_test_lex(instance, basis):
                lex.append(basis)
        except SingularMatrixError:
            continue
    if not lex:
        raise NoOptimalBasisError(
            "no basis passes the perturbed test: M is not a P-matrix"
        )
    return EnumerationResult(tuple(plain), lex[0], 1 << n)


def prefix_bases_brute(instance: LCPInstance, limit: int | None = None) -> PrefixBases:
    """Optimal bases of all leading subproblems, each by exhaustive enumeration."""
    n = instance.n
    check_dimension(n, DEFAULT_ENUMERATION_LIMIT, limit, "prefix_bases_brute")
    prefix = PrefixBases.empty(n)
    for k in range(1, n + 1):
        sub = _prefix_instance(instance, k)
        prefix.set(k, brute_force_solve(sub, limit=limit).lex_optimal_basis)
    return prefix


STRUCTURES = ("tridiagonal", "lower_hessenberg", "upper_hessenberg", "general")

# band predicate per structure: is (i, j) allowed to be nonzero?
_BAND = {
    "tridiagonal": lambda i, j: abs(i - j) <= 1,
    "lower_hessenberg": lambda i, j: j - i <= 1,
    "upper_hessenberg": lambda i, j: i - j <= 1,
    "general": lambda i, j: True,
}


def _dominant_matrix(rng: random.Random, n: int, in_band) -> Matrix:
    """Strictly diagonally dominant, positive diagonal, zeros off the band.

    Such matrices are provably P: every principal submatrix inherits strict
    dominance with positive diagonal, which forces a positive determinant.
    """
    rows = []
    for i in range(n):
        row = [
            rng.randint(-9, 9) if j != i and in_band(i, j) else 0
            for j in range(n)
        ]
        row[i] = sum(abs(x) for x in row) + rng.randint(1, 10)
        rows.append(row)
    return Matrix(rows)


def _rejection_matrix(rng: random.Random, n: int, in_band) -> Matrix | None:
    """Small random integer matrices filtered by the exact P-matrix check.

    Catches non-dominant P-matrices (large off-diagonal entries of mixed
    sign) that the dominant family never produces.  None after 40 misses.
    """
    for _ in range(40):
        m = Matrix(
            [
                [rng.randint(-9, 9) if in_band(i, j) else 0 for j in range(n)]
                for i in range(n)
            ]
        )
        if is_p_matrix(m):
            return m
    return None


def generate_instance(
    n: int, structure: str = "tridiagonal", seed: int = 0, family: str = "auto"
) -> LCPInstance:
    """Deterministic-from-seed P-matrix instance with the requested band structure.

    family "dominant" draws from the diagonally dominant construction,
    "random" from rejection sampling (n <= 5 only), and "auto" mixes the two
    for small n so non-dominant instances appear in every test batch.
    """
    if n < 1:
        raise InvalidArgumentError(f"n must be at least 1, got {n}")
    if structure not in STRUCTURES:
        raise InvalidArgumentError(
            f"unknown structure {structure!r}, expected one of {', '.join(STRUCTURES)}"
        )
    if family not in ("auto", "dominant", "random"):
        raise InvalidArgumentError(f"unknown family {family!r}")
    if family == "random" and n > 5:
        raise InvalidArgumentError("family 'random' is limited to n <= 5")

    rng = random.Random(f"{n}|{structure}|{seed}")
    in_band = _BAND[structure]

    use_rejection = family == "random" or (
        family == "auto" and n <= 4 and rng.random() < 0.3
    )
    m = _rejection_matrix(rng, n, in_band) if use_rejection else None
    if m is None:
        m = _dominant_matrix(rng, n, in_band)

    q = Vector(rng.randint(-10, 10) for _ in range(n))
    return LCPInstance(m, q, name=f"{structure}-{n}-seed{seed}")

"""Staged solver for lower- and upper-Hessenberg P-matrix instances.

The driver builds the optimal bases of the leading principal subproblems one
dimension at a time.  At stage k the optimal basis is always of the form
B(l) union {l+2, ..., k} for some earlier stage l in {-1, 0, ..., k-1}, so at
most k+1 candidates exist; testing k of them decides the stage because the
last one is forced when all others fail.  That caps the whole run at
n(n+1)/2 basis tests.

Upper-Hessenberg instances reduce to lower-Hessenberg ones by reversing the
index order (conjugating M by the flip permutation), solving, and mapping the
basis back through the flip.

P-matrix-ness is the caller's contract and is never verified here (the check
is exponential); a non-P input surfaces as NoCandidatePassedError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import classify
from .errors import (
    NoCandidatePassedError,
    PrefixIncompleteError,
    SingularMatrixError,
    StructureError,
    TooLargeError,
)
from .exact import Matrix, Vector, principal_submatrix, subvector
from .lcp import (
    Basis,
    ComplementaryPair,
    EMPTY_BASIS,
    LCPInstance,
    basis_test_lex,
    complementary_pair,
    verify_solution,
)
from .limits import DEFAULT_ENUMERATION_LIMIT, effective_limit


@dataclass
class PrefixBases:
    """Optimal bases of the leading subproblems, stages -1 .. n.

    Stage k's entry is the (lexicographic) optimal basis of the k-th leading
    principal subproblem; stages -1 and 0 are empty by convention.
    """

    n: int
    _bases: list

    @classmethod
    def empty(cls, n: int) -> "PrefixBases":
        bases = [EMPTY_BASIS, EMPTY_BASIS] + [None] * n
        return cls(n, bases)

    def filled_through(self, k: int) -> bool:
        return all(self._bases[s + 1] is not None for s in range(-1, k + 1))

    def get(self, stage: int) -> Basis:
        if stage < -1 or stage > self.n:
            raise PrefixIncompleteError(f"stage {stage} outside -1..{self.n}")
        b = self._bases[stage + 1]
        if b is None:
            raise PrefixIncompleteError(f"stage {stage} not computed yet")
        return b

    def set(self, stage: int, basis: Basis):
        if stage < 1 or stage > self.n:
            raise PrefixIncompleteError(f"stage {stage} outside 1..{self.n}")
        self._bases[stage + 1] = basis

    def as_list(self) -> list:
        """Bases for stages 1..n (computed ones only)."""
        return [b for b in self._bases[2:] if b is not None]


@dataclass
class SolveReport:
    optimal_basis: Basis
    pair: ComplementaryPair
    basis_test_count: int
    prefix_bases: PrefixBases
    structure: str  # "lower_hessenberg", "upper_hessenberg", or "general"

    @property
    def w(self) -> Vector:
        return self.pair.w

    @property
    def z(self) -> Vector:
        return self.pair.z


def candidates(k: int, prefix: PrefixBases) -> list:
    """The k+1 candidate bases for stage k, ordered by l = -1, 0, ..., k-1.

    Candidate l is (stage-l basis) union {l+2, ..., k}; the list may repeat
    a basis, which is harmless.
    """
    if k < 1 or k > prefix.n:
        raise PrefixIncompleteError(f"stage {k} outside 1..{prefix.n}")
    if not prefix.filled_through(k - 1):
        raise PrefixIncompleteError(f"stages -1..{k - 1} must be filled before stage {k}")
    return [
        prefix.get(ell) | frozenset(range(ell + 2, k + 1))
        for ell in range(-1, k)
    ]


def _prefix_instance(instance: LCPInstance, k: int) -> LCPInstance:
    if k == instance.n:
        return instance
    head = range(1, k + 1)
    return LCPInstance(
        principal_submatrix(instance.matrix, head), subvector(instance.rhs, head)
    )


def solve_lower_hessenberg(instance: LCPInstance) -> SolveReport:
    """Stage-by-stage solve of a lower-Hessenberg P-matrix instance.

    Raises StructureError when M is not lower Hessenberg and
    NoCandidatePassedError when the computed basis fails verification, which
    means M was not a P-matrix (or an internal invariant broke).
    """
    profile = classify(instance.matrix)
    if not profile.is_lower_hessenberg:
        raise StructureError(
            f"matrix is not lower Hessenberg (right half-bandwidth "
            f"{profile.right_half_bandwidth})"
        )
    n = instance.n
    prefix = PrefixBases.empty(n)
    tests = 0
    try:
        for k in range(1, n + 1):
            sub = _prefix_instance(instance, k)
            cands = candidates(k, prefix)
            # test l = k-1 down to l = 0; candidate l = -1 (all of {1..k})
            # never coincides with the others and is forced when they fail
            chosen = None
            seen = set()
            for cand in cands[:0:-1]:
                if cand in seen:
                    continue
                seen.add(cand)
                tests += 1
                if basis_test_lex(sub, cand):
                    chosen = cand
                    break
            if chosen is None:
                chosen = cands[0]
            prefix.set(k, chosen)
    except SingularMatrixError as exc:
        raise NoCandidatePassedError(
            f"singular basis matrix at stage {k}: input is not a P-matrix ({exc})"
        ) from exc

    basis = prefix.get(n)
    pair = complementary_pair(instance, basis)
    if not verify_solution(instance, pair):
        raise NoCandidatePassedError(
            "final basis fails verification: input is not a P-matrix"
        )
    return SolveReport(basis, pair, tests, prefix, "lower_hessenberg")


def _reverse_matrix(m: Matrix) -> Matrix:
    n = m.n_rows
    return Matrix([[m[n - 1 - i, n - 1 - j] for j in range(n)] for i in range(n)])


def _reverse_vector(v: Vector) -> Vector:
    return Vector(reversed(list(v)))


def reverse_instance(instance: LCPInstance) -> LCPInstance:
    """Conjugate by the index flip i -> n+1-i (reverses both band directions)."""
    return LCPInstance(_reverse_matrix(instance.matrix), _reverse_vector(instance.rhs))


def solve_upper_hessenberg(instance: LCPInstance) -> SolveReport:
    """Solve an upper-Hessenberg instance through the flipped lower one.

    The flip is a similarity by a permutation, so bases map index-by-index:
    i belongs to the answer exactly when n+1-i was chosen for the flipped
    instance.  The flipped run perturbs the flipped right-hand side, so on a
    degenerate instance it may select a different optimal basis than a direct
    perturbation of the original would; the returned pair still verifies on
    the original instance, and on nondegenerate instances the basis is the
    unique one.  The reported prefix bases and test count are those of the
    flipped lower-Hessenberg run.
    """
    profile = classify(instance.matrix)
    if not profile.is_upper_hessenberg:
        raise StructureError(
            f"matrix is not upper Hessenberg (left half-bandwidth "
            f"{profile.left_half_bandwidth})"
        )
    n = instance.n
    flipped = solve_lower_hessenberg(reverse_instance(instance))
    basis = frozenset(n + 1 - i for i in flipped.optimal_basis)
    pair = complementary_pair(instance, basis)
    if not verify_solution(instance, pair):
        raise NoCandidatePassedError(
            "flipped-run basis fails verification: input is not a P-matrix"
        )
    return SolveReport(basis, pair, flipped.basis_test_count, flipped.prefix_bases,
                       "upper_hessenberg")


def solve(instance: LCPInstance, fallback_limit: int | None = None) -> SolveReport:
    """Dispatch on structure: staged solver when Hessenberg, enumeration otherwise.

    Tridiagonal matrices take the lower-Hessenberg path.  General matrices
    fall back to exhaustive enumeration up to the size guard (default 20,
    HESSLCP_LIMIT overrides) and raise TooLargeError beyond it.
    """
    profile = classify(instance.matrix)
    if profile.is_lower_hessenberg:
        return solve_lower_hessenberg(instance)
    if profile.is_upper_hessenberg:
        return solve_upper_hessenberg(instance)

    limit = effective_limit(DEFAULT_ENUMERATION_LIMIT, fallback_limit)
    if instance.n > limit:
        raise TooLargeError(
            f"matrix is neither lower nor upper Hessenberg and n={instance.n} "
            f"exceeds the enumeration fallback limit {limit}"
        )
    from .oracle import brute_force_solve

    result = brute_force_solve(instance, limit=limit)
    basis = result.lex_optimal_basis
    pair = complementary_pair(instance, basis)
    if not verify_solution(instance, pair):
        raise NoCandidatePassedError(
            "enumeration basis fails verification: input is not a P-matrix"
        )
    prefix = PrefixBases.empty(instance.n)
    return SolveReport(basis, pair, result.tested_count, prefix, "general")

import random
from itertools import combinations

import pytest

from hesslcp import (
    IndexSetError,
    InvalidArgumentError,
    LCPInstance,
    Matrix,
    TooLargeError,
    Vector,
    classify,
    has_t_hole,
    is_nondegenerate,
    is_p_matrix,
    is_z_matrix,
)
from hesslcp.oracle import generate_instance


def test_classify_shipped_instance(cyclic_instance):
    profile = classify(cyclic_instance.matrix)
    assert profile.is_tridiagonal
    assert profile.is_lower_hessenberg
    assert profile.is_upper_hessenberg
    assert profile.left_half_bandwidth == 1
    assert profile.right_half_bandwidth == 1
    assert profile.bandwidth == 3
    assert profile.label == "tridiagonal"


def test_classify_zero_matrix():
    profile = classify(Matrix([[0, 0], [0, 0]]))
    assert profile.is_zero
    assert profile.is_tridiagonal
    assert profile.is_lower_hessenberg
    assert profile.is_upper_hessenberg
    assert profile.left_half_bandwidth == 0
    assert profile.right_half_bandwidth == 0
    assert profile.bandwidth == 0


def test_classify_single_far_superdiagonal_entry():
    m = Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    profile = classify(m)
    assert profile.right_half_bandwidth == 2
    assert not profile.is_lower_hessenberg
    assert profile.is_upper_hessenberg
    assert profile.label == "upper_hessenberg"


def test_classify_bandwidth_sum():
    m = Matrix(
        [
            [1, 1, 1, 0],
            [1, 1, 1, 1],
            [1, 1, 1, 1],
            [0, 1, 1, 1],
        ]
    )
    profile = classify(m)
    assert profile.left_half_bandwidth == 2
    assert profile.right_half_bandwidth == 2
    assert profile.bandwidth == 5
    assert profile.label == "general"


def test_classify_requires_square():
    with pytest.raises(InvalidArgumentError):
        classify(Matrix([[1, 2]]))


def test_transpose_swaps_hessenberg_sides():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 5)
        m = Matrix(
            [[rng.choice([0, 0, 1, -2]) for _ in range(n)] for _ in range(n)]
        )
        a, b = classify(m), classify(m.transpose())
        assert a.is_lower_hessenberg == b.is_upper_hessenberg
        assert a.is_upper_hessenberg == b.is_lower_hessenberg
        assert a.left_half_bandwidth == b.right_half_bandwidth


def test_is_p_matrix_basics(cyclic_instance):
    assert is_p_matrix(Matrix.identity(4))
    assert is_p_matrix(cyclic_instance.matrix)
    assert not is_p_matrix(Matrix([[0]]))
    assert not is_p_matrix(Matrix([[1, 0], [0, -1]]))
    # positive determinant alone is not enough: both diagonal entries negative
    assert not is_p_matrix(Matrix([[-1, 0], [0, -1]]))


def test_p_matrix_inherited_by_principal_submatrices():
    from hesslcp import principal_submatrix

    rng = random.Random(13)
    for trial in range(10):
        n = rng.randint(2, 5)
        m = generate_instance(n, "general", seed=trial).matrix
        assert is_p_matrix(m)
        for size in range(1, n + 1):
            for subset in combinations(range(1, n + 1), size):
                assert is_p_matrix(principal_submatrix(m, subset))


def test_p_matrix_closed_under_transpose():
    rng = random.Random(17)
    for trial in range(20):
        n = rng.randint(1, 5)
        m = Matrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
        assert is_p_matrix(m) == is_p_matrix(m.transpose())


def test_is_p_matrix_size_guard():
    with pytest.raises(TooLargeError):
        is_p_matrix(Matrix.identity(3), limit=2)


def test_env_var_overrides_guard(monkeypatch):
    monkeypatch.setenv("HESSLCP_LIMIT", "2")
    with pytest.raises(TooLargeError):
        is_p_matrix(Matrix.identity(3))
    monkeypatch.setenv("HESSLCP_LIMIT", "3")
    assert is_p_matrix(Matrix.identity(3))
    monkeypatch.setenv("HESSLCP_LIMIT", "bogus")
    with pytest.raises(TooLargeError):
        is_p_matrix(Matrix.identity(3))


def test_is_z_matrix(cyclic_instance):
    assert not is_z_matrix(cyclic_instance.matrix)
    assert is_z_matrix(Matrix.identity(3))
    assert is_z_matrix(Matrix([[-1, -1], [-1, -1]]))
    assert is_z_matrix(Matrix([[5, -2], [0, -7]]))
    assert not is_z_matrix(Matrix([[1, 1], [0, 1]]))


def test_is_nondegenerate(cyclic_instance):
    assert not is_nondegenerate(LCPInstance(Matrix.identity(2), Vector([0, 1])))
    assert is_nondegenerate(LCPInstance(Matrix.identity(2), Vector([1, 1])))
    assert is_nondegenerate(cyclic_instance)
    with pytest.raises(TooLargeError):
        is_nondegenerate(cyclic_instance, limit=3)


def test_nondegenerate_instances_need_no_tie_breaking():
    from hesslcp import basis_test, basis_test_lex

    rng = random.Random(43)
    found = 0
    for trial in range(40):
        n = rng.randint(1, 5)
        inst = generate_instance(n, "tridiagonal", seed=500 + trial)
        if not is_nondegenerate(inst):
            continue
        found += 1
        for bits in range(1 << n):
            basis = frozenset(i + 1 for i in range(n) if bits >> i & 1)
            assert basis_test(inst, basis) == basis_test_lex(inst, basis)
    assert found >= 10


def test_has_t_hole_rules():
    full = frozenset({1, 2, 3, 4})
    assert not has_t_hole(full, 4, 1)
    assert has_t_hole(frozenset(), 4, 1)
    assert has_t_hole(frozenset(), 4, 4)
    odd = frozenset({1, 3, 5})
    assert not has_t_hole(odd, 5, 2)
    assert has_t_hole(frozenset({1, 4}), 5, 2)
    # no window of length t > k exists
    assert not has_t_hole(frozenset(), 2, 3)


def test_has_t_hole_validation():
    with pytest.raises(InvalidArgumentError):
        has_t_hole(frozenset(), 3, 0)
    with pytest.raises(InvalidArgumentError):
        has_t_hole(frozenset(), -1, 1)
    with pytest.raises(IndexSetError):
        has_t_hole(frozenset({4}), 3, 1)


def test_single_holes_characterize_proper_subsets():
    for k in range(1, 6):
        for bits in range(1 << k):
            basis = frozenset(i + 1 for i in range(k) if bits >> i & 1)
            assert has_t_hole(basis, k, 1) == (len(basis) != k)

import random

import pytest

from hesslcp import (
    InvalidArgumentError,
    LCPInstance,
    Matrix,
    NoOptimalBasisError,
    TooLargeError,
    Vector,
    brute_force_solve,
    classify,
    is_p_matrix,
    prefix_bases_brute,
    verify_solution,
)
from hesslcp.lcp import complementary_pair
from hesslcp.oracle import STRUCTURES, generate_instance


def test_enumeration_identity_case():
    inst = LCPInstance(Matrix.identity(2), Vector([1, -1]))
    result = brute_force_solve(inst)
    assert result.lex_optimal_basis == frozenset({2})
    assert result.tested_count == 4
    assert result.optimal_bases == (frozenset({2}),)


def test_enumeration_shipped_instance(cyclic_instance):
    result = brute_force_solve(cyclic_instance)
    assert result.tested_count == 16
    assert result.optimal_bases == (frozenset({2, 3}),)
    assert result.lex_optimal_basis == frozenset({2, 3})
    pair = complementary_pair(cyclic_instance, result.lex_optimal_basis)
    assert verify_solution(cyclic_instance, pair)


def test_enumeration_reports_degenerate_ties():
    inst = LCPInstance(Matrix([[1]]), Vector([0]))
    result = brute_force_solve(inst)
    assert result.optimal_bases == (frozenset(), frozenset({1}))
    assert result.lex_optimal_basis == frozenset()


def test_enumeration_rejects_unsolvable():
    inst = LCPInstance(Matrix([[0]]), Vector([-1]))
    with pytest.raises(NoOptimalBasisError):
        brute_force_solve(inst)


def test_enumeration_size_guard():
    inst = LCPInstance(Matrix.identity(3), Vector([1, 1, 1]))
    with pytest.raises(TooLargeError):
        brute_force_solve(inst, limit=2)


def test_prefix_enumeration_identity():
    inst = LCPInstance(Matrix.identity(3), Vector([1, -1, 1]))
    prefix = prefix_bases_brute(inst)
    assert prefix.get(-1) == frozenset()
    assert prefix.get(0) == frozenset()
    assert prefix.get(1) == frozenset()
    assert prefix.get(2) == frozenset({2})
    assert prefix.get(3) == frozenset({2})


def test_prefix_enumeration_last_stage_is_full_solve():
    rng = random.Random(67)
    for trial in range(15):
        n = rng.randint(1, 6)
        inst = generate_instance(n, "tridiagonal", seed=4000 + trial)
        prefix = prefix_bases_brute(inst)
        assert prefix.get(n) == brute_force_solve(inst).lex_optimal_basis


def test_generator_is_deterministic():
    a = generate_instance(5, "tridiagonal", seed=42)
    b = generate_instance(5, "tridiagonal", seed=42)
    assert a.matrix == b.matrix
    assert a.rhs == b.rhs
    assert a.name == b.name
    c = generate_instance(5, "tridiagonal", seed=43)
    assert (c.matrix, c.rhs) != (a.matrix, a.rhs)


@pytest.mark.parametrize("structure", STRUCTURES)
def test_generator_respects_structure(structure):
    for seed in range(8):
        inst = generate_instance(5, structure, seed=seed)
        profile = classify(inst.matrix)
        if structure == "tridiagonal":
            assert profile.is_tridiagonal
        elif structure == "lower_hessenberg":
            assert profile.is_lower_hessenberg
        elif structure == "upper_hessenberg":
            assert profile.is_upper_hessenberg


def test_generator_output_is_p_matrix():
    for structure in STRUCTURES:
        for seed in range(6):
            inst = generate_instance(4, structure, seed=seed)
            assert is_p_matrix(inst.matrix)
            assert all(-10 <= int(x.numerator) <= 10 for x in inst.rhs)


def test_generator_families():
    dom = generate_instance(4, "tridiagonal", seed=1, family="dominant")
    assert is_p_matrix(dom.matrix)
    rej = generate_instance(3, "general", seed=1, family="random")
    assert is_p_matrix(rej.matrix)
    with pytest.raises(InvalidArgumentError):
        generate_instance(6, "general", seed=1, family="random")
    with pytest.raises(InvalidArgumentError):
        generate_instance(3, "general", seed=1, family="bogus")


def test_generator_one_dimensional_is_positive():
    for seed in range(10):
        inst = generate_instance(1, "general", seed=seed)
        assert inst.matrix[0, 0] > 0


def test_generator_validation():
    with pytest.raises(InvalidArgumentError):
        generate_instance(0, "tridiagonal", seed=1)
    with pytest.raises(InvalidArgumentError):
        generate_instance(3, "pentadiagonal", seed=1)

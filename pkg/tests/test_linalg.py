"""Exact rational linear algebra: ranks, determinants, kernels, spans."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from mixedhess.linalg import (
    RowSpace,
    invert,
    kernel_basis,
    mat_mul,
    matrix_det,
    matrix_rank,
    rref,
    sparse_rref,
)


def _random_matrix(rng, nrows, ncols, bound=9):
    return [
        [Fraction(rng.randint(-bound, bound)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def _det_by_cofactors(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * _det_by_cofactors(minor)
    return total


def test_rank_identity_and_zero():
    eye = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    assert matrix_rank(eye) == 4
    assert matrix_rank([[Fraction(0)] * 3 for _ in range(2)]) == 0
    assert matrix_rank([]) == 0


def test_rank_dependent_rows():
    rows = [
        [Fraction(1), Fraction(2), Fraction(3)],
        [Fraction(2), Fraction(4), Fraction(6)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    assert matrix_rank(rows) == 2


def test_rank_stop_at_short_circuits():
    rng = random.Random(0)
    rows = _random_matrix(rng, 6, 6)
    full = matrix_rank(rows)
    assert matrix_rank(rows, stop_at=2) == min(2, full)


def test_rank_handles_fractions():
    singular = [
        [Fraction(1, 2), Fraction(1, 3)],
        [Fraction(3, 2), Fraction(1)],
    ]
    assert matrix_rank(singular) == 1
    regular = [
        [Fraction(1, 2), Fraction(1, 3)],
        [Fraction(1, 5), Fraction(1)],
    ]
    assert matrix_rank(regular) == 2


def test_det_agrees_with_cofactor_expansion():
    rng = random.Random(11)
    for _ in range(12):
        n = rng.randint(1, 4)
        rows = _random_matrix(rng, n, n, bound=6)
        assert matrix_det(rows) == _det_by_cofactors(rows)


def test_det_of_singular_is_zero():
    rows = [
        [Fraction(1), Fraction(2)],
        [Fraction(2), Fraction(4)],
    ]
    assert matrix_det(rows) == 0


def test_rref_pivots():
    rows = [
        [Fraction(0), Fraction(2), Fraction(4)],
        [Fraction(1), Fraction(1), Fraction(1)],
    ]
    reduced, pivots = rref(rows)
    assert pivots == [0, 1]
    assert reduced[0][0] == 1 and reduced[0][1] == 0
    assert reduced[1][1] == 1


def test_kernel_basis_annihilates():
    rng = random.Random(3)
    rows = _random_matrix(rng, 3, 5)
    basis = kernel_basis(rows, 5)
    assert len(basis) == 5 - matrix_rank(rows)
    for vec in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_kernel_of_injective_map_is_trivial():
    eye = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert kernel_basis(eye, 3) == []


def test_invert_roundtrip():
    rng = random.Random(5)
    while True:
        rows = _random_matrix(rng, 4, 4)
        if matrix_det(rows) != 0:
            break
    inv = invert(rows)
    prod = mat_mul(rows, inv)
    for i in range(4):
        for j in range(4):
            assert prod[i][j] == (1 if i == j else 0)


def test_invert_rejects_singular():
    with pytest.raises(ValueError):
        invert([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]])


def test_mat_mul_known_product():
    a = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    b = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    assert mat_mul(a, b) == [
        [Fraction(2), Fraction(1)],
        [Fraction(4), Fraction(3)],
    ]


def test_sparse_rref_matches_dense_rank():
    rng = random.Random(9)
    for _ in range(10):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        dense = _random_matrix(rng, nrows, ncols, bound=3)
        sparse = [
            {j: v for j, v in enumerate(row) if v}
            for row in dense
        ]
        basis = sparse_rref(sparse)
        assert len(basis) == matrix_rank(dense)
        for pivot, row in basis.items():
            assert row[pivot] == 1


def test_row_space_incremental():
    space = RowSpace()
    assert space.insert({0: Fraction(1), 1: Fraction(2)})
    assert not space.insert({0: Fraction(2), 1: Fraction(4)})
    assert space.insert({1: Fraction(1)})
    assert space.rank == 2
    assert space.contains({0: Fraction(3), 1: Fraction(-1)})
    assert not space.contains({2: Fraction(1)})

"""Mixed Hessians, dual bases, and rank certification."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from mixedhess import (
    MixedHessian,
    Monomial,
    SamplingConfig,
    SymbolicCapExceeded,
    VarSet,
    apolar_pairing,
    build_algebra,
    dual_basis,
    dual_mixed_hessian,
    evaluate_matrix,
    generic_rank,
    mixed_hessian,
    parse_polynomial,
    rank_at,
    symbolic_det,
)
from mixedhess.linalg import matrix_rank

from conftest import dense_random_form


def test_middle_hessian_of_four_cycle_vanishes(four_cycle_alg):
    h = mixed_hessian(four_cycle_alg, 1, 1)
    assert h.shape == (8, 8)
    det = symbolic_det(h, cap=8)
    assert det.is_zero()


def test_boolean_hessian_regular(boolean3_alg):
    h = mixed_hessian(boolean3_alg, 1, 1)
    det = symbolic_det(h, cap=4)
    assert not det.is_zero()
    ones = tuple(Fraction(1) for _ in range(3))
    assert rank_at(h, ones) == 3


def test_entries_are_second_order_contractions(boolean3_alg):
    h = mixed_hessian(boolean3_alg, 1, 1)
    # row/col bases are the three variables; entry (i, j) applies x_i x_j
    ones = tuple(Fraction(1) for _ in range(3))
    m = evaluate_matrix(h, ones)
    assert m == [
        [Fraction(0), Fraction(1), Fraction(1)],
        [Fraction(1), Fraction(0), Fraction(1)],
        [Fraction(1), Fraction(1), Fraction(0)],
    ]


def test_dual_basis_pairs_to_identity(four_cycle_alg):
    alg = four_cycle_alg
    d = alg.socle_degree
    for k in (1, 2):
        basis = alg.quotient_basis(k)
        duals = dual_basis(alg, k)
        assert len(duals) == len(basis)
        for i, b in enumerate(basis):
            for j, dual in enumerate(duals):
                # dual lives in complementary degree d - k
                value = sum(
                    coeff * apolar_pairing(b.exps, exps, alg.f)
                    for exps, coeff in dual.terms.items()
                )
                assert value == (1 if i == j else 0)


def test_dual_hessian_rank_equals_plain(config):
    rng = random.Random(4)
    for _ in range(4):
        alg = build_algebra(dense_random_form(rng, rng.randint(2, 3), 4))
        d = alg.socle_degree
        for k, l in ((1, 2), (1, 3), (2, 3)):
            dual = dual_mixed_hessian(alg, l, k)
            plain = mixed_hessian(alg, k, d - l)
            r_dual = generic_rank(dual, config)
            r_plain = generic_rank(plain, config)
            assert r_dual.rank == r_plain.rank


def test_generic_rank_empty_and_constant(config):
    vs = VarSet(("x",))
    empty = MixedHessian(vs, (), (), (), "hessian", (1, 1))
    assert generic_rank(empty, config).rank == 0
    one = Monomial((1,))
    const = MixedHessian(
        vs,
        ((parse_polynomial("1", vs), parse_polynomial("2", vs)),),
        (one,),
        (one, one),
        "hessian",
        (1, 1),
    )
    cert = generic_rank(const, config)
    assert cert.rank == 1
    assert cert.is_exact


def test_generic_rank_square_symbolic_routes(config):
    # 2x2 with identically vanishing determinant but nonzero entries
    vs = VarSet(("x", "y"))
    x = parse_polynomial("x", vs)
    y = parse_polynomial("y", vs)
    one = Monomial((1, 0))
    h = MixedHessian(vs, ((x, y), (x, y)), (one, one), (one, one), "hessian", (1, 1))
    cert = generic_rank(h, config)
    assert cert.rank == 1
    assert cert.is_exact
    regular = MixedHessian(
        vs, ((x, y), (y, x)), (one, one), (one, one), "hessian", (1, 1)
    )
    cert = generic_rank(regular, config)
    assert cert.rank == 2
    assert cert.is_exact


def test_generic_rank_probabilistic_above_cap():
    vs = VarSet(("x",))
    x = parse_polynomial("x", vs)
    zero = parse_polynomial("0", vs)
    n = 14  # larger than the symbolic cap
    one = Monomial((1,))
    entries = tuple(
        tuple(x if (i == j and i < n - 1) else zero for j in range(n))
        for i in range(n)
    )
    h = MixedHessian(vs, entries, (one,) * n, (one,) * n, "hessian", (1, 1))
    config = SamplingConfig(seed=1, trials=5)
    cert = generic_rank(h, config)
    assert cert.rank == n - 1
    assert cert.mode == "probabilistic"
    assert not cert.is_exact
    assert cert.failure_bound is not None
    assert 0 < cert.failure_bound < 1


def test_sampling_meets_min_dimension_is_exact(config):
    rng = random.Random(8)
    alg = build_algebra(dense_random_form(rng, 3, 3))
    h = mixed_hessian(alg, 1, 2)  # 3 x 6, full rank 3 generically
    cert = generic_rank(h, config)
    assert cert.rank == 3
    assert cert.is_exact


def test_symbolic_det_respects_cap(four_cycle_alg):
    h = mixed_hessian(four_cycle_alg, 1, 1)
    with pytest.raises(SymbolicCapExceeded):
        symbolic_det(h, cap=4)


def test_rank_at_never_exceeds_generic(config):
    rng = random.Random(13)
    alg = build_algebra(dense_random_form(rng, 3, 4))
    h = mixed_hessian(alg, 1, 1)
    cert = generic_rank(h, config)
    for trial in range(5):
        point = tuple(Fraction(rng.randint(-9, 9)) for _ in range(3))
        assert rank_at(h, point) <= cert.rank


def test_mixed_hessian_validates_degrees(boolean3_alg):
    with pytest.raises(ValueError):
        mixed_hessian(boolean3_alg, 2, 2)  # entries would have degree < 0


def test_evaluate_matrix_shape(four_cycle_alg):
    h = mixed_hessian(four_cycle_alg, 1, 2)
    point = tuple(Fraction(1) for _ in range(8))
    m = evaluate_matrix(h, point)
    assert (len(m), len(m[0])) == h.shape
    assert matrix_rank(m) <= min(h.shape)

"""Simplicial complexes, facet algebras, graphs, and grid certificates."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest

from mixedhess import (
    Graph,
    GraphAlgebraClass,
    InvariantViolation,
    SimplicialComplex,
    alternate_hilbert_closed_form,
    attach_leaf,
    build_algebra,
    classify_graph_algebra,
    delete_vertex,
    detect_complete_multipartite,
    dual_generator,
    ann_generated_by_quadrics,
    grid_noninjectivity_witness,
    grid_pairs_for,
    hilbert_from_face_counts,
    is_facet_connected,
    is_flag,
    presented_by_quadrics_combinatorial,
    symbolic_det,
    turan_complex,
    turan_noninjectivity_witness,
    wlp_check,
    without_face,
)
from mixedhess.complexes import incidence_gradient_matrix
from mixedhess.hessians import bigraded_hessian
from mixedhess.linalg import matrix_rank

from conftest import connected_triangle_free_graphs, random_unicyclic_graph


def _square_graph():
    return Graph.on_vertices(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def _cycle_graph(n):
    return Graph.on_vertices(n, [(i, (i + 1) % n) for i in range(n)])


def _path_graph(n):
    return Graph.on_vertices(n, [(i, i + 1) for i in range(n - 1)])


# -- complexes and face counts ------------------------------------------------


def test_from_facets_and_face_counts():
    comp = SimplicialComplex.from_facets([("a", "b"), ("b", "c")])
    assert comp.dim == 1
    assert comp.is_pure()
    assert comp.face_counts() == (1, 3, 2)


def test_turan_face_counts_match_elementary_symmetric():
    for orders in itertools.chain.from_iterable(
        itertools.combinations_with_replacement((2, 3), r) for r in (1, 2, 3)
    ):
        comp = turan_complex(orders)
        counts = comp.face_counts()
        for k in range(len(orders) + 1):
            sym = sum(
                math.prod(combo)
                for combo in itertools.combinations(orders, k)
            )
            assert counts[k] == sym, (orders, k)


def test_turan_bounds():
    with pytest.raises(ValueError):
        turan_complex(())
    with pytest.raises(ValueError):
        turan_complex((2, 1))
    single = turan_complex((3,))
    assert single.dim == 0
    assert len(single.facets) == 3


def test_attach_leaf_auto_and_explicit():
    comp = turan_complex((2, 2))
    grown = attach_leaf(comp)
    assert len(grown.vertices) == len(comp.vertices) + 1
    assert len(grown.facets) == len(comp.facets) + 1
    explicit = attach_leaf(comp, ("a1", "p9"))
    assert "p9" in explicit.vertices
    with pytest.raises(ValueError):
        attach_leaf(comp, ("a1", "a2"))  # no new vertex
    with pytest.raises(ValueError):
        attach_leaf(comp, ("a1", "b1", "q1"))  # wrong size for dim 1


def test_delete_vertex():
    comp = turan_complex((2, 2, 3))
    cut = delete_vertex(comp, "c3")
    assert "c3" not in cut.vertices
    assert len(cut.facets) == 8
    with pytest.raises(ValueError):
        delete_vertex(comp, "zz")


def test_without_face_keeps_lower_faces():
    comp = turan_complex((2, 2))
    cut = without_face(comp, ("a1", "b1"))
    # the loose endpoints stay covered by the three remaining edges
    assert len(cut.facets) == 3
    assert set(cut.vertices) == set(comp.vertices)


# -- dual generators and Hilbert oracles -------------------------------------


def test_dual_generator_square_matches_catalog(catalog):
    comp = _square_graph().as_complex()
    f = dual_generator(comp)
    alg = build_algebra(f)
    assert alg.hilbert == (1, 8, 8, 1)


def test_hilbert_from_face_counts_is_exact():
    for orders in ((2, 2), (2, 2, 2), (2, 2, 3), (2, 3, 3)):
        comp = turan_complex(orders)
        alg = build_algebra(dual_generator(comp))
        assert hilbert_from_face_counts(comp) == alg.hilbert


def test_turan_222_hilbert_and_alternate_form():
    comp = turan_complex((2, 2, 2))
    assert hilbert_from_face_counts(comp) == (1, 14, 24, 14, 1)
    assert alternate_hilbert_closed_form(comp) == (1, 13, 12, 13, 1)


def test_turan_223_hilbert():
    comp = turan_complex((2, 2, 3))
    assert hilbert_from_face_counts(comp) == (1, 19, 32, 19, 1)
    # removing a whole vertex shrinks the third group back to two
    assert hilbert_from_face_counts(delete_vertex(comp, "c3")) == (
        1, 14, 24, 14, 1,
    )
    # removing one cross edge keeps all seven vertices and ten facets
    cut = without_face(comp, ("a1", "c3"))
    assert len(cut.vertices) == 7
    assert len(cut.facets) == 10
    assert cut.face_counts()[2] == 15  # edges
    assert hilbert_from_face_counts(cut) == (1, 17, 30, 17, 1)


# -- flagness, connectivity, quadrics ----------------------------------------


def test_flag_and_connectivity():
    assert is_flag(turan_complex((2, 2, 2)))
    assert is_facet_connected(turan_complex((2, 2, 2)))
    hollow = _cycle_graph(3).as_complex()
    assert not is_flag(hollow)
    two_parts = SimplicialComplex.from_facets([("a", "b"), ("c", "d")])
    assert not is_facet_connected(two_parts)


def test_combinatorial_equals_algebraic_quadrics():
    cases = [
        _square_graph().as_complex(),
        _cycle_graph(3).as_complex(),  # not flag
        _cycle_graph(5).as_complex(),
        _path_graph(4).as_complex(),
        SimplicialComplex.from_facets([("a", "b"), ("c", "d")]),  # split
        turan_complex((2, 2, 2)),
        delete_vertex(turan_complex((2, 2, 3)), "c3"),
    ]
    for comp in cases:
        combinatorial = presented_by_quadrics_combinatorial(comp)
        alg = build_algebra(dual_generator(comp))
        algebraic = ann_generated_by_quadrics(alg).presented
        assert combinatorial == algebraic, comp.facets


# -- graph classification -----------------------------------------------------


def test_classification_outcomes():
    k3 = _cycle_graph(3)
    assert (
        classify_graph_algebra(k3)
        is GraphAlgebraClass.NOT_PRESENTED_BY_QUADRICS
    )
    assert classify_graph_algebra(_path_graph(4)) is GraphAlgebraClass.TREE_WLP
    assert (
        classify_graph_algebra(_cycle_graph(5)) is GraphAlgebraClass.UNI_ODD_WLP
    )
    assert (
        classify_graph_algebra(_square_graph())
        is GraphAlgebraClass.UNI_EVEN_NO_WLP
    )
    two_squares = Graph.on_vertices(
        7,
        [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5), (5, 6), (3, 6)],
    )
    assert (
        classify_graph_algebra(two_squares)
        is GraphAlgebraClass.MULTI_CYCLE_NO_WLP
    )


def test_class_predictions():
    assert GraphAlgebraClass.TREE_WLP.predicts_wlp is True
    assert GraphAlgebraClass.UNI_ODD_WLP.predicts_wlp is True
    assert GraphAlgebraClass.UNI_EVEN_NO_WLP.predicts_wlp is False
    assert GraphAlgebraClass.MULTI_CYCLE_NO_WLP.predicts_wlp is False
    assert GraphAlgebraClass.NOT_PRESENTED_BY_QUADRICS.predicts_wlp is None


def test_classifier_agrees_with_wlp_on_small_sample(config):
    rng = random.Random(31)
    graphs = connected_triangle_free_graphs(5)
    for graph in graphs:
        cls = classify_graph_algebra(graph)
        assert cls.predicts_wlp is not None  # all are triangle-free
        alg = build_algebra(dual_generator(graph.as_complex()))
        verdict = wlp_check(alg, config)
        assert verdict.holds == cls.predicts_wlp, graph.edges


# -- incidence matrices -------------------------------------------------------


def test_incidence_matches_bigraded_block():
    for graph in (_square_graph(), _path_graph(3), _cycle_graph(5)):
        direct = incidence_gradient_matrix(graph)
        alg = build_algebra(dual_generator(graph.as_complex()))
        block = bigraded_hessian(alg, (0, 1), (1, 0))
        assert direct.shape == block.shape
        assert direct.entries == block.entries


def test_triangle_incidence_determinant():
    from mixedhess import parse_polynomial

    g = _cycle_graph(3)
    h = incidence_gradient_matrix(g)
    det = symbolic_det(h, cap=3)
    # twice the product of the three vertex variables, up to sign
    target = parse_polynomial("2*uv1*uv2*uv3", det.varset)
    assert det == target or det == target * Fraction(-1)


def test_unicyclic_determinant_dichotomy():
    rng = random.Random(41)
    for _ in range(25):
        n = rng.randint(3, 8)
        graph, cycle_length = random_unicyclic_graph(rng, n)
        h = incidence_gradient_matrix(graph)
        assert h.shape == (n, n)
        det = symbolic_det(h, cap=10)
        assert det.is_zero() == (cycle_length % 2 == 0)


def test_tree_incidence_full_edge_rank(config):
    rng = random.Random(43)
    for n in (3, 5, 7):
        tree, _ = random_unicyclic_graph(rng, n)
        # strip the chord: remove one cycle edge to get a spanning tree
        two_core_edges = set(tree.two_core().edges)
        chord = next(iter(two_core_edges))
        edges = [e for e in tree.edges if e != chord]
        spanning = Graph(tree.vertices, tuple(edges))
        h = incidence_gradient_matrix(spanning)
        # n vertices x (n - 1) edges; the edge columns stay independent
        from mixedhess import generic_rank

        cert = generic_rank(h, config)
        assert cert.rank == n - 1


# -- grid witnesses -----------------------------------------------------------


def test_square_grid_witness(config):
    comp = _square_graph().as_complex()
    groups = detect_complete_multipartite(comp)
    assert groups is not None
    witness = grid_noninjectivity_witness(comp, grid_pairs_for(groups), config)
    assert witness.wlp_excluded
    assert witness.step == (1, 2)
    assert witness.step_rank_bound == 7
    assert witness.step_full_rank == 8
    assert witness.block_rank.rank <= 3


def test_turan_witness_certificate(config):
    cert = turan_noninjectivity_witness((2, 2, 2), config)
    assert cert.rank == 7
    assert cert.is_exact
    assert "7" in cert.note and "8" in cert.note


def test_witness_survives_leaf_growth(config):
    comp = turan_complex((2, 2, 2))
    pairs = grid_pairs_for((("a1", "a2"), ("b1", "b2"), ("c1", "c2")))
    grown = attach_leaf(attach_leaf(comp))
    assert detect_complete_multipartite(grown) is None
    witness = grid_noninjectivity_witness(grown, pairs, config)
    assert witness.wlp_excluded
    assert witness.step_rank_bound == witness.step_full_rank - 1


def test_witness_on_cut_turan(config):
    cut = without_face(turan_complex((2, 2, 3)), ("a1", "c3"))
    # no longer complete multipartite, but the grid on the first two
    # vertices of each group survives the cut
    assert detect_complete_multipartite(cut) is None
    pairs = grid_pairs_for((("a1", "a2"), ("b1", "b2"), ("c1", "c2")))
    witness = grid_noninjectivity_witness(cut, pairs, config)
    assert witness.wlp_excluded
    assert witness.step_rank_bound == 16
    assert witness.step_full_rank == 17


def test_detect_on_vertex_deleted_turan():
    shrunk = delete_vertex(turan_complex((2, 2, 3)), "c3")
    assert detect_complete_multipartite(shrunk) == (
        ("a1", "a2"),
        ("b1", "b2"),
        ("c1", "c2"),
    )


def test_detect_complete_multipartite_negatives():
    assert detect_complete_multipartite(_cycle_graph(5).as_complex()) is None
    grown = attach_leaf(turan_complex((2, 2)))
    assert detect_complete_multipartite(grown) is None


# -- enumeration oracle -------------------------------------------------------


def test_connected_triangle_free_counts():
    graphs = connected_triangle_free_graphs(7)
    by_size = {}
    for g in graphs:
        by_size[len(g.vertices)] = by_size.get(len(g.vertices), 0) + 1
    assert [by_size[n] for n in range(2, 8)] == [1, 1, 3, 6, 19, 59]


def test_euler_transform_consistency():
    """The connected counts determine the counts of all triangle-free
    graphs through the Euler transform; both sequences are pinned."""
    connected = [1, 1, 1, 3, 6, 19, 59]  # n = 1..7
    all_counts = [1, 2, 3, 7, 14, 38, 107]  # n = 1..7, possibly disconnected

    c = [0] * 8
    for n in range(1, 8):
        c[n] = sum(d * connected[d - 1] for d in range(1, n + 1) if n % d == 0)
    b = [0] * 8
    b[0] = 1
    for n in range(1, 8):
        b[n] = (
            c[n] + sum(c[k] * b[n - k] for k in range(1, n))
        ) // n
    assert b[1:8] == all_counts

"""Shared fixtures: reference algebras, sampling configurations, and a
graph-enumeration oracle used by the combinatorial suites."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from mixedhess import (
    Graph,
    LinearForm,
    SamplingConfig,
    VarSet,
    build_algebra,
    example_catalog,
    parse_polynomial,
)


@pytest.fixture(scope="session")
def config():
    return SamplingConfig(seed=0)


@pytest.fixture(scope="session")
def fast_config():
    return SamplingConfig(seed=0, trials=4)


@pytest.fixture(scope="session")
def catalog():
    return {entry.identifier: entry for entry in example_catalog()}


@pytest.fixture(scope="session")
def four_cycle_alg(catalog):
    return build_algebra(catalog["four-cycle"].polynomial)


@pytest.fixture(scope="session")
def boolean3_alg():
    return build_algebra(parse_polynomial("x1*x2*x3"))


# -- helpers usable from any test module -------------------------------------


def dense_random_form(rng: random.Random, nvars: int, degree: int):
    """Homogeneous polynomial with every degree-`degree` monomial present,
    coefficients drawn uniformly from nonzero single digits."""
    names = tuple(f"x{i + 1}" for i in range(nvars))
    vs = VarSet(names)
    text = ""
    for exps in itertools.combinations_with_replacement(range(nvars), degree):
        counts = [0] * nvars
        for i in exps:
            counts[i] += 1
        coeff = rng.choice([1, 2, 3, 4, 5, 6, 7, 8, 9]) * rng.choice([1, -1])
        mono = "*".join(
            name if c == 1 else f"{name}^{c}"
            for name, c in zip(names, counts)
            if c
        )
        if not text:
            text = f"{coeff}*{mono}" if coeff > 0 else f"-{abs(coeff)}*{mono}"
        else:
            text += f" + {coeff}*{mono}" if coeff > 0 else f" - {abs(coeff)}*{mono}"
    return parse_polynomial(text, vs)


def random_linear_avoiding(alg, rng: random.Random, bound: int = 50):
    """Seeded linear form whose coefficient point misses the zero locus
    of the algebra's generator."""
    n = alg.varset.size
    while True:
        coeffs = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))
        if any(coeffs) and alg.f.evaluate(coeffs) != 0:
            return LinearForm(alg.varset, coeffs)


def connected_triangle_free_graphs(max_vertices: int) -> list[Graph]:
    """All connected triangle-free graphs on 2..max_vertices vertices, one
    per isomorphism class, via the published atlas of small graphs."""
    import networkx as nx

    out = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < 2 or n > max_vertices:
            continue
        if not nx.is_connected(g):
            continue
        if any(t > 0 for t in nx.triangles(g).values()):
            continue
        relabel = {node: i for i, node in enumerate(sorted(g.nodes()))}
        out.append(
            Graph.on_vertices(
                n, [(relabel[a], relabel[b]) for a, b in g.edges()]
            )
        )
    return out


def random_unicyclic_graph(rng: random.Random, nvertices: int):
    """Seeded random connected graph with exactly one cycle.

    Returns (graph, cycle_length).  Built as a random labeled tree from a
    Pruefer sequence plus one chord closing a cycle of known length."""
    import heapq

    n = nvertices
    assert n >= 3
    if n == 3:
        tree_edges = [(0, 1), (1, 2)]
    else:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        degree = [1] * n
        for s in seq:
            degree[s] += 1
        tree_edges = []
        leaves = [i for i in range(n) if degree[i] == 1]
        heapq.heapify(leaves)
        for s in seq:
            leaf = heapq.heappop(leaves)
            tree_edges.append((min(leaf, s), max(leaf, s)))
            degree[s] -= 1
            if degree[s] == 1:
                heapq.heappush(leaves, s)
        a, b = heapq.heappop(leaves), heapq.heappop(leaves)
        tree_edges.append((min(a, b), max(a, b)))
    adj = {i: set() for i in range(n)}
    for a, b in tree_edges:
        adj[a].add(b)
        adj[b].add(a)

    def tree_distance(a: int, b: int) -> int:
        frontier = {a}
        seen = {a}
        dist = 0
        while b not in frontier:
            frontier = {w for v in frontier for w in adj[v]} - seen
            seen |= frontier
            dist += 1
        return dist

    non_edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if b not in adj[a]
    ]
    chord = rng.choice(non_edges)
    cycle_length = tree_distance(*chord) + 1
    edges = sorted(tree_edges + [chord])
    return Graph.on_vertices(n, edges), cycle_length

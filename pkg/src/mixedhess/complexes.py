"""Simplicial complexes, graphs, and the algebras their facets generate.

A pure simplicial complex with every vertex covered determines a dual
generator in two blocks of variables: one x-variable per facet, one
u-variable per vertex, summed as (facet variable) times (product of the
facet's vertex variables).  The resulting bigraded Artinian Gorenstein
algebras are this module's subject matter.

Alongside the constructions (Turán complexes, leaf growth, face
deletion) the module provides the combinatorial side of several
dual-route checks:

* the Hilbert function from face counts alone, to compare with the
  catalecticant ranks;
* presentation by quadrics read off flagness and facet connectivity,
  to compare with the algebraic annihilator test;
* a vertex-edge incidence matrix built straight from a graph, to
  compare with the bigraded Hessian block of the algebra;
* for graphs, a full combinatorial prediction of the weak Lefschetz
  property, to compare with the rank-based verdict;
* for Turán complexes, an explicit syzygy of the facet rows of the
  degree (1, 2) multiplication, certifying failure of injectivity at
  every linear form at once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

from .apolarity import (
    GradedAlgebra,
    InvariantViolation,
    bigraded_decomposition,
    build_algebra,
)
from .config import DEFAULT_CONFIG, SamplingConfig
from .hessians import (
    MixedHessian,
    RankCertificate,
    bigraded_hessian,
    generic_rank,
)
from .polyring import Monomial, Polynomial, VarSet

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its vertices and inclusion-maximal faces.

    Facets are stored as tuples sorted in vertex order; the constructor
    rejects empty facets, unknown vertices, and redundant (contained)
    facets so that downstream code can trust maximality.
    """

    vertices: tuple[str, ...]
    facets: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        index = {v: i for i, v in enumerate(self.vertices)}
        seen = []
        for fac in self.facets:
            if not fac:
                raise ValueError("empty facet")
            for v in fac:
                if v not in index:
                    raise ValueError(f"facet uses unknown vertex {v!r}")
            if len(set(fac)) != len(fac):
                raise ValueError(f"repeated vertex in facet {fac!r}")
            if tuple(sorted(fac, key=index.__getitem__)) != fac:
                raise ValueError(f"facet {fac!r} is not in vertex order")
            seen.append(frozenset(fac))
        for i, a in enumerate(seen):
            for j, b in enumerate(seen):
                if i != j and a <= b:
                    raise ValueError(
                        f"facet {self.facets[i]!r} is contained in "
                        f"{self.facets[j]!r}"
                    )

    @staticmethod
    def from_facets(facets: Iterable[Iterable[str]]) -> "SimplicialComplex":
        """Build a complex from facet vertex lists, inferring the vertex
        set in first-appearance order and dropping contained facets."""
        verts: list[str] = []
        sets: list[frozenset[str]] = []
        for fac in facets:
            fs = frozenset(fac)
            for v in fac:
                if v not in verts:
                    verts.append(v)
            sets.append(fs)
        maximal = [
            s
            for i, s in enumerate(sets)
            if not any(i != j and s < t for j, t in enumerate(sets))
            and not any(s == t for t in sets[:i])
        ]
        order = {v: i for i, v in enumerate(verts)}
        return SimplicialComplex(
            tuple(verts),
            tuple(
                tuple(sorted(s, key=order.__getitem__)) for s in maximal
            ),
        )

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    def is_covered(self) -> bool:
        """Every vertex lies in at least one facet."""
        used = {v for f in self.facets for v in f}
        return used == set(self.vertices)

    def faces(self) -> set[frozenset[str]]:
        """All faces, the empty face included."""
        out: set[frozenset[str]] = {frozenset()}
        for fac in self.facets:
            for k in range(1, len(fac) + 1):
                for sub in combinations(fac, k):
                    out.add(frozenset(sub))
        return out

    def face_counts(self) -> tuple[int, ...]:
        """Entry k counts the faces with k vertices (entry 0 is 1 for
        the empty face)."""
        counts = [0] * (self.dim + 2)
        for face in self.faces():
            counts[len(face)] += 1
        return tuple(counts)


class GraphAlgebraClass(str, Enum):
    """Combinatorial prediction for the algebra of a graph's edges."""

    NOT_PRESENTED_BY_QUADRICS = "not-presented-by-quadrics"
    TREE_WLP = "tree-wlp"
    UNI_ODD_WLP = "uni-odd-wlp"
    UNI_EVEN_NO_WLP = "uni-even-no-wlp"
    MULTI_CYCLE_NO_WLP = "multi-cycle-no-wlp"

    @property
    def predicts_wlp(self) -> bool | None:
        if self in (
            GraphAlgebraClass.TREE_WLP,
            GraphAlgebraClass.UNI_ODD_WLP,
        ):
            return True
        if self in (
            GraphAlgebraClass.UNI_EVEN_NO_WLP,
            GraphAlgebraClass.MULTI_CYCLE_NO_WLP,
        ):
            return False
        return None


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with named vertices."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        index = {v: i for i, v in enumerate(self.vertices)}
        seen = set()
        for a, b in self.edges:
            if a not in index or b not in index:
                raise ValueError(f"edge ({a!r}, {b!r}) uses unknown vertex")
            if a == b:
                raise ValueError(f"loop at {a!r}")
            if index[a] > index[b]:
                raise ValueError(
                    f"edge ({a!r}, {b!r}) not in vertex order"
                )
            key = frozenset((a, b))
            if key in seen:
                raise ValueError(f"repeated edge ({a!r}, {b!r})")
            seen.add(key)

    @staticmethod
    def on_vertices(n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Graph on vertices v1..vn from 0-based index pairs."""
        names = tuple(f"v{i + 1}" for i in range(n))
        edges = tuple(
            sorted(
                (
                    tuple(sorted((names[a], names[b]), key=names.index))
                    for a, b in pairs
                ),
                key=lambda e: (names.index(e[0]), names.index(e[1])),
            )
        )
        return Graph(names, edges)

    def neighbors(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = self.neighbors()
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_triangle_free(self) -> bool:
        adj = self.neighbors()
        return not any(adj[a] & adj[b] for a, b in self.edges)

    def cycle_rank(self) -> int:
        """Number of independent cycles (assumes the graph is connected
        when used for classification; computed via components here)."""
        adj = self.neighbors()
        seen: set[str] = set()
        components = 0
        for v in self.vertices:
            if v in seen:
                continue
            components += 1
            seen.add(v)
            stack = [v]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return len(self.edges) - len(self.vertices) + components

    def two_core(self) -> "Graph":
        """Iteratively strip degree-at-most-one vertices."""
        adj = {v: set(n) for v, n in self.neighbors().items()}
        changed = True
        while changed:
            changed = False
            for v in list(adj):
                if len(adj[v]) <= 1:
                    for w in adj[v]:
                        adj[w].discard(v)
                    del adj[v]
                    changed = True
        verts = tuple(v for v in self.vertices if v in adj)
        edges = tuple(
            (a, b) for a, b in self.edges if a in adj and b in adj
        )
        return Graph(verts, edges)

    def as_complex(self) -> SimplicialComplex:
        if not self.edges:
            raise ValueError("a graph without edges has no facets")
        return SimplicialComplex(self.vertices, self.edges)


def classify_graph_algebra(graph: Graph) -> GraphAlgebraClass:
    """Predict, from the graph alone, how the algebra of its edges
    behaves: outside connected triangle-free graphs the annihilator
    needs generators beyond the quadrics; inside, the weak Lefschetz
    property is decided by the cycle structure (trees and a single odd
    cycle pass, a single even cycle or several cycles fail)."""
    if not graph.is_connected() or not graph.is_triangle_free():
        return GraphAlgebraClass.NOT_PRESENTED_BY_QUADRICS
    rank = graph.cycle_rank()
    if rank == 0:
        return GraphAlgebraClass.TREE_WLP
    if rank > 1:
        return GraphAlgebraClass.MULTI_CYCLE_NO_WLP
    core = graph.two_core()
    if len(core.edges) % 2 == 0:
        return GraphAlgebraClass.UNI_EVEN_NO_WLP
    return GraphAlgebraClass.UNI_ODD_WLP


# -- constructions ----------------------------------------------------------


_GROUP_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def turan_complex(orders: Sequence[int]) -> SimplicialComplex:
    """The complete multipartite complex: vertices split into groups of
    the given sizes and a facet picks one vertex from each group.

    A single group is allowed and yields a zero-dimensional complex
    (isolated vertices as facets), which the algebra constructors then
    reject; groups of one vertex are not, since such a vertex would lie
    in every facet."""
    if len(orders) < 1:
        raise ValueError("need at least one group")
    if len(orders) > len(_GROUP_LETTERS):
        raise ValueError("too many groups")
    if any(n < 2 for n in orders):
        raise ValueError("every group needs at least two vertices")
    groups = [
        tuple(f"{_GROUP_LETTERS[g]}{i + 1}" for i in range(n))
        for g, n in enumerate(orders)
    ]
    vertices = tuple(v for grp in groups for v in grp)
    facets = tuple(tuple(choice) for choice in product(*groups))
    return SimplicialComplex(vertices, facets)


def attach_leaf(
    comp: SimplicialComplex, facet: Sequence[str] | None = None
) -> SimplicialComplex:
    """Add one facet containing exactly one new vertex.

    When no facet is given, one is built from the most recently grown
    facet: its first vertex is swapped for a fresh vertex p1, p2, ...,
    so repeated growth yields a caterpillar tail.  Grows the vertex
    count and the facet count by one each, keeping the complex pure."""
    if facet is None:
        k = 1
        while f"p{k}" in comp.vertices:
            k += 1
        fresh = [f"p{k}"]
        rest = list(comp.facets[-1][1:])
    else:
        facet = tuple(facet)
        if len(set(facet)) != len(facet):
            raise ValueError("facet repeats a vertex")
        if len(facet) != comp.dim + 1:
            raise ValueError(
                f"facet must have {comp.dim + 1} vertices to keep the "
                "complex pure"
            )
        fresh = [v for v in facet if v not in comp.vertices]
        if len(fresh) != 1:
            raise ValueError("facet must contain exactly one new vertex")
        if not _NAME_RE.match(fresh[0]):
            raise ValueError(f"vertex name {fresh[0]!r} is not an identifier")
        rest = [v for v in facet if v != fresh[0]]
    order = {v: i for i, v in enumerate(comp.vertices)}
    new_facet = tuple(sorted(rest, key=order.__getitem__)) + (fresh[0],)
    return SimplicialComplex(
        comp.vertices + (fresh[0],), comp.facets + (new_facet,)
    )


def grow_with_leaves(comp: SimplicialComplex, count: int) -> SimplicialComplex:
    for _ in range(count):
        comp = attach_leaf(comp)
    return comp


def without_face(
    comp: SimplicialComplex, face: Iterable[str]
) -> SimplicialComplex:
    """The complex whose faces are those not containing the given face.

    Facets containing it are replaced by their maximal subsets that
    avoid it; everything else survives unchanged."""
    gone = frozenset(face)
    if not gone:
        raise ValueError("cannot delete the empty face")
    candidates: list[frozenset[str]] = []
    for fac in comp.facets:
        fs = frozenset(fac)
        if not gone <= fs:
            candidates.append(fs)
        else:
            for v in gone:
                candidates.append(fs - {v})
    maximal = [
        s
        for i, s in enumerate(candidates)
        if s
        and not any(i != j and s < t for j, t in enumerate(candidates))
        and s not in candidates[:i]
    ]
    order = {v: i for i, v in enumerate(comp.vertices)}
    used = {v for s in maximal for v in s}
    return SimplicialComplex(
        tuple(v for v in comp.vertices if v in used),
        tuple(
            sorted(
                (tuple(sorted(s, key=order.__getitem__)) for s in maximal),
                key=lambda f: tuple(order[v] for v in f),
            )
        ),
    )


def delete_vertex(comp: SimplicialComplex, vertex: str) -> SimplicialComplex:
    """Restrict to the faces avoiding one vertex.

    Deleting a leaf removes exactly its facet; deleting one vertex from
    a three-vertex group of a complete multipartite complex shrinks the
    group by one."""
    if vertex not in comp.vertices:
        raise ValueError(f"unknown vertex {vertex!r}")
    return without_face(comp, (vertex,))


# -- the dual generator and its algebra -------------------------------------


def dual_generator(comp: SimplicialComplex) -> Polynomial:
    """The two-block generator of a pure covered complex of dimension
    at least one: sum over facets of (facet variable) times (product of
    vertex variables).  Facet variables are x1, x2, ... in facet order
    (block 0); vertex variables carry the vertex names prefixed with u
    (block 1)."""
    if not comp.is_pure():
        raise ValueError("complex must be pure")
    if comp.dim < 1:
        raise ValueError("complex must have dimension at least one")
    if not comp.is_covered():
        raise ValueError("every vertex must lie in a facet")
    for v in comp.vertices:
        if not _NAME_RE.match(v):
            raise ValueError(f"vertex name {v!r} is not an identifier")
    m = len(comp.facets)
    names = tuple(f"x{i + 1}" for i in range(m)) + tuple(
        f"u{v}" for v in comp.vertices
    )
    if len(set(names)) != len(names):
        raise ValueError("facet and vertex variable names collide")
    blocks = (0,) * m + (1,) * len(comp.vertices)
    vs = VarSet(names, blocks)
    vidx = {v: m + i for i, v in enumerate(comp.vertices)}
    terms: dict[tuple[int, ...], Fraction] = {}
    for i, fac in enumerate(comp.facets):
        e = [0] * vs.size
        e[i] = 1
        for v in fac:
            e[vidx[v]] = 1
        terms[tuple(e)] = Fraction(1)
    return Polynomial(vs, terms)


def complex_algebra(comp: SimplicialComplex) -> GradedAlgebra:
    return build_algebra(dual_generator(comp))


def hilbert_from_face_counts(comp: SimplicialComplex) -> tuple[int, ...]:
    """Hilbert function of the complex's algebra from face counts alone:
    in middle degrees k the dimension is (number of k-vertex faces) +
    (number of (d-k)-vertex faces), d the socle degree.  Serves as an
    independent oracle for the catalecticant ranks."""
    d = comp.dim + 2
    e = comp.face_counts()

    def count(k: int) -> int:
        return e[k] if 0 <= k < len(e) else 0

    h = [1]
    for k in range(1, d):
        h.append(count(k) + count(d - k))
    h.append(1)
    return tuple(h)


def alternate_hilbert_closed_form(comp: SimplicialComplex) -> tuple[int, ...]:
    """A shifted variant of the face-count formula that circulates for
    complete multipartite complexes, using faces of one vertex fewer on
    each side.  Kept callable so reports can show both values; the
    catalecticant rank is the ground truth and agrees with
    `hilbert_from_face_counts`, not with this variant, already for the
    three-group complex with two vertices per group."""
    d = comp.dim + 2
    e = comp.face_counts()

    def count(k: int) -> int:
        return e[k] if 0 <= k < len(e) else 0

    h = [1]
    for k in range(1, d):
        h.append(count(k - 1) + count(d - k - 1))
    h.append(1)
    return tuple(h)


def incidence_gradient_matrix(graph: Graph) -> MixedHessian:
    """Vertex-by-edge matrix read off the graph: the (v, e) entry is
    the variable of the other endpoint when v lies on e, else zero.

    Built without the algebra, it must coincide with the bigraded
    Hessian block of bidegrees ((0, 1), (1, 0)) of the edge algebra,
    which is the dual-route check the tests perform."""
    comp = graph.as_complex()
    f = dual_generator(comp)
    vs = f.varset
    m = len(comp.facets)
    vidx = {v: m + i for i, v in enumerate(comp.vertices)}

    def var_poly(index: int) -> Polynomial:
        e = [0] * vs.size
        e[index] = 1
        return Polynomial(vs, {tuple(e): Fraction(1)})

    def unit(index: int) -> Monomial:
        e = [0] * vs.size
        e[index] = 1
        return Monomial(tuple(e))

    zero = Polynomial.zero(vs)
    entries = []
    row_basis = []
    for v in comp.vertices:
        row = []
        for a, b in comp.facets:
            if v == a:
                row.append(var_poly(vidx[b]))
            elif v == b:
                row.append(var_poly(vidx[a]))
            else:
                row.append(zero)
        entries.append(tuple(row))
        row_basis.append(unit(vidx[v]))
    col_basis = [unit(i) for i in range(m)]
    return MixedHessian(
        vs,
        tuple(entries),
        tuple(row_basis),
        tuple(col_basis),
        "bigraded",
        ((0, 1), (1, 0)),
    )


# -- combinatorial quadric presentation -------------------------------------


def is_facet_connected(comp: SimplicialComplex) -> bool:
    """Whether any two facets are linked by a chain of facets in which
    consecutive ones share all but one vertex."""
    sets = [frozenset(f) for f in comp.facets]
    if not sets:
        return False
    size = len(comp.facets[0])
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(len(sets)):
            if j not in seen and len(sets[i] & sets[j]) == size - 1:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(sets)


def _maximal_cliques(
    vertices: Sequence[str], adj: dict[str, set[str]]
) -> Iterator[frozenset[str]]:
    """Bron-Kerbosch with pivoting."""

    def expand(r: set[str], p: set[str], x: set[str]):
        if not p and not x:
            yield frozenset(r)
            return
        pivot = max(p | x, key=lambda v: len(adj[v] & p))
        for v in list(p - adj[pivot]):
            yield from expand(r | {v}, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    yield from expand(set(), set(vertices), set())


def is_flag(comp: SimplicialComplex) -> bool:
    """Whether the complex is determined by its edges: every set of
    pairwise adjacent vertices must be a face, which happens exactly
    when each maximal clique of the 1-skeleton lies in a facet."""
    adj: dict[str, set[str]] = {v: set() for v in comp.vertices}
    for fac in comp.facets:
        for a, b in combinations(fac, 2):
            adj[a].add(b)
            adj[b].add(a)
    facet_sets = [frozenset(f) for f in comp.facets]
    for clique in _maximal_cliques(comp.vertices, adj):
        if not any(clique <= fs for fs in facet_sets):
            return False
    return True


def presented_by_quadrics_combinatorial(comp: SimplicialComplex) -> bool:
    """Combinatorial route to the quadric-presentation question for the
    edge-and-facet algebra: flag plus facet-connected."""
    return is_flag(comp) and is_facet_connected(comp)


def detect_complete_multipartite(
    comp: SimplicialComplex,
) -> tuple[tuple[str, ...], ...] | None:
    """Recognize a complete multipartite complex and return its groups.

    The candidate groups are the components of the complement of the
    1-skeleton; the complex qualifies when there is one group per facet
    vertex and the facets are exactly the transversals of the groups.
    Returns None otherwise."""
    if not comp.is_pure() or not comp.facets:
        return None
    adj: dict[str, set[str]] = {v: set() for v in comp.vertices}
    for fac in comp.facets:
        for a, b in combinations(fac, 2):
            adj[a].add(b)
            adj[b].add(a)
    groups: list[tuple[str, ...]] = []
    assigned: set[str] = set()
    for v in comp.vertices:
        if v in assigned:
            continue
        group = {v}
        frontier = [v]
        while frontier:
            w = frontier.pop()
            for other in comp.vertices:
                if other not in assigned and other not in group and other not in adj[w]:
                    group.add(other)
                    frontier.append(other)
        assigned |= group
        order = {name: i for i, name in enumerate(comp.vertices)}
        groups.append(tuple(sorted(group, key=order.__getitem__)))
    if len(groups) != comp.dim + 1:
        return None
    transversals = {frozenset(choice) for choice in product(*groups)}
    if {frozenset(f) for f in comp.facets} != transversals:
        return None
    return tuple(groups)


# -- non-injectivity certificate for complete multipartite complexes --------


@dataclass(frozen=True)
class NoninjectivityWitness:
    """Exact certificate that multiplication A_1 -> A_2 by any linear
    form fails to have full rank.

    syzygy lists one polynomial per facet row of the bigraded Hessian
    block; their row combination vanishes identically, which caps the
    rank of the facet rows one below their count at every point.  When
    that cap plus the vertex row count stays below the full rank the
    weak Lefschetz property is excluded outright.  grid_pairs records
    the two chosen vertices per group that support the syzygy."""

    grid_pairs: tuple[tuple[str, str], ...]
    block: MixedHessian
    syzygy: tuple[Polynomial, ...]
    block_rank: RankCertificate
    step: tuple[int, int]
    step_rank_bound: int
    step_full_rank: int
    wlp_excluded: bool
    notes: tuple[str, ...] = ()


def grid_noninjectivity_witness(
    comp: SimplicialComplex,
    pairs: Sequence[tuple[str, str]],
    config: SamplingConfig = DEFAULT_CONFIG,
    alg: GradedAlgebra | None = None,
) -> NoninjectivityWitness:
    """Syzygy certificate for any pure complex containing a full grid:
    one distinguished pair of vertices per group, with every transversal
    of the pairs a facet.

    A transversal facet picks one vertex from each pair; its syzygy
    coefficient is the product of the *unpicked* vertex variables,
    signed by the parity of the picks; all other facets get zero.  The
    row combination of the ((1,0), (0,d-2)) Hessian block vanishes
    because each column monomial pairs the transversals in cancelling
    couples.  The identity is verified by exact polynomial arithmetic
    here, and the block's rank certificate is upgraded to exact when
    sampling meets the bound the syzygy imposes."""
    pairs = tuple((str(a), str(b)) for a, b in pairs)
    flat = [v for p in pairs for v in p]
    if len(set(flat)) != len(flat):
        raise ValueError("grid pairs overlap")
    facet_sets = {frozenset(f) for f in comp.facets}
    if len(pairs) != comp.dim + 1:
        raise ValueError("need one pair per facet vertex")
    for choice in product(*pairs):
        if frozenset(choice) not in facet_sets:
            raise ValueError(
                f"grid transversal {choice!r} is not a facet"
            )
    if alg is None:
        alg = complex_algebra(comp)
    d = alg.socle_degree
    block = bigraded_hessian(alg, (1, 0), (0, d - 2))

    m = len(comp.facets)
    vs = alg.f.varset
    uindex = {v: m + i for i, v in enumerate(comp.vertices)}

    facet_of_row = []
    for mono in block.row_basis:
        idx = next(i for i, e in enumerate(mono.exps) if e)
        facet_of_row.append(frozenset(comp.facets[idx]))

    syzygy = []
    for facet in facet_of_row:
        picks = []
        for pair in pairs:
            if pair[0] in facet:
                picks.append(0)
            elif pair[1] in facet:
                picks.append(1)
            else:
                picks = None
                break
        if picks is None or facet != frozenset(
            pair[p] for pair, p in zip(pairs, picks)
        ):
            syzygy.append(Polynomial.zero(vs))
            continue
        e = [0] * vs.size
        for pair, p in zip(pairs, picks):
            e[uindex[pair[1 - p]]] = 1
        sign = Fraction(-1 if sum(picks) % 2 else 1)
        syzygy.append(Polynomial(vs, {tuple(e): sign}))

    for j in range(block.ncols):
        acc = Polynomial.zero(vs)
        for i in range(block.nrows):
            if not syzygy[i].is_zero():
                acc = acc + syzygy[i] * block.entries[i][j]
        if not acc.is_zero():
            raise InvariantViolation(
                "syzygy fails on column "
                f"{block.col_basis[j].text(vs)}"
            )

    cert = generic_rank(block, config)
    notes: list[str] = []
    cap = block.nrows - 1
    if cert.rank == cap and not cert.is_exact:
        cert = RankCertificate(
            cap,
            "exact",
            trials=cert.trials,
            sample_bound=cert.sample_bound,
            note="syzygy caps the rank above, sampling meets the cap",
        )
    elif cert.rank > cap:
        raise InvariantViolation(
            "sampled rank exceeds the cap the syzygy imposes"
        )
    elif cert.rank < cap:
        notes.append(
            "sampling stayed below the syzygy cap; the block rank "
            "certificate is conservative"
        )

    h = alg.hilbert
    dec = bigraded_decomposition(alg)
    vertex_rows = len(dec.pieces.get((0, 1), ()))
    bound = cap + vertex_rows
    full = min(h[1], h[2])
    return NoninjectivityWitness(
        pairs,
        block,
        tuple(syzygy),
        cert,
        (1, 2),
        bound,
        full,
        bound < full,
        tuple(notes),
    )


def grid_pairs_for(groups: Sequence[Sequence[str]]) -> tuple[tuple[str, str], ...]:
    """The first two vertices of every group, the default grid."""
    return tuple((grp[0], grp[1]) for grp in groups)


def turan_noninjectivity_witness(
    orders: Sequence[int], config: SamplingConfig = DEFAULT_CONFIG
) -> RankCertificate:
    """Certificate that the facet-row Hessian block of a complete
    multipartite complex has rank strictly below the facet count, which
    forces a kernel in multiplication A_1 -> A_2 by every linear form.

    The strict bound is always exact (it comes from the grid syzygy,
    verified symbolically); the certificate's rank value itself may stay
    probabilistic when sampling does not reach the bound.  Callers that
    want the syzygy and the Lefschetz conclusion use
    `grid_noninjectivity_witness` directly."""
    orders = tuple(int(n) for n in orders)
    if len(orders) < 2:
        raise ValueError("need at least two groups")
    comp = turan_complex(orders)
    pairs = tuple(
        (f"{_GROUP_LETTERS[g]}1", f"{_GROUP_LETTERS[g]}2")
        for g in range(len(orders))
    )
    w = grid_noninjectivity_witness(comp, pairs, config)
    cert = w.block_rank
    cap = w.block.nrows - 1
    bound = f"syzygy caps the rank at {cap} < {w.block.nrows} facet rows"
    note = f"{cert.note}; {bound}" if cert.note else bound
    return replace(cert, note=note)


# -- enumeration of connected triangle-free graphs --------------------------


def _canonical_edges(n: int, edges: frozenset[tuple[int, int]]):
    """Lexicographically least relabeling of the edge set among vertex
    bijections that preserve degrees."""
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(deg[v], []).append(v)
    ordered = [classes[d] for d in sorted(classes)]
    targets = []
    start = 0
    for cls in ordered:
        targets.append(list(range(start, start + len(cls))))
        start += len(cls)

    best = None
    for perms in product(*(permutations(t) for t in targets)):
        relabel = [0] * n
        for cls, tgt in zip(ordered, perms):
            for v, t in zip(cls, tgt):
                relabel[v] = t
        key = tuple(
            sorted(
                (min(relabel[a], relabel[b]), max(relabel[a], relabel[b]))
                for a, b in edges
            )
        )
        if best is None or key < best:
            best = key
    return best


def enumerate_connected_triangle_free_graphs(
    max_vertices: int,
) -> list[Graph]:
    """All connected triangle-free graphs with up to the given number
    of vertices, one per isomorphism class.

    Grown by vertex augmentation: every such graph on n >= 2 vertices
    arises from one on n - 1 vertices (remove a non-cut vertex) by
    attaching a new vertex to a nonempty independent set, and
    attaching to an independent set is exactly what keeps triangles
    out.  Isomorph rejection uses a degree-refined canonical form."""
    if max_vertices < 1:
        return []
    out = [Graph.on_vertices(1, [])]
    level: list[frozenset[tuple[int, int]]] = [frozenset()]
    for n in range(2, max_vertices + 1):
        prev_n = n - 1
        seen = set()
        next_level = []
        for edges in level:
            adj = [0] * prev_n
            for a, b in edges:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            for mask in range(1, 1 << prev_n):
                independent = True
                rest = mask
                while rest:
                    v = (rest & -rest).bit_length() - 1
                    if adj[v] & mask:
                        independent = False
                        break
                    rest &= rest - 1
                if not independent:
                    continue
                grown = set(edges)
                rest = mask
                while rest:
                    v = (rest & -rest).bit_length() - 1
                    grown.add((v, prev_n))
                    rest &= rest - 1
                key = _canonical_edges(n, frozenset(grown))
                if key in seen:
                    continue
                seen.add(key)
                next_level.append(frozenset(key))
        level = next_level
        for edges in level:
            out.append(Graph.on_vertices(n, sorted(edges)))
    return out

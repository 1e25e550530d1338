"""Higher Hessian matrices of a graded Artinian Gorenstein algebra.

For quotient bases B_k and B_l of the algebra built from a dual generator
f, the mixed Hessian of order (k, l) is the matrix whose (i, j) entry is
the polynomial obtained by letting the product of the i-th degree-k and
j-th degree-l basis monomials act on f as a differential operator.  The
order (1, 1) case is the classical Hessian of second partials.

Two variants matter alongside the plain matrix:

* the *dual* mixed Hessian, whose rows are indexed by the dual basis of
  B_l under the socle pairing rather than by monomials.  Its evaluation
  at a suitable point recovers, up to a factorial, the matrix of
  multiplication by a power of a linear form (see `lefschetz`);
* *bigraded* blocks, which restrict rows and columns to pieces of fixed
  bidegree when the variables split into two blocks.

Rank questions about these matrices are answered by `generic_rank`,
which is exact whenever it can be (constant entries, sampled rank
meeting the dimension bound, symbolic determinants up to a size cap)
and otherwise reports a sampled rank together with a Schwartz-Zippel
failure bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .apolarity import GradedAlgebra, bigraded_decomposition
from .config import DEFAULT_CONFIG, SamplingConfig
from .linalg import matrix_rank
from .polyring import Monomial, Polynomial, VarSet, apolar_monomial


class SymbolicCapExceeded(RuntimeError):
    """A symbolic determinant was requested beyond the configured cap."""


@dataclass(frozen=True)
class RankCertificate:
    """Result of a rank computation on a polynomial matrix.

    mode is "exact" when the value is proven (dimension bound met,
    constant entries, or a symbolic determinant decided it) and
    "probabilistic" when it is the maximum rank seen over sampled
    points; in the latter case failure_bound bounds the probability
    that the true generic rank is larger.
    """

    rank: int
    mode: str
    trials: int = 0
    sample_bound: int = 0
    failure_bound: Fraction | None = None
    note: str = ""

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"


@dataclass(frozen=True)
class MixedHessian:
    """A matrix of polynomial entries with labelled rows and columns.

    row_basis and col_basis hold the monomials indexing each side; for
    kind "dual" the rows stand for the dual-basis elements of those
    monomials.  orders records (k, l) for graded matrices and the pair
    of bidegrees for bigraded blocks.
    """

    varset: VarSet
    entries: tuple[tuple[Polynomial, ...], ...]
    row_basis: tuple[Monomial, ...]
    col_basis: tuple[Monomial, ...]
    kind: str
    orders: tuple

    @property
    def nrows(self) -> int:
        return len(self.row_basis)

    @property
    def ncols(self) -> int:
        return len(self.col_basis)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def max_entry_degree(self) -> int:
        deg = 0
        for row in self.entries:
            for p in row:
                if not p.is_zero():
                    deg = max(deg, p.degree())
        return deg


def mixed_hessian(alg: GradedAlgebra, k: int, l: int) -> MixedHessian:
    """The order-(k, l) Hessian: rows B_k, columns B_l, entries of
    degree d - k - l where d is the socle degree."""
    d = alg.socle_degree
    if not (0 <= k and 0 <= l and k + l <= d):
        raise ValueError(f"orders ({k}, {l}) out of range for socle degree {d}")
    rows_b = alg.quotient_basis(k)
    cols_b = alg.quotient_basis(l)
    entries = tuple(
        tuple(
            apolar_monomial(
                tuple(a + b for a, b in zip(alpha.exps, beta.exps)), alg.f
            )
            for beta in cols_b
        )
        for alpha in rows_b
    )
    return MixedHessian(alg.f.varset, entries, rows_b, cols_b, "mixed", (k, l))


def dual_basis(alg: GradedAlgebra, l: int) -> tuple[Polynomial, ...]:
    """The basis of A_{d-l} dual to B_l under the socle pairing.

    The i-th element pairs to 1 against the i-th monomial of B_l and to
    0 against every other one; its coefficients in B_{d-l} form the
    i-th column of the inverse pairing matrix.
    """
    d = alg.socle_degree
    inv = alg.pairing_inverse(l)
    comp = alg.quotient_basis(d - l)
    out = []
    for i in range(len(inv)):
        terms: dict[tuple[int, ...], Fraction] = {}
        for t, c in enumerate(comp):
            coeff = inv[t][i]
            if coeff:
                terms[c.exps] = coeff
        out.append(Polynomial(alg.f.varset, terms))
    return tuple(out)


def dual_mixed_hessian(alg: GradedAlgebra, l: int, k: int) -> MixedHessian:
    """Hessian with rows the duals of B_l and columns B_k.

    Row i is the linear combination of the rows of the plain order
    (d - l, k) Hessian given by the i-th column of the inverse pairing
    matrix in degree l.  Entries are polynomials of degree l - k.
    """
    d = alg.socle_degree
    if not (0 <= k <= l <= d):
        raise ValueError(f"need 0 <= k <= l <= socle degree, got ({l}, {k})")
    inner = mixed_hessian(alg, d - l, k)
    inv = alg.pairing_inverse(l)
    s = len(alg.quotient_basis(l))
    r = inner.ncols
    zero = Polynomial.zero(alg.f.varset)
    entries = []
    for i in range(s):
        row = []
        for j in range(r):
            acc = zero
            for t in range(len(inner.row_basis)):
                c = inv[t][i]
                if c:
                    acc = acc + inner.entries[t][j].scale(c)
            row.append(acc)
        entries.append(tuple(row))
    return MixedHessian(
        alg.f.varset,
        tuple(entries),
        alg.quotient_basis(l),
        inner.col_basis,
        "dual",
        (l, k),
    )


def bigraded_hessian(
    alg: GradedAlgebra,
    row_bidegree: tuple[int, int],
    col_bidegree: tuple[int, int],
) -> MixedHessian:
    """Block of the mixed Hessian with rows and columns restricted to
    quotient-basis monomials of the given bidegrees."""
    dec = bigraded_decomposition(alg)
    rows_b = dec.pieces.get(row_bidegree, ())
    cols_b = dec.pieces.get(col_bidegree, ())
    entries = tuple(
        tuple(
            apolar_monomial(
                tuple(a + b for a, b in zip(alpha.exps, beta.exps)), alg.f
            )
            for beta in cols_b
        )
        for alpha in rows_b
    )
    return MixedHessian(
        alg.f.varset,
        entries,
        tuple(rows_b),
        tuple(cols_b),
        "bigraded",
        (row_bidegree, col_bidegree),
    )


# -- evaluation and rank ----------------------------------------------------


def evaluate_matrix(
    h: MixedHessian, point: Sequence[Fraction | int]
) -> list[list[Fraction]]:
    """Evaluate every entry at the point, sharing monomial powers across
    entries (the same exponent patterns recur throughout the matrix)."""
    if len(point) != h.varset.size:
        raise ValueError(
            f"point has {len(point)} coordinates, expected {h.varset.size}"
        )
    pt = [Fraction(c) for c in point]
    cache: dict[tuple[int, ...], Fraction] = {}

    def mono(e: tuple[int, ...]) -> Fraction:
        v = cache.get(e)
        if v is None:
            v = Fraction(1)
            for i, a in enumerate(e):
                if a:
                    v *= pt[i] ** a
            cache[e] = v
        return v

    return [
        [
            sum((c * mono(e) for e, c in p.terms.items()), Fraction(0))
            for p in row
        ]
        for row in h.entries
    ]


def rank_at(h: MixedHessian, point: Sequence[Fraction | int]) -> int:
    """Exact rank of the matrix evaluated at one point."""
    if h.nrows == 0 or h.ncols == 0:
        return 0
    return matrix_rank(evaluate_matrix(h, point))


def symbolic_det(h: MixedHessian, cap: int | None = None) -> Polynomial:
    """Exact determinant by cofactor expansion with memoized minors.

    Rows are pre-sorted so the sparsest come first and zero entries are
    skipped, which keeps the recursion shallow on the structured
    matrices this package produces.  Sizes beyond the cap raise
    SymbolicCapExceeded rather than risk an infeasible expansion.
    """
    n = h.nrows
    if n != h.ncols:
        raise ValueError("determinant of a non-square matrix")
    if cap is not None and n > cap:
        raise SymbolicCapExceeded(f"matrix size {n} exceeds symbolic cap {cap}")
    one = Polynomial.constant(h.varset, Fraction(1))
    if n == 0:
        return one

    order = sorted(
        range(n), key=lambda i: sum(1 for p in h.entries[i] if not p.is_zero())
    )
    # parity of the row permutation applied by the sort
    sign = 1
    seen = order[:]
    for i in range(n):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    rows = [h.entries[i] for i in order]

    zero = Polynomial.zero(h.varset)
    memo: dict[int, Polynomial] = {0: one}

    def minor(mask: int) -> Polynomial:
        got = memo.get(mask)
        if got is not None:
            return got
        depth = n - mask.bit_count()
        row = rows[depth]
        acc = zero
        pos = 0
        rest = mask
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            p = row[c]
            if not p.is_zero():
                sub = minor(mask & ~low)
                if not sub.is_zero():
                    term = p * sub
                    acc = acc + (term if pos % 2 == 0 else -term)
            pos += 1
            rest &= rest - 1
        memo[mask] = acc
        return acc

    det = minor((1 << n) - 1)
    return det.scale(Fraction(sign)) if sign < 0 else det


def generic_rank(
    h: MixedHessian, config: SamplingConfig = DEFAULT_CONFIG
) -> RankCertificate:
    """Rank of the matrix at a generic point.

    Exactness ladder: empty or constant matrices are decided directly;
    a sampled rank that reaches min(nrows, ncols) is already proof;
    square matrices within the symbolic cap get an exact determinant
    (deciding full versus not, and pinning rank n-1 when the sampled
    rank sits there).  Anything else is reported as probabilistic with
    a Schwartz-Zippel bound on the chance the sampled maximum missed
    the true generic rank.
    """
    n, m = h.shape
    bound = min(n, m)
    if bound == 0:
        return RankCertificate(0, "exact", note="empty matrix")
    deg = h.max_entry_degree()
    if deg == 0:
        rows = [
            [p.coefficient((0,) * h.varset.size) for p in row]
            for row in h.entries
        ]
        return RankCertificate(
            matrix_rank(rows), "exact", note="constant entries"
        )

    rng = config.rng("generic-rank", h.kind, h.orders, n, m)
    best = 0
    for _ in range(config.trials):
        point = [
            rng.randint(-config.sample_bound, config.sample_bound)
            for _ in range(h.varset.size)
        ]
        best = max(best, rank_at(h, point))
        if best == bound:
            return RankCertificate(
                best,
                "exact",
                trials=config.trials,
                sample_bound=config.sample_bound,
                note="sampled rank reached the dimension bound",
            )

    if n == m and n <= config.symbolic_cap:
        det = symbolic_det(h, config.symbolic_cap)
        if not det.is_zero():
            return RankCertificate(
                n, "exact", note="nonzero symbolic determinant"
            )
        if best == n - 1:
            return RankCertificate(
                n - 1,
                "exact",
                trials=config.trials,
                sample_bound=config.sample_bound,
                note="vanishing symbolic determinant, sampled rank n-1",
            )
        note = "vanishing symbolic determinant, sampled rank below n-1"
    else:
        note = "sampled rank below the dimension bound"

    size = 2 * config.sample_bound + 1
    minor_degree = (best + 1) * deg
    per_trial = Fraction(min(minor_degree, size), size)
    return RankCertificate(
        best,
        "probabilistic",
        trials=config.trials,
        sample_bound=config.sample_bound,
        failure_bound=per_trial**config.trials,
        note=note,
    )

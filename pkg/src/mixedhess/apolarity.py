"""Apolarity: catalecticant matrices and the graded Artinian Gorenstein
algebra cut out by the annihilator of a homogeneous polynomial.

Given homogeneous f of degree d, the operators of degree k map onto the
space of (d-k)-th order derivatives of f; the catalecticant is that map
written in monomial bases.  Its rank is the Hilbert function value h_k,
its pivot columns (graded-lex order) give a deterministic monomial basis
of the degree-k piece of the quotient algebra, and its kernel is the
degree-k slice of the annihilator.

The quadric-generation test works degree by degree.  For 3 <= k <= d it
compares the span of (variable * annihilator_{k-1}) against the full
degree-k annihilator with an incremental sparse row space.  At k = d+1
the annihilator is all of Q_{d+1}, and the span condition dualizes to a
tiny statement about linear forms (see ``_socle_step_spanned``), which
avoids enumerating the enormous degree-(d+1) monomial basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .linalg import RowSpace, invert, kernel_basis, rref, sparse_rref
from .polyring import (
    Monomial,
    Polynomial,
    VarSet,
    apolar_monomial,
    apolar_pairing,
    falling_product,
    grlex_key,
    monomial_exponents,
)


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Catalecticant:
    """The degree-k apolarity map written in monomial bases.

    rows are indexed by base-ring monomials of degree d-k, columns by
    operator monomials of degree k, both graded-lex descending.
    ``rows_sparse`` maps row exponent -> {column exponent -> entry}.
    """

    varset: VarSet
    degree: int
    row_monomials: tuple[Monomial, ...]
    col_monomials: tuple[Monomial, ...]
    rows_sparse: dict

    def dense(self) -> list[list[Fraction]]:
        cols = {m.exps: j for j, m in enumerate(self.col_monomials)}
        out = []
        zero = Fraction(0)
        for rm in self.row_monomials:
            row = [zero] * len(self.col_monomials)
            for ce, val in self.rows_sparse.get(rm.exps, {}).items():
                row[cols[ce]] = val
            out.append(row)
        return out


def _divisors_of_degree(exps: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors a <= exps with |a| = k."""
    n = len(exps)

    def rec(i: int, remaining: int, prefix: list[int]):
        if i == n:
            if remaining == 0:
                yield tuple(prefix)
            return
        tail = sum(exps[i:])
        if remaining > tail:
            return
        for e in range(min(exps[i], remaining) + 1):
            prefix.append(e)
            yield from rec(i + 1, remaining - e, prefix)
            prefix.pop()

    yield from rec(0, k, [])


def _sparse_catalecticant_rows(f: Polynomial, k: int) -> dict:
    """Rows of the degree-k catalecticant restricted to columns that can
    act nontrivially (divisors of the support of f).  Dropped columns
    are identically zero, so ranks and pivot columns are unaffected."""
    rows: dict = {}
    for b, coeff in f.terms.items():
        for a in _divisors_of_degree(b, k):
            val = coeff * falling_product(b, a)
            if val:
                rkey = tuple(x - y for x, y in zip(b, a))
                rows.setdefault(rkey, {})[a] = val
    return rows


def catalecticant(f: Polynomial, k: int) -> Catalecticant:
    """Full catalecticant matrix of f in degree k.

    For k > deg f every operator annihilates f and the matrix has no
    rows (its kernel is everything), which is the degenerate convention
    used by the algebra builder.
    """
    d = f.homogeneous_degree()
    if d is None:
        raise ValueError("catalecticant needs a nonzero homogeneous polynomial")
    if k < 0:
        raise ValueError("negative degree")
    cols = tuple(Monomial(e) for e in monomial_exponents(f.varset, k))
    row_exps = monomial_exponents(f.varset, d - k) if k <= d else ()
    rows = tuple(Monomial(e) for e in row_exps)
    return Catalecticant(f.varset, k, rows, cols, _sparse_catalecticant_rows(f, k))


class GradedAlgebra:
    """The standard graded Artinian Gorenstein quotient attached to a
    homogeneous dual generator f of degree d >= 1.

    Carries, per degree k = 0..d: the Hilbert value h_k, a deterministic
    monomial quotient basis (catalecticant pivot columns), and (lazily)
    a basis of the degree-k annihilator.  Pairing matrices between
    complementary degrees and their inverses are cached on first use.
    """

    def __init__(
        self,
        f: Polynomial,
        hilbert: tuple[int, ...],
        quotient_bases: tuple[tuple[Monomial, ...], ...],
        warnings: tuple[str, ...],
    ):
        self.f = f
        self.varset = f.varset
        self.socle_degree = len(hilbert) - 1
        self.hilbert = hilbert
        self._quotient_bases = quotient_bases
        self.warnings = warnings
        self.i1_zero = hilbert[1] == f.varset.size if self.socle_degree >= 1 else False
        self._ann_cache: dict[int, tuple[Polynomial, ...]] = {}
        self._pairing_cache: dict[int, list[list[Fraction]]] = {}
        self._pairing_inv_cache: dict[int, list[list[Fraction]]] = {}
        lead = quotient_bases[self.socle_degree][0].exps
        fact = 1
        for e in lead:
            fact *= math.factorial(e)
        self.theta_monomial = Monomial(lead)
        self.theta_normalizer = Fraction(1) / (f.terms[lead] * fact)

    # -- basic queries -------------------------------------------------

    @property
    def codimension(self) -> int:
        return self.hilbert[1]

    def dim(self, k: int) -> int:
        if 0 <= k <= self.socle_degree:
            return self.hilbert[k]
        return 0

    def quotient_basis(self, k: int) -> tuple[Monomial, ...]:
        if 0 <= k <= self.socle_degree:
            return self._quotient_bases[k]
        return ()

    def ann_basis(self, k: int) -> tuple[Polynomial, ...]:
        """Basis of the degree-k slice of the annihilator (lazy).

        Kernel vectors of the restricted catalecticant are merged with
        one singleton per monomial operator whose column is identically
        zero; together they are an echelon basis of the full kernel.
        """
        if k < 0:
            return ()
        cached = self._ann_cache.get(k)
        if cached is not None:
            return cached
        basis = tuple(self._compute_ann_basis(k))
        self._ann_cache[k] = basis
        return basis

    def _compute_ann_basis(self, k: int) -> Iterator[Polynomial]:
        all_exps = monomial_exponents(self.varset, k)
        if k > self.socle_degree:
            for e in all_exps:
                yield Polynomial.from_monomial(self.varset, e)
            return
        rows = _sparse_catalecticant_rows(self.f, k)
        relevant_set = {a for row in rows.values() for a in row}
        red = sparse_rref(list(rows.values()))
        pivot_cols = set(red.keys())
        for e in all_exps:
            if e in pivot_cols:
                continue
            if e not in relevant_set:
                yield Polynomial.from_monomial(self.varset, e)
                continue
            terms = {e: Fraction(1)}
            for p, prow in red.items():
                c = prow.get(e)
                if c:
                    terms[p] = -c
            yield Polynomial(self.varset, terms)

    # -- pairing -------------------------------------------------------

    def pairing_matrix(self, k: int) -> list[list[Fraction]]:
        """Matrix of the perfect pairing A_k x A_{d-k} -> K in the chosen
        quotient bases: entry (i, j) = (alpha_i * gamma_j)(f)."""
        cached = self._pairing_cache.get(k)
        if cached is not None:
            return cached
        rows_b = self.quotient_basis(k)
        cols_b = self.quotient_basis(self.socle_degree - k)
        mat = [
            [apolar_pairing(a.exps, g.exps, self.f) for g in cols_b]
            for a in rows_b
        ]
        self._pairing_cache[k] = mat
        return mat

    def pairing_inverse(self, k: int) -> list[list[Fraction]]:
        cached = self._pairing_inv_cache.get(k)
        if cached is not None:
            return cached
        try:
            inv = invert(self.pairing_matrix(k))
        except ValueError:
            raise InvariantViolation(
                f"pairing matrix in degree {k} is singular"
            ) from None
        self._pairing_inv_cache[k] = inv
        return inv

    def coordinates(self, k: int, op: Polynomial) -> list[Fraction]:
        """Coordinates of the class of a degree-k operator in the degree-k
        quotient basis, obtained by pairing against the complementary
        basis and solving with the (cached) inverse pairing matrix."""
        gammas = self.quotient_basis(self.socle_degree - k)
        b = []
        for g in gammas:
            total = Fraction(0)
            for a, c in op.terms.items():
                total += c * apolar_pairing(a, g.exps, self.f)
            b.append(total)
        inv = self.pairing_inverse(k)
        # coordinates solve P^T c = b, i.e. c = (P^{-1})^T b
        n = len(b)
        return [sum(inv[t][i] * b[t] for t in range(n)) for i in range(n)]

    def apply_to_f(self, op: Polynomial) -> Polynomial:
        out = Polynomial.zero(self.varset)
        for a, c in op.terms.items():
            out = out + apolar_monomial(a, self.f).scale(c)
        return out


def build_algebra(f: Polynomial) -> GradedAlgebra:
    """Construct the graded algebra data for a homogeneous f of degree >= 1.

    Variables that f does not involve are dropped (with a warning) so the
    algebra lives in its essential variable set whenever the excess is
    just unused coordinates.  A genuinely degenerate first degree (linear
    relations among first partials) is kept and reported as a warning.
    """
    d = f.homogeneous_degree()
    if f.is_zero() or d is None:
        raise ValueError("dual generator must be homogeneous and nonzero")
    if d < 1:
        raise ValueError("dual generator must have degree >= 1")

    warnings: list[str] = []
    used = sorted({i for e in f.terms for i, v in enumerate(e) if v})
    if len(used) < f.varset.size:
        dropped = [f.varset.names[i] for i in range(f.varset.size) if i not in used]
        warnings.append(
            "dropped unused variables: " + ", ".join(dropped)
        )
        new_vs = f.varset.restrict(used)
        f = Polynomial(
            new_vs,
            {tuple(e[i] for i in used): c for e, c in f.terms.items()},
        )

    hilbert: list[int] = []
    bases: list[tuple[Monomial, ...]] = []
    for k in range(d + 1):
        rows = _sparse_catalecticant_rows(f, k)
        red = sparse_rref(list(rows.values()))
        pivots = sorted(red.keys(), key=grlex_key, reverse=True)
        hilbert.append(len(pivots))
        bases.append(tuple(Monomial(e) for e in pivots))

    for k in range(d + 1):
        if hilbert[k] != hilbert[d - k]:
            raise InvariantViolation(
                f"Hilbert symmetry failed: h_{k}={hilbert[k]} vs h_{d-k}={hilbert[d-k]}"
            )
    if hilbert[0] != 1 or hilbert[d] != 1:
        raise InvariantViolation("socle dimensions are not 1")

    if hilbert[1] < f.varset.size:
        warnings.append(
            "degree-one annihilator is nonzero (linear relation among "
            "first partials); algebra kept in the given variables"
        )
    return GradedAlgebra(f, tuple(hilbert), tuple(bases), tuple(warnings))


# -- quadric generation ---------------------------------------------------


@dataclass(frozen=True)
class QuadricsCheck:
    """Outcome of the generated-by-quadrics test.

    ``failing_degrees`` lists every degree k in 3..d+1 where the span of
    (variables * annihilator_{k-1}) is a proper subspace of the degree-k
    annihilator; empty iff ``presented`` (given a zero linear slice).
    """

    presented: bool
    failing_degrees: tuple[int, ...]
    dim_ann2: int
    reason: str | None = None


def ann_generated_by_quadrics(alg: GradedAlgebra) -> QuadricsCheck:
    """Exact degree-by-degree test that the annihilator ideal is
    generated in degrees <= 2."""
    d = alg.socle_degree
    r = alg.varset.size
    dim_ann2 = math.comb(r + 1, 2) - alg.dim(2) if d >= 2 else 0
    if not alg.i1_zero:
        return QuadricsCheck(False, (1,), dim_ann2, "nonzero linear annihilator slice")

    failing: list[int] = []
    for k in range(3, d + 1):
        if not _degree_step_spanned(alg, k):
            failing.append(k)
    if d + 1 >= 3 and not _socle_step_spanned(alg):
        failing.append(d + 1)
    return QuadricsCheck(not failing, tuple(failing), dim_ann2)


def _degree_step_spanned(alg: GradedAlgebra, k: int) -> bool:
    """Does variables * Ann_{k-1} span Ann_k?  (It is always contained.)"""
    r = alg.varset.size
    target = math.comb(r + k - 1, k) - alg.dim(k)
    if target == 0:
        return True
    space = RowSpace()
    count = 0
    for m in alg.ann_basis(k - 1):
        for v in range(r):
            shifted = {}
            for e, c in m.terms.items():
                shifted[e[:v] + (e[v] + 1,) + e[v + 1 :]] = c
            if space.insert(shifted):
                count += 1
                if count == target:
                    return True
    return space.rank == target


def _socle_step_spanned(alg: GradedAlgebra) -> bool:
    """Span condition at degree d+1, dualized.

    variables * Ann_d fills all of Q_{d+1} unless some nonzero g of
    degree d+1 has every partial derivative inside the annihilator's
    perp, which is the line spanned by f.  By the Euler relation such a
    g must be (linear form) * f / (d+1), so the failure is witnessed by
    a nonzero linear form l with l * (each first partial of f) a scalar
    multiple of f.  That is a small exact kernel computation.
    """
    f = alg.f
    r = alg.varset.size
    partials = [f.partial(v) for v in range(r)]
    xs = [Polynomial.variable(alg.varset, name) for name in alg.varset.names]
    # unknowns: l_0..l_{r-1}, lambda_0..lambda_{r-1}
    rows: dict[tuple[int, tuple[int, ...]], dict[int, Fraction]] = {}
    for i in range(r):
        for v in range(r):
            prod = xs[v] * partials[i]
            for e, c in prod.terms.items():
                rows.setdefault((i, e), {})[v] = c
        for e, c in f.terms.items():
            rows.setdefault((i, e), {})[r + i] = -c
    dense = []
    width = 2 * r
    for key in sorted(rows):
        row = [Fraction(0)] * width
        for j, c in rows[key].items():
            row[j] = c
        dense.append(row)
    for vec in kernel_basis(dense, width):
        if any(vec[:r]):
            return False
    return True


# -- bigraded structure ----------------------------------------------------


@dataclass(frozen=True)
class BigradedBasis:
    """Partition of the quotient bases of a bihomogeneous algebra by
    (x-degree, u-degree).  ``pieces[(i, j)]`` lists basis monomials in
    the ambient graded-lex order."""

    bidegree: tuple[int, int]
    pieces: dict

    def dim(self, i: int, j: int) -> int:
        return len(self.pieces.get((i, j), ()))


def bigraded_decomposition(alg: GradedAlgebra) -> BigradedBasis:
    """Split every quotient basis by bidegree.

    Requires a bihomogeneous f over a block-structured VarSet.  The
    monomial quotient bases are automatically compatible with the
    splitting because the catalecticant is block-diagonal across
    bidegrees, so pivot columns drop into well-defined pieces.
    """
    if alg.varset.blocks is None:
        raise ValueError("VarSet has no x/u block structure")
    bd = alg.f.bidegree()
    if bd is None:
        raise ValueError("dual generator is not bihomogeneous")
    d1, d2 = bd
    pieces: dict = {}
    for k in range(alg.socle_degree + 1):
        for m in alg.quotient_basis(k):
            key = m.bidegree(alg.varset)
            pieces.setdefault(key, []).append(m)
    pieces = {key: tuple(val) for key, val in pieces.items()}
    for (i, j), val in pieces.items():
        dual = pieces.get((d1 - i, d2 - j), ())
        if len(dual) != len(val):
            raise InvariantViolation(
                f"bigraded duality failed at piece ({i}, {j})"
            )
    return BigradedBasis((d1, d2), pieces)


def unimodality_check(hilbert: Sequence[int]) -> bool:
    """True iff the vector rises (weakly) to a peak and then falls."""
    rising = True
    for a, b in zip(hilbert, hilbert[1:]):
        if rising:
            if b < a:
                rising = False
        elif b > a:
            return False
    return True

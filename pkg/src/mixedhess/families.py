"""Constructions that produce algebras with prescribed Lefschetz behaviour.

Three building blocks recur:

* multiplying the dual generator by fresh variables.  One new variable
  shifts every annihilator degree up compatibly, so the Hilbert
  function of the lift is the sum of two consecutive values of the
  original; two new variables keep the parity of the socle degree and
  transport a deficient middle Hessian two degrees up;
* bases of small socle degree with certified failures: cubic forms
  whose middle Hessian vanishes identically, and quartic complexes
  whose facet rows satisfy an exact syzygy (see `complexes`);
* forms built from algebraically dependent but linearly independent
  partial data, which force degenerate Hessians in higher degree.

`odd_counterexample` and `even_counterexample` combine these into
families indexed by socle degree and embedding codimension, refusing
out-of-range requests with the attainable values spelled out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .apolarity import (
    GradedAlgebra,
    InvariantViolation,
    ann_generated_by_quadrics,
    build_algebra,
)
from .complexes import (
    Graph,
    NoninjectivityWitness,
    SimplicialComplex,
    dual_generator,
    grid_noninjectivity_witness,
    grow_with_leaves,
    turan_complex,
    without_face,
)
from .config import DEFAULT_CONFIG, SamplingConfig
from .hessians import (
    MixedHessian,
    RankCertificate,
    generic_rank,
    mixed_hessian,
)
from .lefschetz import slp_check
from .linalg import matrix_rank, sparse_rref
from .polyring import (
    Monomial,
    Polynomial,
    VarSet,
    apolar_apply,
    apolar_monomial,
    parse_polynomial,
)


def boolean_form(n: int) -> Polynomial:
    """The product of n distinct variables: its annihilator is the
    squares of the variables, and the algebra has Hilbert function the
    binomial coefficients."""
    if n < 1:
        raise ValueError("need at least one variable")
    vs = VarSet(tuple(f"x{i + 1}" for i in range(n)))
    return Polynomial(vs, {(1,) * n: Fraction(1)})


# -- lifts by fresh variables ------------------------------------------------


@dataclass(frozen=True)
class LiftReport:
    """A lifted generator together with the verifications performed.

    hilbert_identity records whether each dimension of the lift equals
    the sum of the two consecutive dimensions of the base, the
    structural fact the lift relies on.  At the "full" level three more
    findings appear: annihilator_inclusion (base annihilators and the
    square of the new variable kill the lift), annihilator_identity
    (they generate the lift's whole annihilator, checked degree by
    degree as a span equality), and the two inheritance pairs
    (base, lift) for quadric presentation and the strong Lefschetz
    property."""

    polynomial: Polynomial
    added: tuple[str, ...]
    hilbert_base: tuple[int, ...] | None = None
    hilbert_lift: tuple[int, ...] | None = None
    hilbert_identity: bool | None = None
    annihilator_inclusion: bool | None = None
    annihilator_identity: bool | None = None
    quadrics_inherited: tuple[bool, bool] | None = None
    slp_inherited: tuple[bool, bool] | None = None
    notes: tuple[str, ...] = ()


def _fresh_names(vs: VarSet, count: int, stem: str = "z") -> tuple[str, ...]:
    existing = set(vs.names)
    out: list[str] = []
    k = 1
    while len(out) < count:
        cand = f"{stem}{k}"
        if cand not in existing and cand not in out:
            out.append(cand)
        k += 1
    return tuple(out)


def _lifted_annihilator_spans(
    base: GradedAlgebra, lift_alg: GradedAlgebra
) -> bool:
    """Degree-by-degree span equality for the one-variable lift: the
    base annihilators, the square of the new variable, and (first
    degree past the base socle) the pure-base monomials generate an
    ideal whose slice in every degree up to base-socle + 2 has exactly
    the codimension the lift's Hilbert function dictates.

    Together with the inclusion check (each generator annihilates the
    lift) this pins the lift's annihilator down completely in the
    inspected range."""
    d = base.socle_degree
    n = lift_alg.varset.size

    def shift(e: tuple[int, ...], t: int) -> tuple[int, ...]:
        return e[:t] + (e[t] + 1,) + e[t + 1 :]

    def pure_monomials(k: int):
        def rec(prefix: list[int], left: int, pos: int):
            if pos == n - 2:
                yield tuple(prefix + [left, 0])
                return
            for c in range(left, -1, -1):
                yield from rec(prefix + [c], left - c, pos + 1)

        if n == 1:
            return
        yield from rec([], k, 0)

    basis: list[dict] = []
    for k in range(1, d + 3):
        rows = [
            {shift(e, t): c for e, c in row.items()}
            for row in basis
            for t in range(n)
        ]
        for a in base.ann_basis(k) if k <= d else ():
            rows.append({e + (0,): c for e, c in a.terms.items()})
        if k == 2:
            rows.append({(0,) * (n - 1) + (2,): Fraction(1)})
        if k == d + 1:
            rows.extend({e: Fraction(1)} for e in pure_monomials(k))
        reduced = sparse_rref(rows)
        basis = list(reduced.values())
        expected = math.comb(n + k - 1, k) - lift_alg.dim(k)
        if len(basis) != expected:
            return False
    return True


def times_u(
    f: Polynomial,
    name: str | None = None,
    verify: str = "counts",
    config: SamplingConfig = DEFAULT_CONFIG,
    base_algebra: GradedAlgebra | None = None,
) -> LiftReport:
    """Multiply the generator by one fresh variable.

    verify levels: "none" builds only the polynomial; "counts" builds
    both algebras and checks the Hilbert identity h'_k = h_k + h_{k-1};
    "full" additionally establishes that the base annihilator plus the
    square of the new variable generates the lift's annihilator
    (inclusion by direct application, equality by degreewise span
    dimensions), and that quadric presentation and the strong Lefschetz
    property carry over from base to lift.  A failed check raises
    InvariantViolation, since each is a theorem about the construction.
    Block data is dropped: the lift is not bigraded."""
    if verify not in ("none", "counts", "full"):
        raise ValueError(f"unknown verify level {verify!r}")
    if name is None:
        name = _fresh_names(f.varset, 1)[0]
    elif name in f.varset.names:
        raise ValueError(f"variable {name!r} already in use")
    vs = VarSet(f.varset.names + (name,))
    lifted = Polynomial(
        vs, {e + (1,): c for e, c in f.terms.items()}
    )
    if verify == "none":
        return LiftReport(lifted, (name,))

    base = base_algebra if base_algebra is not None else build_algebra(f)
    lift_alg = build_algebra(lifted)
    hb = base.hilbert
    hl = lift_alg.hilbert
    identity = len(hl) == len(hb) + 1 and all(
        hl[k]
        == (hb[k] if k < len(hb) else 0)
        + (hb[k - 1] if 0 <= k - 1 < len(hb) else 0)
        for k in range(len(hl))
    )
    if not identity:
        raise InvariantViolation(
            f"lift Hilbert function {hl} is not the consecutive-sum of {hb}"
        )
    inclusion: bool | None = None
    span_equality: bool | None = None
    quadrics_pair: tuple[bool, bool] | None = None
    slp_pair: tuple[bool, bool] | None = None
    if verify == "full":
        inclusion = True
        square = Polynomial(
            vs, {tuple([0] * (vs.size - 1) + [2]): Fraction(1)}
        )
        if not apolar_apply(square, lifted).is_zero():
            inclusion = False
        for k in range(1, base.socle_degree + 1):
            for a in base.ann_basis(k):
                op = Polynomial(
                    vs, {e + (0,): c for e, c in a.terms.items()}
                )
                if not apolar_apply(op, lifted).is_zero():
                    inclusion = False
        if not inclusion:
            raise InvariantViolation(
                "a base annihilator fails to annihilate the lift"
            )
        span_equality = _lifted_annihilator_spans(base, lift_alg)
        if not span_equality:
            raise InvariantViolation(
                "base annihilators and the new square do not span the "
                "lift's annihilator"
            )
        quadrics_pair = (
            ann_generated_by_quadrics(base).presented,
            ann_generated_by_quadrics(lift_alg).presented,
        )
        if quadrics_pair[0] and not quadrics_pair[1]:
            raise InvariantViolation(
                "quadric presentation was lost by the lift"
            )
        slp_pair = (
            slp_check(base, config).holds,
            slp_check(lift_alg, config).holds,
        )
        if slp_pair[0] and not slp_pair[1]:
            raise InvariantViolation(
                "the strong Lefschetz property was lost by the lift"
            )
    return LiftReport(
        lifted,
        (name,),
        hb,
        hl,
        identity,
        inclusion,
        span_equality,
        quadrics_pair,
        slp_pair,
    )


@dataclass(frozen=True)
class DoubleLiftReport:
    """Two-variable lift with the optional Hessian-deficiency transport.

    The criterion matrix of the base (middle square Hessian for odd
    socle degree, the (q-1, q) Hessian for even) and the corresponding
    matrix of the lift are rank-certified; deficiency is the distance
    below the maximal possible rank."""

    polynomial: Polynomial
    added: tuple[str, ...]
    hilbert_base: tuple[int, ...] | None = None
    hilbert_lift: tuple[int, ...] | None = None
    base_rank: RankCertificate | None = None
    lift_rank: RankCertificate | None = None
    base_deficiency: int | None = None
    lift_deficiency: int | None = None
    deficiency_transported: bool | None = None
    notes: tuple[str, ...] = ()


def _criterion_matrix(alg: GradedAlgebra) -> MixedHessian:
    d = alg.socle_degree
    q, odd = divmod(d, 2)
    return mixed_hessian(alg, q, q) if odd else mixed_hessian(alg, q - 1, q)


def times_uv(
    f: Polynomial,
    verify: str = "counts",
    config: SamplingConfig = DEFAULT_CONFIG,
    deficiency_check: bool = False,
    base_algebra: GradedAlgebra | None = None,
) -> DoubleLiftReport:
    """Multiply the generator by two fresh variables, preserving the
    parity of the socle degree.

    With deficiency_check the property-deciding Hessians of base and
    lift are rank-certified: a base whose matrix sits below maximal
    rank must lift to one that does too, which is the mechanism the
    counterexample families rely on."""
    first = times_u(f, verify=verify, config=config, base_algebra=base_algebra)
    second = times_u(first.polynomial, verify=verify, config=config)
    g = second.polynomial
    added = first.added + second.added

    hb = first.hilbert_base
    hl = second.hilbert_lift
    if not deficiency_check:
        return DoubleLiftReport(g, added, hb, hl)

    base = base_algebra if base_algebra is not None else build_algebra(f)
    lift_alg = build_algebra(g)
    mb = _criterion_matrix(base)
    ml = _criterion_matrix(lift_alg)
    cb = generic_rank(mb, config)
    cl = generic_rank(ml, config)
    db = min(mb.shape) - cb.rank
    dl = min(ml.shape) - cl.rank
    return DoubleLiftReport(
        g,
        added,
        base.hilbert,
        lift_alg.hilbert,
        cb,
        cl,
        db,
        dl,
        (db == 0) or (dl > 0),
    )


# -- forms with forced Hessian degeneration ----------------------------------


@dataclass(frozen=True)
class PerazzoReport:
    """The combined form plus the two rank findings that matter: the
    Jacobian of the ingredient forms (rank below their number signals
    the algebraic dependence the construction needs) and the full
    second-partials matrix of the result (expected degenerate exactly
    then)."""

    polynomial: Polynomial
    linearly_independent: bool
    jacobian_rank: RankCertificate
    algebraic_dependence_expected: bool
    hessian_rank: RankCertificate
    hessian_degenerate: bool
    notes: tuple[str, ...] = ()


def perazzo_form(
    partials: list[Polynomial],
    tail: Polynomial | None = None,
    config: SamplingConfig = DEFAULT_CONFIG,
) -> PerazzoReport:
    """Combine degree-(d-1) forms g_1..g_s in one block of variables
    into sum_i x_i g_i + tail with fresh front variables x_i.

    The construction asks for the g_i to be linearly independent (an
    exact check; violations raise) yet algebraically dependent, which
    is reported through the generic rank of their Jacobian: a rank
    below s is the expected degenerate situation, full rank earns a
    warning note since the resulting Hessian then has no reason to
    degenerate."""
    if len(partials) < 2:
        raise ValueError("need at least two forms")
    uvs = partials[0].varset
    degs = {g.homogeneous_degree() for g in partials}
    if any(g.varset != uvs for g in partials):
        raise ValueError("forms live in different variable sets")
    if len(degs) != 1 or None in degs:
        raise ValueError("forms must be homogeneous of one common degree")
    e = degs.pop()
    if e < 1:
        raise ValueError("forms must have positive degree")
    if tail is not None and not tail.is_zero():
        if tail.varset != uvs or tail.homogeneous_degree() != e + 1:
            raise ValueError(
                "tail must be homogeneous of degree one more, in the same "
                "variables"
            )

    s = len(partials)
    monos = sorted({m for g in partials for m in g.terms})
    coeff_rows = [[g.terms.get(m, Fraction(0)) for m in monos] for g in partials]
    independent = matrix_rank(coeff_rows) == s
    if not independent:
        raise ValueError("the forms are linearly dependent")

    front = tuple(f"x{i + 1}" for i in range(s))
    if set(front) & set(uvs.names):
        front = _fresh_names(uvs, s, stem="x")
    names = front + uvs.names
    blocks = (0,) * s + (1,) * uvs.size
    vs = VarSet(names, blocks)
    terms: dict[tuple[int, ...], Fraction] = {}
    for i, g in enumerate(partials):
        for m, c in g.terms.items():
            key = tuple(
                (1 if j == i else 0) for j in range(s)
            ) + m
            terms[key] = terms.get(key, Fraction(0)) + c
    if tail is not None:
        for m, c in tail.terms.items():
            key = (0,) * s + m
            terms[key] = terms.get(key, Fraction(0)) + c
    f = Polynomial(vs, terms)

    # Jacobian of the g_i in their own variables, wrapped for rank work.
    jac_entries = tuple(
        tuple(g.partial(j) for j in range(uvs.size)) for g in partials
    )
    unit_rows = tuple(
        Monomial(tuple(1 if t == i else 0 for t in range(s)))
        for i in range(s)
    )
    unit_cols = tuple(
        Monomial(tuple(1 if t == j else 0 for t in range(uvs.size)))
        for j in range(uvs.size)
    )
    jac = MixedHessian(
        uvs, jac_entries, unit_rows, unit_cols, "jacobian", (1, e - 1)
    )
    cert = generic_rank(jac, config)
    dependent = cert.rank < s

    # Second-partials matrix of the combined form over every variable,
    # algebra-free so degenerate inputs are reported rather than mangled.
    n = vs.size
    units = tuple(
        Monomial(tuple(1 if t == i else 0 for t in range(n)))
        for i in range(n)
    )
    hess_entries = tuple(
        tuple(
            apolar_monomial(
                tuple(a + b for a, b in zip(units[i].exps, units[j].exps)),
                f,
            )
            for j in range(n)
        )
        for i in range(n)
    )
    hess = MixedHessian(vs, hess_entries, units, units, "hessian", (1, 1))
    hess_cert = generic_rank(hess, config)
    degenerate = hess_cert.rank < n

    notes: list[str] = []
    if not dependent:
        notes.append(
            "the forms appear algebraically independent (full Jacobian "
            "rank), so the combined form need not have a degenerate "
            "Hessian"
        )
    if dependent and not degenerate:
        notes.append(
            "unexpectedly, the Hessian shows full rank although the "
            "Jacobian sampled as degenerate; one of the two rank "
            "certificates is too optimistic"
        )
    return PerazzoReport(
        f, independent, cert, dependent, hess_cert, degenerate, tuple(notes)
    )


# -- counterexample families --------------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    """One algebra from a counterexample family.

    expected_wlp/expected_slp state what the construction guarantees;
    witness carries the exact syzygy certificate when the base is a
    complex with a grid (even socle degrees); quadrics and
    criterion_rank hold the verification results when the member was
    generated with a report (the default), and construction narrates
    the build steps."""

    polynomial: Polynomial
    degree: int
    codimension: int
    base_description: str
    construction: tuple[str, ...]
    expected_wlp: bool
    expected_slp: bool
    witness: NoninjectivityWitness | None = None
    quadrics: bool | None = None
    criterion_rank: RankCertificate | None = None
    notes: tuple[str, ...] = ()


_SQUARE_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3)]
_THETA_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)]


def _cubic_base(r: int) -> tuple[Polynomial, str, list[str]]:
    """A cubic generator in r essential variables whose middle Hessian
    vanishes identically, for every r >= 8."""
    steps: list[str] = []
    if r == 9 or r == 11:
        text = "x1*u1*u2 + x2*u2*u3 + x3*u3*u4 + x4*u4*u1"
        if r == 11:
            text += " + x5*u5*u1"
        text += " + w^2*u1"
        desc = (
            "four-cycle generator plus a squared auxiliary variable"
            + (" and one pendant edge" if r == 11 else "")
        )
        steps.append(f"parsed augmented four-cycle form in {r} variables")
        return parse_polynomial(text), desc, steps
    if r % 2 == 0:
        graph = Graph.on_vertices(4, _SQUARE_EDGES)
        leaves = (r - 8) // 2
        desc = "four-cycle graph"
    else:
        graph = Graph.on_vertices(6, _THETA_EDGES)
        leaves = (r - 13) // 2
        desc = "hexagon with a long diagonal"
    comp = graph.as_complex()
    steps.append(f"built the {desc} ({len(comp.facets)} edges)")
    if leaves:
        comp = grow_with_leaves(comp, leaves)
        steps.append(f"attached {leaves} pendant edge(s)")
        desc += f" with {leaves} pendant edge(s)"
    return dual_generator(comp), desc, steps


def odd_counterexample(
    d: int,
    codim: int,
    config: SamplingConfig = DEFAULT_CONFIG,
    verify: str = "report",
) -> FamilyMember:
    """An algebra of odd socle degree d and the given codimension
    without the weak Lefschetz property.

    Attainable codimensions start at d + 5: the construction multiplies
    a cubic base with identically vanishing middle Hessian (available
    in any number of variables from 8 up) by d - 3 fresh variables,
    each adding one to the codimension.

    verify "report" (the default) checks the defining claims on the
    result: annihilator generated by quadrics and a rank-deficient
    middle Hessian; "counts" checks only the Hilbert bookkeeping of the
    lifts; "none" skips verification."""
    if verify not in ("none", "counts", "report"):
        raise ValueError(f"unknown verify level {verify!r}")
    if d < 3 or d % 2 == 0:
        raise ValueError("socle degree must be odd and at least 3")
    if codim < d + 5:
        raise ValueError(
            f"codimension {codim} is out of range: for socle degree {d} "
            f"the family starts at codimension {d + 5}"
        )
    r = codim - (d - 3)
    f, desc, steps = _cubic_base(r)
    lift_verify = "none" if verify == "none" else "counts"
    for _ in range(d - 3):
        rep = times_u(f, verify=lift_verify, config=config)
        f = rep.polynomial
        steps.append(f"multiplied by fresh variable {rep.added[0]}")
    quadrics: bool | None = None
    criterion: RankCertificate | None = None
    if verify == "report":
        alg = build_algebra(f)
        quadrics = ann_generated_by_quadrics(alg).presented
        if not quadrics:
            raise InvariantViolation(
                "the annihilator needs generators beyond the quadrics, "
                "contradicting the construction"
            )
        matrix = _criterion_matrix(alg)
        criterion = generic_rank(matrix, config)
        full = min(matrix.shape)
        if criterion.rank >= full:
            raise InvariantViolation(
                "the middle Hessian reached full rank, contradicting "
                "the construction"
            )
        steps.append(
            "verified: presented by quadrics, middle Hessian rank "
            f"{criterion.rank} < {full}"
        )
    return FamilyMember(
        f,
        d,
        codim,
        f"cubic base in {r} variables: {desc}",
        tuple(steps),
        expected_wlp=False,
        expected_slp=False,
        quadrics=quadrics,
        criterion_rank=criterion,
    )


def _quartic_base(
    qc: int, config: SamplingConfig
) -> tuple[SimplicialComplex, str, list[str]]:
    steps: list[str] = []
    if qc == 14 or (qc >= 16 and qc % 2 == 0):
        comp = turan_complex((2, 2, 2))
        desc = "three groups of two"
        steps.append("built the complete three-partite complex (2, 2, 2)")
        leaves = (qc - 14) // 2
    else:
        comp = without_face(turan_complex((2, 2, 3)), ("a1", "c3"))
        desc = "groups (2, 2, 3) minus the edge a1-c3"
        steps.append(
            "built the complete three-partite complex (2, 2, 3) and "
            "removed the face {a1, c3}"
        )
        leaves = (qc - 17) // 2
    if leaves:
        comp = grow_with_leaves(comp, leaves)
        steps.append(f"attached {leaves} leaf facet(s)")
        desc += f" with {leaves} leaf facet(s)"
    return comp, desc, steps


def even_counterexample(
    d: int,
    codim: int,
    config: SamplingConfig = DEFAULT_CONFIG,
    verify: str = "report",
) -> FamilyMember:
    """An algebra of even socle degree d >= 4 and the given codimension
    without the weak Lefschetz property.

    The quartic bases are facet algebras carrying an exact syzygy
    certificate (codimension 14, and every codimension from 16 up;
    15 falls in a gap of the construction); each pair of fresh
    variables then raises the socle degree by two and the codimension
    by two, so degree d reaches codimensions 14 + (d-4) and everything
    from 16 + (d-4) upward.

    The grid syzygy on the base is always verified except at verify
    "none".  "report" (the default) additionally rank-certifies the
    step-deciding Hessian of the lifted result when fresh variables
    were added, confirming that the deficiency travelled up the
    chain."""
    if verify not in ("none", "counts", "report"):
        raise ValueError(f"unknown verify level {verify!r}")
    if d < 4 or d % 2:
        raise ValueError("socle degree must be even and at least 4")
    qc = codim - (d - 4)
    if qc < 14 or qc == 15:
        attain = f"{14 + d - 4} or any value from {16 + d - 4} up"
        raise ValueError(
            f"codimension {codim} is out of range for socle degree {d}: "
            f"attainable values are {attain}"
        )
    comp, desc, steps = _quartic_base(qc, config)
    f = dual_generator(comp)
    witness: NoninjectivityWitness | None = None
    base_alg: GradedAlgebra | None = None
    if verify != "none":
        base_alg = build_algebra(f)
        pairs = (("a1", "a2"), ("b1", "b2"), ("c1", "c2"))
        witness = grid_noninjectivity_witness(comp, pairs, config, base_alg)
        if not witness.wlp_excluded:
            raise InvariantViolation(
                "the grid syzygy no longer excludes full rank on this base"
            )
        steps.append(
            "verified the grid syzygy: multiplication A_1 -> A_2 has "
            f"rank at most {witness.step_rank_bound} < "
            f"{witness.step_full_rank} for every linear form"
        )
    lift_verify = "none" if verify == "none" else "counts"
    for _ in range((d - 4) // 2):
        rep = times_uv(
            f, verify=lift_verify, config=config, base_algebra=base_alg
        )
        f = rep.polynomial
        base_alg = None
        steps.append(
            "multiplied by fresh variables " + " and ".join(rep.added)
        )
    criterion: RankCertificate | None = None
    if verify == "report" and d > 4:
        alg = build_algebra(f)
        matrix = _criterion_matrix(alg)
        criterion = generic_rank(matrix, config)
        full = min(matrix.shape)
        if criterion.rank >= full:
            raise InvariantViolation(
                "the step-deciding Hessian of the lift reached full "
                "rank, contradicting the deficiency transport"
            )
        q = d // 2
        steps.append(
            f"verified: rank of the ({q - 1}, {q}) Hessian of the lift "
            f"is {criterion.rank} < {full}"
        )
    return FamilyMember(
        f,
        d,
        codim,
        f"quartic base in {qc} variables: {desc}",
        tuple(steps),
        expected_wlp=False,
        expected_slp=False,
        witness=witness,
        quadrics=None,
        criterion_rank=criterion,
    )


# -- worked examples ----------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    identifier: str
    description: str
    polynomial: Polynomial
    expected: dict


def _four_cycle_form(extra: str = "") -> Polynomial:
    names = ("x1", "x2", "x3", "x4", "u1", "u2", "u3", "u4")
    text = "x1*u1*u2 + x2*u2*u3 + x3*u3*u4 + x4*u4*u1"
    if extra:
        return parse_polynomial(text + extra)
    return parse_polynomial(text, VarSet(names, (0, 0, 0, 0, 1, 1, 1, 1)))


def example_catalog() -> tuple[CatalogEntry, ...]:
    """Worked examples with their expected analysis results, used by
    the command line interface and pinned down in the test suite."""
    entries = [
        CatalogEntry(
            "four-cycle",
            "cubic from the edges of a square: the smallest facet "
            "algebra presented by quadrics whose middle Hessian "
            "vanishes identically",
            _four_cycle_form(),
            {
                "hilbert": (1, 8, 8, 1),
                "codimension": 8,
                "quadrics": True,
                "wlp": False,
                "slp": False,
            },
        ),
        CatalogEntry(
            "determinantal-3x3",
            "cubic from a three-by-three determinant with repeated "
            "entries; matches the four-cycle dimensions with a "
            "different support",
            parse_polynomial(
                "-x0*x5*x7 + x1*x5*x6 + x2*x3*x7 - x2*x4*x6"
            ),
            {
                "hilbert": (1, 8, 8, 1),
                "codimension": 8,
                "quadrics": True,
                "wlp": False,
                "slp": False,
            },
        ),
        CatalogEntry(
            "four-cycle-9",
            "four-cycle cubic plus a squared auxiliary variable: "
            "odd codimension with the same vanishing Hessian",
            _four_cycle_form(" + w^2*u1"),
            {
                "hilbert": (1, 9, 9, 1),
                "codimension": 9,
                "quadrics": True,
                "wlp": False,
                "slp": False,
            },
        ),
        CatalogEntry(
            "four-cycle-11",
            "four-cycle cubic with one pendant edge and a squared "
            "auxiliary variable",
            _four_cycle_form(" + x5*u5*u1 + w^2*u1"),
            {
                "hilbert": (1, 11, 11, 1),
                "codimension": 11,
                "quadrics": True,
                "wlp": False,
                "slp": False,
            },
        ),
        CatalogEntry(
            "boolean-3",
            "product of three variables: annihilator the squares, "
            "all Lefschetz properties hold",
            boolean_form(3),
            {
                "hilbert": (1, 3, 3, 1),
                "codimension": 3,
                "quadrics": True,
                "wlp": True,
                "slp": True,
            },
        ),
        CatalogEntry(
            "boolean-4",
            "product of four variables",
            boolean_form(4),
            {
                "hilbert": (1, 4, 6, 4, 1),
                "codimension": 4,
                "quadrics": True,
                "wlp": True,
                "slp": True,
            },
        ),
        CatalogEntry(
            "boolean-5",
            "product of five variables",
            boolean_form(5),
            {
                "hilbert": (1, 5, 10, 10, 5, 1),
                "codimension": 5,
                "quadrics": True,
                "wlp": True,
                "slp": True,
            },
        ),
        CatalogEntry(
            "turan-222",
            "complete three-partite complex with groups of two: the "
            "smallest quartic facet algebra whose multiplication "
            "A_1 -> A_2 is never injective",
            dual_generator(turan_complex((2, 2, 2))),
            {
                "hilbert": (1, 14, 24, 14, 1),
                "codimension": 14,
                "quadrics": True,
                "wlp": False,
                "slp": False,
            },
        ),
        CatalogEntry(
            "turan-223",
            "complete three-partite complex with groups (2, 2, 3)",
            dual_generator(turan_complex((2, 2, 3))),
            {
                "hilbert": (1, 19, 32, 19, 1),
                "codimension": 19,
                "quadrics": True,
                "wlp": False,
                "slp": False,
            },
        ),
        CatalogEntry(
            "turan-223-cut",
            "groups (2, 2, 3) with one edge removed: odd codimension "
            "while the grid certificate survives",
            dual_generator(
                without_face(turan_complex((2, 2, 3)), ("a1", "c3"))
            ),
            {
                "hilbert": (1, 17, 30, 17, 1),
                "codimension": 17,
                "quadrics": True,
                "wlp": False,
                "slp": False,
            },
        ),
    ]
    return tuple(entries)

"""Weak and strong Lefschetz property checks via Hessian rank criteria.

The decision procedures here rest on two routes to the same rank:

* the *multiplication route* builds the matrix of mu : A_k -> A_l,
  v |-> (power of a linear form) * v, directly from the algebra: apply
  the linear operator repeatedly to each basis monomial's action on the
  dual generator, then read coordinates off the socle pairing;
* the *Hessian route* evaluates a dual mixed Hessian at the point of
  coefficients of the linear form and scales by a factorial.

`generalization_check` verifies entrywise that the two routes agree.
The property checks use the Hessian route for verdicts (it exposes the
generic behaviour as a polynomial matrix) and the multiplication route
to confirm at sampled points; any disagreement raises
InvariantViolation, since it would falsify the underlying identity.

A verdict is *exact* when it is witnessed by a point (positive) or by a
symbolic certificate such as a vanishing determinant (negative), and
*probabilistic* when it relies on sampled ranks alone, in which case
the attached certificates carry failure bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .apolarity import GradedAlgebra, InvariantViolation
from .config import DEFAULT_CONFIG, SamplingConfig
from .hessians import (
    MixedHessian,
    RankCertificate,
    dual_mixed_hessian,
    evaluate_matrix,
    generic_rank,
    mixed_hessian,
    rank_at,
)
from .linalg import matrix_rank
from .polyring import LinearForm, apolar_monomial, apolar_pairing, linear_apply


@dataclass(frozen=True)
class LefschetzVerdict:
    """Outcome of a weak or strong Lefschetz check.

    witness is a linear form certifying a positive verdict (None when
    the property fails or no sampled witness avoided the degeneracy
    f = 0 at its coefficient point).  profile lists the ranks of every
    multiplication step A_i -> A_{i+1} at the reference point, and
    failing_step names the (source, target) degrees responsible for a
    negative verdict.
    """

    property_name: str
    holds: bool
    witness: LinearForm | None
    evidence: tuple[RankCertificate, ...]
    mode: str
    profile: tuple[int, ...] | None
    failing_step: tuple[int, int] | None
    trials: int
    seed: int
    notes: tuple[str, ...] = ()


# -- multiplication route ---------------------------------------------------


def mult_map_matrix(
    alg: GradedAlgebra, k: int, l: int, L: LinearForm
) -> list[list[Fraction]]:
    """Matrix of multiplication by L^(l-k) from A_k to A_l in the chosen
    quotient bases (rows indexed by B_l, columns by B_k).

    Built without Hessians: the operator power is never expanded;
    instead the linear operator is applied l-k times to each basis
    monomial's action on the dual generator, and coordinates in degree
    l are read off the inverse socle pairing.
    """
    d = alg.socle_degree
    if not (0 <= k <= l <= d):
        raise ValueError(f"need 0 <= k <= l <= {d}, got ({k}, {l})")
    if L.varset != alg.f.varset:
        raise ValueError("linear form lives in a different variable set")
    cols_b = alg.quotient_basis(k)
    comp_b = alg.quotient_basis(d - l)
    inv = alg.pairing_inverse(l)
    s = len(alg.quotient_basis(l))
    zero_exps = (0,) * alg.f.varset.size
    columns = []
    for beta in cols_b:
        g = apolar_monomial(beta.exps, alg.f)
        for _ in range(l - k):
            g = linear_apply(L.coeffs, g)
        pair = [apolar_pairing(c.exps, zero_exps, g) for c in comp_b]
        columns.append(
            [
                sum((inv[t][i] * pair[t] for t in range(s)), Fraction(0))
                for i in range(s)
            ]
        )
    return [[columns[j][i] for j in range(len(cols_b))] for i in range(s)]


def rank_profile(alg: GradedAlgebra, L: LinearForm) -> tuple[int, ...]:
    """Ranks of multiplication by L on each step A_i -> A_{i+1}.

    The Gorenstein pairing forces the profile to be palindromic
    (rank at step i equals rank at step d-1-i); a violation would mean
    the algebra data is inconsistent, so it raises rather than returns.
    """
    d = alg.socle_degree
    ranks = []
    for i in range(d):
        m = mult_map_matrix(alg, i, i + 1, L)
        ranks.append(matrix_rank(m) if m and m[0] else 0)
    for i in range(d):
        if ranks[i] != ranks[d - 1 - i]:
            raise InvariantViolation(
                f"rank profile breaks duality at step {i}: {ranks}"
            )
    return tuple(ranks)


def full_profile(alg: GradedAlgebra) -> tuple[int, ...]:
    """The profile a weak Lefschetz element would realize."""
    h = alg.hilbert
    return tuple(min(h[i], h[i + 1]) for i in range(alg.socle_degree))


def generalization_check(
    alg: GradedAlgebra, k: int, l: int, L: LinearForm
) -> dict:
    """Entrywise comparison of the two routes to the matrix of
    multiplication by L^(l-k): the multiplication route against the
    dual mixed Hessian evaluated at the coefficient point and scaled
    by (l-k)!.  Exact arithmetic; returns a small report dict."""
    m = mult_map_matrix(alg, k, l, L)
    dual = dual_mixed_hessian(alg, l, k)
    factor = 1
    for t in range(2, l - k + 1):
        factor *= t
    evaluated = evaluate_matrix(dual, L.perp())
    worst = Fraction(0)
    for i in range(len(m)):
        for j in range(len(m[0]) if m else 0):
            diff = abs(m[i][j] - factor * evaluated[i][j])
            if diff > worst:
                worst = diff
    return {
        "matches": worst == 0,
        "factorial": factor,
        "shape": (len(m), len(m[0]) if m else 0),
        "max_discrepancy": worst,
    }


# -- witness sampling -------------------------------------------------------


def _sample_points(alg: GradedAlgebra, config: SamplingConfig, tag: str):
    """Up to `trials` integer points at which the dual generator does
    not vanish (degenerate draws are re-rolled a bounded number of
    times instead of consuming a trial)."""
    rng = config.rng(tag, alg.socle_degree, alg.hilbert)
    n = alg.f.varset.size
    points = []
    attempts = 0
    limit = 4 * config.trials
    while len(points) < config.trials and attempts < limit:
        attempts += 1
        pt = tuple(
            rng.randint(-config.sample_bound, config.sample_bound)
            for _ in range(n)
        )
        if alg.f.evaluate(pt) != 0:
            points.append(pt)
    return points


def _linear_form(alg: GradedAlgebra, point) -> LinearForm:
    return LinearForm(
        alg.f.varset, tuple(Fraction(c) for c in point)
    )


def _confirm_routes(
    alg: GradedAlgebra, h: MixedHessian, point, step: tuple[int, int]
) -> int:
    """Check at one point that the Hessian-route rank equals the
    multiplication-route rank for the named step, and return it."""
    hess_rank = rank_at(h, point)
    m = mult_map_matrix(alg, step[0], step[1], _linear_form(alg, point))
    mult_rank = matrix_rank(m) if m and m[0] else 0
    if hess_rank != mult_rank:
        raise InvariantViolation(
            f"rank disagreement at step {step}: Hessian route {hess_rank}, "
            f"multiplication route {mult_rank}"
        )
    return hess_rank


# -- property checks --------------------------------------------------------


def wlp_criterion_matrix(alg: GradedAlgebra) -> MixedHessian:
    """The single Hessian whose generic rank decides the weak Lefschetz
    property: order (q, q) for socle degree 2q+1, order (q-1, q) for
    socle degree 2q."""
    d = alg.socle_degree
    q, odd = divmod(d, 2)
    return mixed_hessian(alg, q, q) if odd else mixed_hessian(alg, q - 1, q)


def slp_criterion_matrices(alg: GradedAlgebra) -> tuple[MixedHessian, ...]:
    """The square Hessians of orders (k, k), k = 1..floor(d/2), whose
    determinants decide the strong Lefschetz property."""
    d = alg.socle_degree
    return tuple(mixed_hessian(alg, k, k) for k in range(1, d // 2 + 1))


def wlp_check(
    alg: GradedAlgebra, config: SamplingConfig = DEFAULT_CONFIG
) -> LefschetzVerdict:
    """Decide the weak Lefschetz property.

    Positive verdicts carry a witness linear form, an exact rank
    certificate at its point, and the full multiplication-rank profile
    (checked against the Hilbert function).  Negative verdicts name the
    failing step and attach the generic-rank certificate of the
    criterion matrix; they are exact when the certificate is.
    """
    d = alg.socle_degree
    q, odd = divmod(d, 2)
    step = (q, q + 1) if odd else (q - 1, q)
    h = wlp_criterion_matrix(alg)
    target = min(h.shape)
    notes: list[str] = []

    points = _sample_points(alg, config, "wlp-witness")
    if not points:
        notes.append(
            "no sample point avoided the vanishing locus of the generator"
        )
    for pt in points:
        if rank_at(h, pt) == target:
            witness = _linear_form(alg, pt)
            profile = rank_profile(alg, witness)
            if profile != full_profile(alg):
                raise InvariantViolation(
                    "criterion matrix has full rank at a witness whose "
                    f"multiplication profile {profile} is not full"
                )
            cert = RankCertificate(
                target,
                "exact",
                trials=config.trials,
                sample_bound=config.sample_bound,
                note="full rank witnessed at a sampled point",
            )
            return LefschetzVerdict(
                "WLP", True, witness, (cert,), "exact", profile, None,
                config.trials, config.seed, tuple(notes),
            )

    cert = generic_rank(h, config)
    if cert.rank == target:
        # Generically full although no sampled witness combined full rank
        # with a nonvanishing generator; report without a witness.
        notes.append(
            "criterion matrix is generically of maximal rank but no "
            "sampled point gave both full rank and a nonzero generator "
            "value"
        )
        return LefschetzVerdict(
            "WLP", True, None, (cert,), cert.mode, None, None,
            config.trials, config.seed, tuple(notes),
        )

    profile = None
    if points:
        confirmed = _confirm_routes(alg, h, points[0], step)
        profile = rank_profile(alg, _linear_form(alg, points[0]))
        notes.append(
            f"multiplication route confirms rank {confirmed} at the "
            "first sampled point"
        )
    return LefschetzVerdict(
        "WLP", False, None, (cert,), cert.mode, profile, step,
        config.trials, config.seed, tuple(notes),
    )


def slp_check(
    alg: GradedAlgebra, config: SamplingConfig = DEFAULT_CONFIG
) -> LefschetzVerdict:
    """Decide the strong Lefschetz property.

    Holds exactly when every order-(k, k) Hessian, k up to half the
    socle degree, is generically nonsingular; a witness is a single
    point at which all of them are nonsingular at once and the
    generator does not vanish.
    """
    d = alg.socle_degree
    mats = slp_criterion_matrices(alg)
    notes: list[str] = []
    points = _sample_points(alg, config, "slp-witness")
    if not points:
        notes.append(
            "no sample point avoided the vanishing locus of the generator"
        )

    for pt in points:
        ranks = [rank_at(m, pt) for m in mats]
        if all(r == m.nrows for r, m in zip(ranks, mats)):
            witness = _linear_form(alg, pt)
            evidence = tuple(
                RankCertificate(
                    r,
                    "exact",
                    trials=config.trials,
                    sample_bound=config.sample_bound,
                    note=f"order ({m.orders[0]}, {m.orders[1]}) nonsingular "
                    "at the witness",
                )
                for r, m in zip(ranks, mats)
            )
            profile = rank_profile(alg, witness)
            return LefschetzVerdict(
                "SLP", True, witness, evidence, "exact", profile, None,
                config.trials, config.seed, tuple(notes),
            )

    # No simultaneous witness: find the first order that genuinely fails.
    evidence = []
    for m in mats:
        cert = generic_rank(m, config)
        evidence.append(cert)
        if cert.rank < m.nrows:
            k = m.orders[0]
            if points:
                confirmed = _confirm_routes(alg, m, points[0], (k, d - k))
                notes.append(
                    f"multiplication route confirms rank {confirmed} for "
                    f"order ({k}, {k}) at the first sampled point"
                )
            return LefschetzVerdict(
                "SLP", False, None, tuple(evidence), cert.mode, None,
                (k, d - k), config.trials, config.seed, tuple(notes),
            )

    notes.append(
        "every criterion Hessian is generically nonsingular but no "
        "sampled point witnessed all of them at once"
    )
    mode = (
        "exact"
        if all(c.is_exact for c in evidence)
        else "probabilistic"
    )
    return LefschetzVerdict(
        "SLP", True, None, tuple(evidence), mode, None, None,
        config.trials, config.seed, tuple(notes),
    )

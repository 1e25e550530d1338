"""Command-line front end.

Subcommands:

* ``analyze`` -- read a polynomial file (or stdin) and report Hilbert
  data, quadric presentation, Hessian rank certificates, the rank
  profile, and Lefschetz verdicts;
* ``from-complex`` -- read a complex from JSON, build its generator,
  run the same analysis, and add the combinatorial findings with their
  algebraic cross-checks;
* ``family`` -- generate a member of one of the built-in families and
  report the verification that comes with it;
* ``examples`` -- run the worked-example catalog and compare expected
  against computed properties, exiting nonzero on any mismatch;
* ``mult-map`` -- print the multiplication-map matrix of a power of a
  linear form next to the scaled evaluated dual Hessian and confirm
  they agree.

Reports are JSON by default (``--format text`` for a plain rendering)
and are byte-stable for a fixed input, seed, and configuration.  The
seed defaults to entropy but is always echoed in the report.  Exit
codes: 0 success, 1 property mismatch, 2 input error, 3 violated
internal invariant.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
import tempfile
from fractions import Fraction
from typing import Any, Sequence

from .apolarity import (
    GradedAlgebra,
    InvariantViolation,
    QuadricsCheck,
    ann_generated_by_quadrics,
    build_algebra,
    unimodality_check,
)
from .complexes import (
    Graph,
    SimplicialComplex,
    classify_graph_algebra,
    detect_complete_multipartite,
    dual_generator,
    grid_noninjectivity_witness,
    grid_pairs_for,
    hilbert_from_face_counts,
    alternate_hilbert_closed_form,
    is_facet_connected,
    is_flag,
    presented_by_quadrics_combinatorial,
)
from .config import SamplingConfig
from .families import (
    CatalogEntry,
    boolean_form,
    even_counterexample,
    example_catalog,
    odd_counterexample,
    perazzo_form,
    times_u,
    times_uv,
)
from .hessians import RankCertificate, generic_rank, mixed_hessian
from .lefschetz import (
    LefschetzVerdict,
    full_profile,
    generalization_check,
    mult_map_matrix,
    rank_profile,
    slp_check,
    wlp_check,
)
from .linalg import matrix_rank
from .polyring import (
    LinearForm,
    ParseError,
    Polynomial,
    VarSet,
    format_polynomial,
    parse_polynomial,
)

SCHEMA_VERSION = 1
ALL_CHECKS = ("hilbert", "quadrics", "wlp", "slp", "hessians", "profile")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3


# -- serialization helpers ---------------------------------------------------


def _num(x: Fraction | int) -> int | str:
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _cert_dict(cert: RankCertificate) -> dict[str, Any]:
    return {
        "rank": cert.rank,
        "mode": cert.mode,
        "exact": cert.is_exact,
        "trials": cert.trials,
        "sample_bound": cert.sample_bound,
        "failure_bound": None
        if cert.failure_bound is None
        else _num(cert.failure_bound),
        "note": cert.note,
    }


def _verdict_dict(v: LefschetzVerdict) -> dict[str, Any]:
    return {
        "property": v.property_name,
        "holds": v.holds,
        "mode": v.mode,
        "witness": None
        if v.witness is None
        else [_num(c) for c in v.witness.coeffs],
        "profile": None if v.profile is None else list(v.profile),
        "failing_step": None
        if v.failing_step is None
        else list(v.failing_step),
        "trials": v.trials,
        "seed": v.seed,
        "evidence": [_cert_dict(c) for c in v.evidence],
        "notes": list(v.notes),
    }


def _quadrics_dict(q: QuadricsCheck) -> dict[str, Any]:
    return {
        "presented": q.presented,
        "failing_degrees": list(q.failing_degrees),
        "dim_ann_2": q.dim_ann2,
        "reason": q.reason,
    }


def _matrix_text(rows: Sequence[Sequence[Fraction]]) -> list[list[int | str]]:
    return [[_num(x) for x in row] for row in rows]


# -- output plumbing ---------------------------------------------------------


def _render_text(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key in value:
            sub = value[key]
            if isinstance(sub, (dict, list)) and sub:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(sub, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar_text(sub)}")
    elif isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            lines.append(pad + "[" + ", ".join(_scalar_text(x) for x in value) + "]")
        else:
            for x in value:
                lines.append(f"{pad}-")
                lines.extend(_render_text(x, indent + 1))
    else:
        lines.append(pad + _scalar_text(value))
    return lines


def _scalar_text(x: Any) -> str:
    if x is None:
        return "none"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (dict, list)):
        return "{}" if isinstance(x, dict) else "[]"
    return str(x)


def _emit(report: dict, fmt: str, output: str | None) -> None:
    if fmt == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = "\n".join(_render_text(report)) + "\n"
    if output is None:
        sys.stdout.write(text)
        return
    _atomic_write(output, text)


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-report-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r") as handle:
        return handle.read()


# -- shared analysis ---------------------------------------------------------


def _config_from_args(args: argparse.Namespace) -> SamplingConfig:
    seed = args.seed if args.seed is not None else secrets.randbits(32)
    return SamplingConfig(
        seed=seed,
        trials=args.trials,
        sample_bound=args.sample_bound,
        symbolic_cap=args.symbolic_cap,
    )


def _config_dict(config: SamplingConfig) -> dict[str, Any]:
    return {
        "seed": config.seed,
        "trials": config.trials,
        "sample_bound": config.sample_bound,
        "symbolic_cap": config.symbolic_cap,
    }


def _base_report(command: str, config: SamplingConfig, source: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": source,
        "config": _config_dict(config),
    }


def _profile_at_sample(
    alg: GradedAlgebra, config: SamplingConfig
) -> dict[str, Any]:
    """Rank profile at one seeded random linear form avoiding f = 0."""
    rng = config.rng("cli-profile", alg.socle_degree, alg.hilbert)
    n = alg.varset.size
    for _ in range(4 * config.trials):
        coeffs = tuple(
            Fraction(rng.randint(-config.sample_bound, config.sample_bound))
            for _ in range(n)
        )
        if not any(coeffs):
            continue
        if alg.f.evaluate(coeffs) == 0:
            continue
        L = LinearForm(alg.varset, coeffs)
        return {
            "at_sampled_form": list(rank_profile(alg, L)),
            "maximal": list(full_profile(alg)),
        }
    return {
        "at_sampled_form": None,
        "maximal": list(full_profile(alg)),
        "note": "no sampled form avoided the vanishing locus",
    }


def _analysis_body(
    alg: GradedAlgebra, config: SamplingConfig, checks: Sequence[str]
) -> tuple[dict[str, Any], list[str]]:
    body: dict[str, Any] = {}
    warnings = list(alg.warnings)
    if "hilbert" in checks:
        body["hilbert"] = list(alg.hilbert)
        body["codimension"] = alg.codimension
        body["socle_degree"] = alg.socle_degree
        body["unimodal"] = unimodality_check(alg.hilbert)
    if "quadrics" in checks:
        body["quadrics"] = _quadrics_dict(ann_generated_by_quadrics(alg))
    if "hessians" in checks:
        certs = {}
        for k in range(1, alg.socle_degree // 2 + 1):
            cert = generic_rank(mixed_hessian(alg, k, k), config)
            certs[f"({k}, {k})"] = _cert_dict(cert)
            if not cert.is_exact:
                warnings.append(
                    f"Hessian rank at degree ({k}, {k}) is probabilistic"
                )
        body["hessian_ranks"] = certs
    if "wlp" in checks:
        verdict = wlp_check(alg, config)
        body["wlp"] = _verdict_dict(verdict)
        if verdict.mode != "exact":
            warnings.append("the WLP verdict is probabilistic")
    if "slp" in checks:
        verdict = slp_check(alg, config)
        body["slp"] = _verdict_dict(verdict)
        if verdict.mode != "exact":
            warnings.append("the SLP verdict is probabilistic")
    if "profile" in checks:
        body["profile"] = _profile_at_sample(alg, config)
    return body, warnings


def _parse_checks(text: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    for name in names:
        if name not in ALL_CHECKS:
            raise ValueError(
                f"unknown check {name!r}; available: {', '.join(ALL_CHECKS)}"
            )
    return names or ALL_CHECKS


# -- subcommands --------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    checks = _parse_checks(args.checks)
    text = _read_input(args.path)
    f = parse_polynomial(text)
    if f.homogeneous_degree() is None:
        raise ValueError("the input polynomial is not homogeneous")
    alg = build_algebra(f)
    report = _base_report("analyze", config, args.path)
    report["checks"] = list(checks)
    body, warnings = _analysis_body(alg, config, checks)
    report["result"] = body
    report["warnings"] = warnings
    _emit(report, args.format, args.output)
    return EXIT_OK


def _complex_from_json(text: str) -> SimplicialComplex:
    data = json.loads(text)
    if not isinstance(data, dict) or "facets" not in data:
        raise ValueError('complex JSON must be an object with "facets"')
    facets = data["facets"]
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(isinstance(v, str) for v in f)
        for f in facets
    ):
        raise ValueError('"facets" must be a list of lists of vertex names')
    if "vertices" in data:
        vertices = data["vertices"]
        if not isinstance(vertices, list) or not all(
            isinstance(v, str) for v in vertices
        ):
            raise ValueError('"vertices" must be a list of names')
        order = {v: i for i, v in enumerate(vertices)}
        try:
            sorted_facets = tuple(
                tuple(sorted(f, key=order.__getitem__)) for f in facets
            )
        except KeyError as exc:
            raise ValueError(f"facet uses unknown vertex {exc.args[0]!r}")
        return SimplicialComplex(tuple(vertices), sorted_facets)
    return SimplicialComplex.from_facets(tuple(tuple(f) for f in facets))


def cmd_from_complex(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    checks = _parse_checks(args.checks)
    comp = _complex_from_json(_read_input(args.path))
    report = _base_report("from-complex", config, args.path)
    report["checks"] = list(checks)

    combo: dict[str, Any] = {
        "vertices": len(comp.vertices),
        "facets": len(comp.facets),
        "dimension": comp.dim,
        "pure": comp.is_pure(),
        "face_counts": list(comp.face_counts()),
        "facet_connected": is_facet_connected(comp),
        "flag": is_flag(comp),
        "quadrics_combinatorial": presented_by_quadrics_combinatorial(comp),
    }
    warnings: list[str] = []

    f = dual_generator(comp)
    alg = build_algebra(f)
    body, analysis_warnings = _analysis_body(alg, config, checks)
    warnings.extend(analysis_warnings)

    oracle = hilbert_from_face_counts(comp)
    if oracle != alg.hilbert:
        raise InvariantViolation(
            f"face-count Hilbert {oracle} disagrees with the "
            f"catalecticant ranks {alg.hilbert}"
        )
    combo["hilbert_from_face_counts"] = list(oracle)
    shifted = alternate_hilbert_closed_form(comp)
    combo["hilbert_shifted_closed_form"] = list(shifted)
    if shifted != oracle:
        warnings.append(
            "the shifted closed-form Hilbert values "
            f"{list(shifted)} disagree with the computed function "
            f"{list(oracle)}; the catalecticant computation is the "
            "ground truth and the shifted form is reported unchanged"
        )

    if "quadrics" in checks:
        algebraic = body["quadrics"]["presented"]
        if algebraic != combo["quadrics_combinatorial"]:
            raise InvariantViolation(
                "combinatorial and algebraic quadric-presentation "
                "checks disagree"
            )

    if comp.dim == 1:
        graph = Graph(comp.vertices, comp.facets)
        cls = classify_graph_algebra(graph)
        combo["graph_class"] = cls.value
        if "wlp" in checks and cls.predicts_wlp is not None:
            if body["wlp"]["holds"] != cls.predicts_wlp:
                raise InvariantViolation(
                    f"graph classification {cls.value} disagrees with "
                    "the computed WLP verdict"
                )

    groups = detect_complete_multipartite(comp)
    if groups is not None and comp.dim >= 1:
        combo["multipartite_groups"] = [list(g) for g in groups]
        if all(len(g) >= 2 for g in groups):
            witness = grid_noninjectivity_witness(
                comp, grid_pairs_for(groups), config, alg
            )
            combo["noninjectivity_witness"] = {
                "grid_pairs": [list(p) for p in witness.grid_pairs],
                "block_rank": _cert_dict(witness.block_rank),
                "step": list(witness.step),
                "step_rank_bound": witness.step_rank_bound,
                "step_full_rank": witness.step_full_rank,
                "wlp_excluded": witness.wlp_excluded,
                "notes": list(witness.notes),
            }
    else:
        combo["multipartite_groups"] = None

    report["result"] = {"combinatorial": combo, "algebra": body}
    report["warnings"] = warnings
    _emit(report, args.format, args.output)
    return EXIT_OK


def _family_member_dict(member) -> dict[str, Any]:
    out = {
        "degree": member.degree,
        "codimension": member.codimension,
        "base": member.base_description,
        "construction": list(member.construction),
        "expected_wlp": member.expected_wlp,
        "expected_slp": member.expected_slp,
        "quadrics": member.quadrics,
        "criterion_rank": None
        if member.criterion_rank is None
        else _cert_dict(member.criterion_rank),
        "polynomial": format_polynomial(member.polynomial),
    }
    if member.witness is not None:
        w = member.witness
        out["noninjectivity_witness"] = {
            "grid_pairs": [list(p) for p in w.grid_pairs],
            "block_rank": _cert_dict(w.block_rank),
            "step_rank_bound": w.step_rank_bound,
            "step_full_rank": w.step_full_rank,
            "wlp_excluded": w.wlp_excluded,
        }
    if member.notes:
        out["notes"] = list(member.notes)
    return out


def _parse_form_list(text: str) -> list[Polynomial]:
    chunks = [part.strip() for part in text.split(";") if part.strip()]
    if not chunks:
        raise ValueError("no forms given")
    first_pass = [parse_polynomial(c) for c in chunks]
    names: list[str] = []
    for f in first_pass:
        for name in f.varset.names:
            if name not in names:
                names.append(name)
    merged = VarSet(tuple(names))
    return [parse_polynomial(c, merged) for c in chunks]


def cmd_family(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    report = _base_report("family", config, args.kind)
    result: dict[str, Any]

    if args.kind == "boolean":
        if args.n is None:
            raise ValueError("family boolean needs --n")
        f = boolean_form(args.n)
        alg = build_algebra(f)
        verdict = slp_check(alg, config)
        result = {
            "parameters": {"n": args.n},
            "hilbert": list(alg.hilbert),
            "slp": _verdict_dict(verdict),
            "polynomial": format_polynomial(f),
        }
        poly = f
    elif args.kind in ("odd", "even"):
        if args.d is None or args.codim is None:
            raise ValueError(f"family {args.kind} needs --d and --codim")
        make = odd_counterexample if args.kind == "odd" else even_counterexample
        member = make(args.d, args.codim, config, verify=args.verify)
        result = {"parameters": {"d": args.d, "codim": args.codim}}
        result.update(_family_member_dict(member))
        poly = member.polynomial
    elif args.kind in ("times-u", "times-uv"):
        if args.base is None:
            raise ValueError(f"family {args.kind} needs --base")
        base = parse_polynomial(_read_input(args.base))
        if args.kind == "times-u":
            rep = times_u(base, verify="counts", config=config)
            result = {
                "parameters": {"base": args.base},
                "added": list(rep.added),
                "hilbert_base": list(rep.hilbert_base),
                "hilbert_lift": list(rep.hilbert_lift),
                "hilbert_identity": rep.hilbert_identity,
                "polynomial": format_polynomial(rep.polynomial),
            }
            poly = rep.polynomial
        else:
            rep = times_uv(
                base, verify="counts", config=config, deficiency_check=True
            )
            result = {
                "parameters": {"base": args.base},
                "added": list(rep.added),
                "hilbert_base": list(rep.hilbert_base),
                "hilbert_lift": list(rep.hilbert_lift),
                "base_criterion_rank": _cert_dict(rep.base_rank),
                "lift_criterion_rank": _cert_dict(rep.lift_rank),
                "base_deficiency": rep.base_deficiency,
                "lift_deficiency": rep.lift_deficiency,
                "deficiency_transported": rep.deficiency_transported,
                "polynomial": format_polynomial(rep.polynomial),
            }
            poly = rep.polynomial
    elif args.kind == "perazzo":
        if args.partials is None:
            raise ValueError("family perazzo needs --partials")
        forms = _parse_form_list(args.partials)
        tail = (
            parse_polynomial(args.tail, forms[0].varset)
            if args.tail
            else None
        )
        rep = perazzo_form(forms, tail, config)
        result = {
            "parameters": {"partials": args.partials, "tail": args.tail},
            "linearly_independent": rep.linearly_independent,
            "jacobian_rank": _cert_dict(rep.jacobian_rank),
            "algebraic_dependence_expected": rep.algebraic_dependence_expected,
            "hessian_rank": _cert_dict(rep.hessian_rank),
            "hessian_degenerate": rep.hessian_degenerate,
            "notes": list(rep.notes),
            "polynomial": format_polynomial(rep.polynomial),
        }
        poly = rep.polynomial
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown family kind {args.kind!r}")

    report["result"] = result
    if args.poly_out:
        _atomic_write(args.poly_out, format_polynomial(poly) + "\n")
        report["polynomial_file"] = args.poly_out
    _emit(report, args.format, args.output)
    return EXIT_OK


def _computed_properties(
    entry: CatalogEntry, config: SamplingConfig
) -> dict[str, Any]:
    alg = build_algebra(entry.polynomial)
    return {
        "hilbert": alg.hilbert,
        "codimension": alg.codimension,
        "quadrics": ann_generated_by_quadrics(alg).presented,
        "wlp": wlp_check(alg, config).holds,
        "slp": slp_check(alg, config).holds,
    }


def cmd_examples(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    catalog = example_catalog()
    if args.only is not None:
        catalog = tuple(e for e in catalog if e.identifier == args.only)
        if not catalog:
            known = ", ".join(e.identifier for e in example_catalog())
            raise ValueError(f"unknown example {args.only!r}; known: {known}")
    rows = []
    all_pass = True
    for entry in catalog:
        computed = _computed_properties(entry, config)
        row_pass = all(
            computed[key] == expected
            for key, expected in entry.expected.items()
        )
        all_pass = all_pass and row_pass
        rows.append(
            {
                "id": entry.identifier,
                "description": entry.description,
                "expected": {
                    k: list(v) if isinstance(v, tuple) else v
                    for k, v in sorted(entry.expected.items())
                },
                "computed": {
                    k: list(v) if isinstance(v, tuple) else v
                    for k, v in sorted(computed.items())
                },
                "pass": row_pass,
            }
        )
    report = _base_report(
        "examples", config, args.only if args.only else "catalog"
    )
    report["result"] = {"rows": rows, "all_pass": all_pass}
    report["warnings"] = []
    _emit(report, args.format, args.output)
    return EXIT_OK if all_pass else EXIT_MISMATCH


def cmd_mult_map(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    f = parse_polynomial(_read_input(args.path))
    alg = build_algebra(f)
    coeffs = tuple(
        Fraction(part.strip())
        for part in args.linear.replace(",", " ").split()
    )
    if len(coeffs) != alg.varset.size:
        raise ValueError(
            f"--linear needs {alg.varset.size} coefficients (variables "
            f"{', '.join(alg.varset.names)}), got {len(coeffs)}"
        )
    L = LinearForm(alg.varset, coeffs)
    warnings = []
    if f.evaluate(L.perp()) == 0:
        warnings.append(
            "the generator vanishes at the coefficient point of the "
            "linear form; the comparison is still exact"
        )
    k, l = args.source_degree, args.target_degree
    check = generalization_check(alg, k, l, L)
    matrix = mult_map_matrix(alg, k, l, L)
    rank = matrix_rank(matrix) if matrix and matrix[0] else 0
    report = _base_report("mult-map", config, args.path)
    report["result"] = {
        "k": k,
        "l": l,
        "linear": [_num(c) for c in coeffs],
        "factorial": check["factorial"],
        "mult_map_matrix": _matrix_text(matrix),
        "match": check["matches"],
        "max_discrepancy": _num(check["max_discrepancy"]),
        "shape": list(check["shape"]),
        "rank": rank,
    }
    report["warnings"] = warnings
    _emit(report, args.format, args.output)
    if not check["matches"]:
        raise InvariantViolation(
            "multiplication route and dual Hessian route disagree"
        )
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="RNG seed (default: drawn from entropy, echoed in the report)",
    )
    parser.add_argument(
        "--trials", type=int, default=12, help="sample points per rank check"
    )
    parser.add_argument(
        "--sample-bound",
        type=int,
        default=10**6,
        help="coordinates are drawn from [-bound, bound]",
    )
    parser.add_argument(
        "--symbolic-cap",
        type=int,
        default=12,
        help="largest square size for symbolic determinants",
    )
    parser.add_argument(
        "--format",
        choices=("json", "text"),
        default="json",
        help="report rendering (default json)",
    )
    parser.add_argument(
        "--output",
        default=None,
        help="write the report to this file (atomically) instead of stdout",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedhess",
        description=(
            "Analyze Artinian Gorenstein algebras through mixed Hessians: "
            "Hilbert functions, quadric presentation, Lefschetz properties, "
            "and the simplicial-complex constructions behind them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "analyze", help="analyze a polynomial file ('-' for stdin)"
    )
    p.add_argument("path", help="polynomial file, or - for stdin")
    p.add_argument(
        "--checks",
        default=",".join(ALL_CHECKS),
        help=f"comma-separated subset of: {', '.join(ALL_CHECKS)}",
    )
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(
        "from-complex",
        help="analyze the dual generator of a JSON simplicial complex",
    )
    p.add_argument("path", help="complex JSON file, or - for stdin")
    p.add_argument(
        "--checks",
        default=",".join(ALL_CHECKS),
        help=f"comma-separated subset of: {', '.join(ALL_CHECKS)}",
    )
    _add_common(p)
    p.set_defaults(func=cmd_from_complex)

    p = sub.add_parser("family", help="generate a family member")
    p.add_argument(
        "kind",
        choices=("boolean", "odd", "even", "times-u", "times-uv", "perazzo"),
    )
    p.add_argument("--n", type=int, default=None, help="boolean: variables")
    p.add_argument("--d", type=int, default=None, help="odd/even: socle degree")
    p.add_argument(
        "--codim", type=int, default=None, help="odd/even: codimension"
    )
    p.add_argument(
        "--verify",
        choices=("none", "counts", "report"),
        default="report",
        help="odd/even: verification level (default report)",
    )
    p.add_argument(
        "--base", default=None, help="times-u/times-uv: base polynomial file"
    )
    p.add_argument(
        "--partials",
        default=None,
        help="perazzo: semicolon-separated forms sharing one variable set",
    )
    p.add_argument(
        "--tail", default=None, help="perazzo: optional tail polynomial"
    )
    p.add_argument(
        "--poly-out",
        default=None,
        help="also write the generated polynomial to this file",
    )
    _add_common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser(
        "examples", help="run the worked-example catalog against expectations"
    )
    p.add_argument("--only", default=None, help="run a single catalog entry")
    _add_common(p)
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser(
        "mult-map",
        help="compare the multiplication map against the scaled dual Hessian",
    )
    p.add_argument("path", help="polynomial file, or - for stdin")
    p.add_argument(
        "--from",
        dest="source_degree",
        type=int,
        required=True,
        help="source degree k",
    )
    p.add_argument(
        "--to",
        dest="target_degree",
        type=int,
        required=True,
        help="target degree l (k <= l <= socle degree)",
    )
    p.add_argument(
        "--linear",
        required=True,
        help="coefficients of the linear form, in variable order",
    )
    _add_common(p)
    p.set_defaults(func=cmd_mult_map)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ParseError, ValueError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

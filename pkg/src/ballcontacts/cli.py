"""Command-line front end.

Commands
--------
generate octahedral --k K [--out FILE]     emit a packing as JSON
count --in FILE                            contact counts of a packing
verify-construction --k K                  closed forms vs exhaustive count
bounds --n N [--lattice]                   bound reports as JSON
audit [--format json|csv]                  constant-chain audit
sphere delaunay (--in FILE | --preset P)   triangulation report
sphere preset --name P [--out FILE]        emit a built-in cap configuration
sphere verify (--in FILE | --preset P)     packing-condition check for caps
sphere tables --which 1..5 [--precision D] case tables as CSV
sphere project --in FILE --n I [--out FILE] project the neighbors of ball I

Exit codes: 0 success, 1 verification mismatch or failed audit, 2 invalid
input or arguments. Identical inputs produce byte-identical outputs.
"""

import argparse
import csv
import io
import json
import sys

from .bounds_audit import (
    BoundReport,
    audit_chain,
    construction_lower,
    pairs_upper,
    triplets_quads_upper,
)
from .constructions import (
    MismatchError,
    cuboctahedron_configuration,
    octahedral_packing,
    table6_configuration,
    verify_octahedral,
)
from .contact_graph import DegreeOverflow, count_contacts
from .euclid_core import TolerancePolicy, packing_from_json, packing_to_json
from .serialize import dumps
from .sphere_geom import (
    CapConfiguration,
    assemble_polygons,
    cap_contact_counts,
    caps_from_json,
    caps_to_json,
    classify_triangles,
    delaunay,
    hexagon_lemma_tables,
    pentagon_lemma_table,
    project_neighbors,
    quad_lemma_table,
)

__all__ = ["main"]


def _tolerances(args) -> TolerancePolicy:
    return TolerancePolicy(distance_eps=args.distance_eps,
                           angle_eps=args.angle_eps)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_caps(args, validate: bool) -> CapConfiguration:
    if getattr(args, "preset", None):
        if args.preset == "table6":
            return table6_configuration(args.angle_eps)[0]
        return cuboctahedron_configuration(args.angle_eps)
    return caps_from_json(_read(args.infile), validate=validate,
                          angle_eps=args.angle_eps)


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------

def _cmd_generate(args) -> int:
    packing = octahedral_packing(args.k)
    _emit(packing_to_json(packing), args.out)
    return 0


def _cmd_count(args) -> int:
    packing = packing_from_json(_read(args.infile))
    counts = count_contacts(packing, _tolerances(args))
    doc = {
        "n": packing.n,
        "pairs": counts.pairs,
        "triplets": counts.triplets,
        "quadruples": counts.quadruples,
    }
    _emit(dumps(doc) + "\n", args.out)
    return 0


def _cmd_verify_construction(args) -> int:
    report = verify_octahedral(args.k, _tolerances(args))
    doc = {
        "k": report.k,
        "n": report.n,
        "pairs": report.counts.pairs,
        "triplets": report.counts.triplets,
        "quadruples": report.counts.quadruples,
        "expected_n": report.expected_n,
        "expected_triplets": report.expected_triplets,
        "expected_quadruples": report.expected_quadruples,
        "octahedra": report.octahedra,
        "verified": True,
    }
    _emit(dumps(doc) + "\n", args.out)
    return 0


def _report_doc(r: BoundReport) -> dict:
    return {"name": r.name, "n": r.n, "value": r.value,
            "formula_text": r.formula_text}


def _cmd_bounds(args) -> int:
    n, lattice = args.n, args.lattice
    reports = [pairs_upper(n, lattice)]
    if n >= (2 if lattice else 4):
        tri, quad = triplets_quads_upper(n, lattice)
        suffix = "_lattice" if lattice else ""
        reports.append(BoundReport(
            "triplets_upper" + suffix, n, tri,
            "8n" if lattice else "25n/3"))
        reports.append(BoundReport(
            "quadruples_upper" + suffix, n, quad,
            "2n" if lattice else "11n/4"))
    pl, tl, ql = construction_lower(n)
    reports.append(BoundReport(
        "pairs_lower_construction", n, pl, "6n - 486^(1/3) n^(2/3)"))
    reports.append(BoundReport(
        "triplets_lower_construction", n, tl,
        "8n - 12(3n/2)^(2/3) + 4n^(1/3)"))
    reports.append(BoundReport(
        "quadruples_lower_construction", n, ql,
        "2n - 4(3n/2)^(2/3) + 2n^(1/3)"))
    doc = {"n": n, "lattice": lattice,
           "reports": [_report_doc(r) for r in reports]}
    _emit(dumps(doc) + "\n", args.out)
    return 0


def _cmd_audit(args) -> int:
    results = audit_chain()
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "computed", "expected", "tolerance", "passed"])
        for r in results:
            writer.writerow([
                r.name, f"{r.computed:.10g}", f"{r.expected:.10g}",
                f"{r.tolerance:.10g}", "true" if r.passed else "false",
            ])
        _emit(buf.getvalue(), args.out)
    else:
        doc = {"checks": [
            {"name": r.name, "computed": r.computed, "expected": r.expected,
             "tolerance": r.tolerance, "passed": r.passed}
            for r in results
        ], "all_passed": all(r.passed for r in results)}
        _emit(dumps(doc) + "\n", args.out)
    return 0 if all(r.passed for r in results) else 1


def _cmd_sphere_delaunay(args) -> int:
    config = _load_caps(args, validate=True)
    tri = delaunay(config, _tolerances(args))
    types, hist = classify_triangles(tri, args.angle_eps)
    polys = assemble_polygons(tri, args.angle_eps)
    doc = {
        "n": tri.n,
        "faces": len(tri.triangles),
        "edges": len(tri.edges),
        "type_histogram": {str(r): hist[r] for r in sorted(hist)},
        "triangles": [
            {"i": t.i, "j": t.j, "k": t.k, "a": t.a, "b": t.b, "c": t.c,
             "type": t.rtype}
            for t in tri.triangles
        ],
        "edge_list": [[u, v, length] for u, v, length in tri.edges],
        "polygons": [
            {"triangles": list(p.triangle_indices),
             "boundary": list(p.boundary),
             "class": p.poly_class,
             "types": list(p.types)}
            for p in polys
        ],
    }
    _emit(dumps(doc) + "\n", args.out)
    return 0


def _cmd_sphere_preset(args) -> int:
    if args.name == "table6":
        config, _ = table6_configuration(args.angle_eps)
    else:
        config = cuboctahedron_configuration(args.angle_eps)
    _emit(caps_to_json(config), args.out)
    return 0


def _cmd_sphere_verify(args) -> int:
    config = _load_caps(args, validate=False)
    min_dist = config.min_distance()
    required = 2.0 * config.angular_radius - args.angle_eps
    valid = min_dist >= required
    pairs, triplets = cap_contact_counts(config, args.angle_eps)
    doc = {
        "n": config.n,
        "angular_radius": config.angular_radius,
        "min_distance": min_dist,
        "required_min_distance": 2.0 * config.angular_radius,
        "valid": valid,
        "pairs": pairs,
        "triplets": triplets,
    }
    _emit(dumps(doc) + "\n", args.out)
    return 0 if valid else 1


def _fmt_cell(value, precision: int) -> str:
    if value is None:
        return "-"
    return f"{value:.{precision}f}"


def _cmd_sphere_tables(args) -> int:
    p = args.precision
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    which = args.which
    if which == 1:
        writer.writerow(["Cases", "α", "a", "β"])
        for r in quad_lemma_table():
            writer.writerow([f"({r.case})"] + [
                _fmt_cell(v, p) for v in (r.alpha, r.a, r.beta)])
    elif which == 2:
        writer.writerow(["Cases", "α", "β", "a", "b", "α'", "β'", "ω",
                         "α' + β' + ω"])
        for r in pentagon_lemma_table():
            writer.writerow([f"({r.case})"] + [
                _fmt_cell(v, p)
                for v in (r.alpha, r.beta, r.a, r.b, r.alpha_prime,
                          r.beta_prime, r.omega, r.total)])
    elif which == 3:
        writer.writerow(["α", "β", "γ", "a", "b", "c", "α'", "β'", "ω",
                         "α' + β' + ω"])
        for r in hexagon_lemma_tables()[0]:
            writer.writerow([
                _fmt_cell(v, p)
                for v in (r.alpha, r.beta, r.gamma, r.a, r.b, r.c,
                          r.alpha_prime, r.beta_prime, r.omega, r.total)])
    elif which == 4:
        writer.writerow(["α", "β", "θ", "γ", "a", "b", "c", "α'", "β'",
                         "γ'", "ω", "β' + γ' + ω"])
        for r in hexagon_lemma_tables()[1]:
            writer.writerow([
                _fmt_cell(v, p)
                for v in (r.alpha, r.beta, r.theta, r.gamma, r.a, r.b, r.c,
                          r.alpha_prime, r.beta_prime, r.gamma_prime,
                          r.omega, r.total)])
    else:
        writer.writerow(["α", "β", "θ", "α'", "γ", "a", "b", "c", "γ'",
                         "ω", "γ' + ω"])
        for r in hexagon_lemma_tables()[2]:
            writer.writerow([
                _fmt_cell(v, p)
                for v in (r.alpha, r.beta, r.theta, r.alpha_prime, r.gamma,
                          r.a, r.b, r.c, r.gamma_prime, r.omega, r.total)])
    _emit(buf.getvalue(), args.out)
    return 0


def _cmd_sphere_project(args) -> int:
    packing = packing_from_json(_read(args.infile))
    config = project_neighbors(packing, args.n, _tolerances(args))
    _emit(caps_to_json(config), args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_tolerance_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--distance-eps", type=float, default=1e-9,
                   dest="distance_eps")
    p.add_argument("--angle-eps", type=float, default=1e-9, dest="angle_eps")


def _add_out_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="write to file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballcontacts",
        description="Contact counting for unit-ball packings and "
                    "spherical cap packings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a packing")
    p.add_argument("family", choices=["octahedral"])
    p.add_argument("--k", type=int, required=True)
    _add_out_flag(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("count", help="count contacts of a packing file")
    p.add_argument("--in", dest="infile", required=True)
    _add_tolerance_flags(p)
    _add_out_flag(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify-construction",
                       help="check closed forms against exhaustive counts")
    p.add_argument("--k", type=int, required=True)
    _add_tolerance_flags(p)
    _add_out_flag(p)
    p.set_defaults(func=_cmd_verify_construction)

    p = sub.add_parser("bounds", help="evaluate bound formulas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lattice", action="store_true")
    _add_out_flag(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("audit", help="audit the constant chain")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    _add_out_flag(p)
    p.set_defaults(func=_cmd_audit)

    sphere = sub.add_parser("sphere", help="spherical cap operations")
    ssub = sphere.add_subparsers(dest="subcommand", required=True)

    p = ssub.add_parser("delaunay", help="triangulate cap centers")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--in", dest="infile")
    g.add_argument("--preset", choices=["table6", "cuboctahedron"])
    _add_tolerance_flags(p)
    _add_out_flag(p)
    p.set_defaults(func=_cmd_sphere_delaunay)

    p = ssub.add_parser("preset", help="emit a built-in configuration")
    p.add_argument("--name", choices=["table6", "cuboctahedron"],
                   required=True)
    p.add_argument("--angle-eps", type=float, default=1e-9, dest="angle_eps")
    _add_out_flag(p)
    p.set_defaults(func=_cmd_sphere_preset)

    p = ssub.add_parser("verify", help="check the cap packing condition")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--in", dest="infile")
    g.add_argument("--preset", choices=["table6", "cuboctahedron"])
    _add_tolerance_flags(p)
    _add_out_flag(p)
    p.set_defaults(func=_cmd_sphere_verify)

    p = ssub.add_parser("tables", help="emit a case table as CSV")
    p.add_argument("--which", type=int, choices=[1, 2, 3, 4, 5],
                   required=True)
    p.add_argument("--precision", type=int, default=3)
    _add_out_flag(p)
    p.set_defaults(func=_cmd_sphere_tables)

    p = ssub.add_parser("project",
                        help="project tangent neighbors onto a ball")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--n", type=int, required=True,
                   help="index of the ball to project onto")
    _add_tolerance_flags(p)
    _add_out_flag(p)
    p.set_defaults(func=_cmd_sphere_project)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MismatchError as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return 1
    except (ValueError, DegreeOverflow, IndexError, KeyError,
            json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Recompute every headline number from scratch and print it.

Runs the construction verification for k = 2..8, the five case tables,
the constant audit chain, both cap presets, and the bound sandwich for
the constructed family.  Any mismatch raises, so a clean run is itself
a reproduction certificate.
"""

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ballcontacts.bounds_audit import (
    audit_chain,
    construction_lower,
    pairs_upper,
    triplets_quads_upper,
)
from ballcontacts.cli import main as cli_main
from ballcontacts.constructions import (
    cuboctahedron_configuration,
    table6_report,
    verify_octahedral,
)
from ballcontacts.sphere_geom import (
    assemble_polygons,
    cap_contact_counts,
    case512_chain,
    classify_triangles,
    delaunay,
    regular_polygon_area,
)


def rule(title):
    print()
    print(f"== {title} " + "=" * max(0, 66 - len(title)))


def constructions():
    rule("octahedral construction, k = 2..8")
    print(f"{'k':>2} {'n':>5} {'pairs':>6} {'triplets':>8} "
          f"{'quadruples':>10} {'octahedra':>9}")
    for k in range(2, 9):
        r = verify_octahedral(k)
        print(f"{k:>2} {r.n:>5} {r.counts.pairs:>6} {r.counts.triplets:>8} "
              f"{r.counts.quadruples:>10} {r.octahedra:>9}")


def tables():
    for which in (1, 2, 3, 4, 5):
        rule(f"case table {which}")
        cli_main(["sphere", "tables", "--which", str(which)])


def audit():
    rule("constant audit chain")
    width = max(len(r.name) for r in audit_chain())
    for r in audit_chain():
        print(f"{r.name:<{width}}  computed={r.computed:.10g}  "
              f"expected={r.expected:.10g}  tol={r.tolerance:.1e}  "
              f"{'ok' if r.passed else 'FAIL'}")
    if not all(r.passed for r in audit_chain()):
        raise SystemExit("audit chain failed")


def presets():
    rule("cap packing presets")
    t6 = table6_report()
    for label, config in (("table6", t6.config),
                          ("cuboctahedron", cuboctahedron_configuration())):
        tri = delaunay(config)
        _, hist = classify_triangles(tri)
        polys = assemble_polygons(tri)
        pairs, triplets = cap_contact_counts(config)
        classes = sorted(p.poly_class for p in polys)
        print(f"{label}: n={config.n} min_dist={config.min_distance():.12f} "
              f"pairs={pairs} triplets={triplets}")
        print(f"  faces={len(tri.triangles)} edges={len(tri.edges)} "
              f"types={hist} polygons={classes}")
    print(f"table6 convention: {t6.convention}")


def chain_and_areas():
    rule("case (5) chain and the area budget")
    a, gamma, b = case512_chain()
    print(f"a={a:.12f}  gamma={gamma:.12f}  b={b:.12f}  "
          f"(b > 2*pi/3: {b > 2 * math.pi / 3})")
    t = regular_polygon_area(3)
    q = regular_polygon_area(4)
    total = 12 * t + 4 * q
    print(f"triangle={t:.7f}  square={q:.7f}  12t+4q={total:.6f}  "
          f"4*pi={4 * math.pi:.6f}")


def bounds():
    rule("bound sandwich on the constructed family")
    print(f"{'n':>5} {'lower':>10} {'pairs':>6} {'upper(lattice)':>14} "
          f"{'triplets':>8} {'<=8n':>6} {'quads':>6} {'<=2n':>6}")
    for k in range(2, 9):
        r = verify_octahedral(k)
        n = r.n
        lo, _, _ = construction_lower(n)
        hi = pairs_upper(n, lattice=True).value
        t_cap, q_cap = triplets_quads_upper(n, lattice=True)
        assert lo < r.counts.pairs < hi
        assert r.counts.triplets <= t_cap and r.counts.quadruples <= q_cap
        print(f"{n:>5} {lo:>10.2f} {r.counts.pairs:>6} {hi:>14.2f} "
              f"{r.counts.triplets:>8} {t_cap:>6.0f} "
              f"{r.counts.quadruples:>6} {q_cap:>6.0f}")


if __name__ == "__main__":
    constructions()
    tables()
    audit()
    presets()
    chain_and_areas()
    bounds()
    print()
    print("all reproductions verified")

"""Spherical geometry on S^2 for packings of caps of angular radius pi/6.

Covers the angular metric, the law-of-cosines formula chains behind the
quadrilateral/pentagon/hexagon case tables, spherical areas, Delaunay
triangulation of cap centers (as the convex hull of the unit vectors),
triangle-type classification, assembly of irregular triangles into
polygonal components, and contact counting for cap packings.

Conventions. A cap packing of angular radius pi/6 is equivalent to a point
set with pairwise angular distances >= pi/3. A triangle of the Delaunay
triangulation has type R in {0, 1, 2, 3}, the number of its sides longer
than pi/3; type 0 is the regular triangle of side pi/3.
"""

import itertools
import json
import math
from dataclasses import dataclass, InitVar
from functools import cached_property

from .euclid_core import Packing, TolerancePolicy, Vec3, distance
from .serialize import dumps

__all__ = [
    "THIRD",
    "REGULAR_ANGLE",
    "FORBIDDEN_SET",
    "DomainError",
    "HemisphereDegeneracy",
    "SideTooShort",
    "SpherePoint",
    "CapConfiguration",
    "SphericalTriangle",
    "SphericalTriangulation",
    "PolygonComponent",
    "angular_distance",
    "side_from_apex_angle",
    "base_angle_from_side",
    "opposite_angle",
    "forbidden_distance",
    "QuadRow",
    "PentRow",
    "C6Row",
    "C6PrimeRow",
    "C6DoublePrimeRow",
    "quad_lemma_table",
    "pentagon_lemma_table",
    "hexagon_lemma_tables",
    "case512_chain",
    "regular_polygon_area",
    "delaunay",
    "classify_triangles",
    "assemble_polygons",
    "cap_contact_counts",
    "project_neighbors",
    "caps_to_json",
    "caps_from_json",
]

THIRD = math.pi / 3.0

# Interior angle of the regular spherical triangle of side pi/3.
REGULAR_ANGLE = math.acos(1.0 / 3.0)

# Angle sums around a vertex that would close up with k regular triangles.
FORBIDDEN_SET = tuple(2.0 * math.pi - k * REGULAR_ANGLE for k in (1, 2, 3, 4))


class DomainError(ValueError):
    """An inverse-trig argument left its domain by more than the allowed
    slack: the configuration is genuinely infeasible, not merely rounded."""


class HemisphereDegeneracy(ValueError):
    """The points lie in a closed hemisphere, so the convex hull of the
    unit vectors does not contain the sphere center and no closed Delaunay
    triangulation exists."""


class SideTooShort(ValueError):
    """A triangle side is shorter than pi/3: the input is not a valid
    packing of caps of angular radius pi/6."""


def _clamped_acos(x: float, angle_eps: float) -> float:
    if x > 1.0:
        if x - 1.0 > angle_eps:
            raise DomainError(f"arccos argument {x} exceeds 1 by {x - 1.0}")
        x = 1.0
    elif x < -1.0:
        if -1.0 - x > angle_eps:
            raise DomainError(f"arccos argument {x} below -1 by {-1.0 - x}")
        x = -1.0
    return math.acos(x)


@dataclass(frozen=True)
class SpherePoint:
    """A point of S^2 in polar form: inclination theta from +z, azimuth phi."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (-1e-9 <= self.theta <= math.pi + 1e-9):
            raise ValueError(f"inclination {self.theta} outside [0, pi]")
        if not math.isfinite(self.phi):
            raise ValueError("azimuth must be finite")

    @cached_property
    def unit(self) -> tuple[float, float, float]:
        st = math.sin(self.theta)
        return (st * math.cos(self.phi), st * math.sin(self.phi),
                math.cos(self.theta))

    @classmethod
    def from_unit(cls, x: float, y: float, z: float) -> "SpherePoint":
        n = math.hypot(x, y, z)
        if n < 1e-12:
            raise ValueError("zero vector has no direction")
        return cls(math.acos(max(-1.0, min(1.0, z / n))), math.atan2(y, x))


def angular_distance(p: SpherePoint, q: SpherePoint) -> float:
    """Great-circle distance in [0, pi]."""
    u, v = p.unit, q.unit
    d = u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
    return math.acos(max(-1.0, min(1.0, d)))


@dataclass(frozen=True)
class CapConfiguration:
    """Centers of a packing of spherical caps of common angular radius.

    Validation enforces the packing condition (pairwise angular distance
    >= 2 * angular_radius - angle_eps) and, for the pi/6 case, the hard
    cardinality cap of 12 points. Pass validate=False to bypass.
    """

    points: tuple[SpherePoint, ...]
    angular_radius: float = math.pi / 6.0
    validate: InitVar[bool] = True
    angle_eps: InitVar[float] = 1e-9

    def __post_init__(self, validate: bool, angle_eps: float):
        object.__setattr__(self, "points", tuple(self.points))
        if not (0.0 < self.angular_radius < math.pi / 2.0):
            raise ValueError("angular_radius must lie in (0, pi/2)")
        if not validate:
            return
        pts = self.points
        if abs(self.angular_radius - math.pi / 6.0) <= 1e-9 and len(pts) > 12:
            raise ValueError(
                f"{len(pts)} caps of angular radius pi/6 cannot pack on S^2"
            )
        sep = 2.0 * self.angular_radius - angle_eps
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                d = angular_distance(pts[i], pts[j])
                if d < sep:
                    raise ValueError(
                        f"points {i} and {j} at distance {d} violate the "
                        f"minimum separation {2.0 * self.angular_radius}"
                    )

    @property
    def n(self) -> int:
        return len(self.points)

    def min_distance(self) -> float:
        pts = self.points
        return min(
            (angular_distance(pts[i], pts[j])
             for i in range(len(pts)) for j in range(i + 1, len(pts))),
            default=math.pi,
        )


# ---------------------------------------------------------------------------
# Law-of-cosines building blocks
# ---------------------------------------------------------------------------

def side_from_apex_angle(alpha: float, angle_eps: float = 1e-9) -> float:
    """Side opposite the apex angle alpha in a spherical isosceles triangle
    whose two other sides have length pi/3: arccos((1 + 3 cos alpha) / 4)."""
    if not (0.0 < alpha < 2.0 * math.pi):
        raise ValueError(f"apex angle {alpha} outside (0, 2*pi)")
    return _clamped_acos((1.0 + 3.0 * math.cos(alpha)) / 4.0, angle_eps)


def base_angle_from_side(a: float, angle_eps: float = 1e-9) -> float:
    """Base angle between a side of length pi/3 and the side of length a in
    the same isosceles triangle: arccos((1 - cos a) / (sqrt(3) sin a))."""
    if not (0.0 < a < math.pi):
        raise ValueError(f"side {a} outside (0, pi)")
    return _clamped_acos(
        (1.0 - math.cos(a)) / (math.sqrt(3.0) * math.sin(a)), angle_eps
    )


def opposite_angle(a: float, b: float, c: float, angle_eps: float = 1e-9) -> float:
    """Angle opposite side c in a spherical triangle with sides a, b, c:
    arccos((cos c - cos a cos b) / (sin a sin b)).

    Raises DomainError when no such triangle exists, which is how the
    "not realizable" table rows surface.
    """
    for name, v in (("a", a), ("b", b)):
        if not (0.0 < v < math.pi):
            raise ValueError(f"side {name}={v} outside (0, pi)")
    if not (0.0 < c < math.pi):
        raise ValueError(f"side c={c} outside (0, pi)")
    return _clamped_acos(
        (math.cos(c) - math.cos(a) * math.cos(b)) / (math.sin(a) * math.sin(b)),
        angle_eps,
    )


def forbidden_distance(x: float) -> float:
    """Distance from x to the forbidden angle set {2*pi - k*arccos(1/3)}."""
    return min(abs(x - f) for f in FORBIDDEN_SET)


# ---------------------------------------------------------------------------
# Case tables
# ---------------------------------------------------------------------------

# The two admissible apex angles 2*pi - 4*arccos(1/3) and 2*pi - 3*arccos(1/3).
_ALPHA_SMALL = 2.0 * math.pi - 4.0 * REGULAR_ANGLE
_ALPHA_LARGE = 2.0 * math.pi - 3.0 * REGULAR_ANGLE


@dataclass(frozen=True)
class QuadRow:
    case: int
    alpha: float
    a: float
    beta: float
    feasible: bool               # False when beta < pi/3
    forbidden_dist: float | None  # distance of beta to the forbidden set


@dataclass(frozen=True)
class PentRow:
    case: int
    alpha: float
    beta: float
    a: float
    b: float
    alpha_prime: float
    beta_prime: float
    omega: float
    total: float                 # alpha' + beta' + omega
    forbidden_dist: float


@dataclass(frozen=True)
class C6Row:
    alpha: float
    beta: float
    gamma: float
    a: float
    b: float
    c: float
    alpha_prime: float
    beta_prime: float
    omega: float
    total: float                 # alpha' + beta' + omega
    forbidden_dist: float


@dataclass(frozen=True)
class C6PrimeRow:
    alpha: float
    beta: float
    theta: float
    gamma: float
    a: float
    b: float
    c: float
    feasible: bool               # False when c < pi/3
    alpha_prime: float | None
    beta_prime: float | None
    gamma_prime: float | None
    omega: float | None
    total: float | None          # beta' + gamma' + omega
    forbidden_dist: float | None


@dataclass(frozen=True)
class C6DoublePrimeRow:
    alpha: float
    beta: float
    theta: float
    alpha_prime: float
    gamma: float
    a: float
    b: float
    c: float
    feasible: bool
    gamma_prime: float | None
    omega: float | None
    total: float | None          # gamma' + omega
    forbidden_dist: float | None


def quad_lemma_table() -> list[QuadRow]:
    """Both cases of the quadrilateral analysis.

    A quadrilateral of side pi/3 splits along a diagonal into two type I
    isosceles triangles; alpha is the apex angle of one of them. Case (2)
    is flagged infeasible because the resulting beta falls below pi/3.
    """
    rows = []
    for case, alpha in enumerate((_ALPHA_SMALL, _ALPHA_LARGE), start=1):
        a = side_from_apex_angle(alpha)
        beta = 2.0 * base_angle_from_side(a)
        feasible = beta >= THIRD
        rows.append(
            QuadRow(case, alpha, a, beta, feasible,
                    forbidden_distance(beta) if feasible else None)
        )
    return rows


def pentagon_lemma_table() -> list[PentRow]:
    """The three cases of the pentagon analysis (alpha, beta vary up to
    symmetry); terminal sum is alpha' + beta' + omega."""
    rows = []
    cases = ((_ALPHA_SMALL, _ALPHA_SMALL), (_ALPHA_LARGE, _ALPHA_LARGE),
             (_ALPHA_SMALL, _ALPHA_LARGE))
    for case, (alpha, beta) in enumerate(cases, start=1):
        a = side_from_apex_angle(alpha)
        b = side_from_apex_angle(beta)
        ap = base_angle_from_side(a)
        bp = base_angle_from_side(b)
        om = opposite_angle(a, b, THIRD)
        total = ap + bp + om
        rows.append(PentRow(case, alpha, beta, a, b, ap, bp, om, total,
                            forbidden_distance(total)))
    return rows


def hexagon_lemma_tables() -> tuple[list[C6Row], list[C6PrimeRow], list[C6DoublePrimeRow]]:
    """All rows of the three hexagon case tables.

    The C6 table varies (alpha, beta, gamma) over the two admissible apex
    angles up to symmetry (4 rows). The C6' and C6'' tables vary alpha and
    beta over the admissible apex angles and theta over the four values
    2*pi - k*arccos(1/3), k = 1..4, without symmetry reduction (16 rows
    each); rows where the derived side c falls below pi/3 are marked
    infeasible and carry no angles.
    """
    c6_rows = []
    for alpha, beta, gamma in (
        (_ALPHA_SMALL, _ALPHA_SMALL, _ALPHA_SMALL),
        (_ALPHA_SMALL, _ALPHA_SMALL, _ALPHA_LARGE),
        (_ALPHA_SMALL, _ALPHA_LARGE, _ALPHA_LARGE),
        (_ALPHA_LARGE, _ALPHA_LARGE, _ALPHA_LARGE),
    ):
        a = side_from_apex_angle(alpha)
        b = side_from_apex_angle(beta)
        c = side_from_apex_angle(gamma)
        ap = base_angle_from_side(a)
        bp = base_angle_from_side(b)
        om = opposite_angle(a, b, c)
        total = ap + bp + om
        c6_rows.append(C6Row(alpha, beta, gamma, a, b, c, ap, bp, om, total,
                             forbidden_distance(total)))

    thetas = [2.0 * math.pi - k * REGULAR_ANGLE for k in (4, 3, 2, 1)]
    prime_rows = []
    dprime_rows = []
    for alpha in (_ALPHA_SMALL, _ALPHA_LARGE):
        for beta in (_ALPHA_SMALL, _ALPHA_LARGE):
            for theta in thetas:
                a = side_from_apex_angle(alpha)
                b = side_from_apex_angle(beta)
                ap = base_angle_from_side(a)
                bp = base_angle_from_side(b)
                gamma = theta - ap
                c = side_from_apex_angle(gamma)
                if c < THIRD:
                    prime_rows.append(C6PrimeRow(
                        alpha, beta, theta, gamma, a, b, c, False,
                        None, None, None, None, None, None))
                    dprime_rows.append(C6DoublePrimeRow(
                        alpha, beta, theta, ap, gamma, a, b, c, False,
                        None, None, None, None))
                    continue
                # C6': gamma' at the far end of c, then omega opposite the
                # remaining pi/3 side; terminal sum beta' + gamma' + omega.
                gp = _clamped_acos(
                    (math.cos(a) - math.cos(THIRD) * math.cos(c))
                    / (math.sin(THIRD) * math.sin(c)),
                    1e-9,
                )
                om = opposite_angle(b, c, THIRD)
                total = bp + gp + om
                prime_rows.append(C6PrimeRow(
                    alpha, beta, theta, gamma, a, b, c, True,
                    ap, bp, gp, om, total, forbidden_distance(total)))
                # C6'': gamma' is the base angle for side c and omega pairs
                # b with c across a pi/3 side; terminal sum gamma' + omega.
                gp2 = base_angle_from_side(c)
                om2 = _clamped_acos(
                    (math.cos(b) - math.cos(THIRD) * math.cos(c))
                    / (math.sin(THIRD) * math.sin(c)),
                    1e-9,
                )
                total2 = gp2 + om2
                dprime_rows.append(C6DoublePrimeRow(
                    alpha, beta, theta, ap, gamma, a, b, c, True,
                    gp2, om2, total2, forbidden_distance(total2)))
    return c6_rows, prime_rows, dprime_rows


def case512_chain() -> tuple[float, float, float]:
    """The arithmetic chain of the quadrilateral-between-two-pentagons case.

    Returns (a, gamma, b) where a = arccos((1 + 3 cos(2 arccos(1/3))) / 4),
    gamma closes the wedge next to a, theta = 2*pi - (arccos(1/3) + beta +
    gamma) with beta from the quadrilateral analysis, and b is the implied
    diagonal. The chain certifies b > 2*pi/3.
    """
    a = side_from_apex_angle(2.0 * REGULAR_ANGLE)
    gamma = _clamped_acos(
        (math.cos(THIRD) - math.cos(THIRD) * math.cos(a))
        / (math.sin(THIRD) * math.sin(a)),
        1e-9,
    )
    beta = 2.0 * base_angle_from_side(side_from_apex_angle(_ALPHA_SMALL))
    theta = 2.0 * math.pi - (REGULAR_ANGLE + beta + gamma)
    b = _clamped_acos(
        math.cos(a) / 2.0
        + (math.sqrt(3.0) * math.sin(a) / 2.0) * math.cos(theta),
        1e-9,
    )
    if not b > 2.0 * math.pi / 3.0:
        raise ValueError(f"chain broke: b = {b} is not > 2*pi/3")
    return a, gamma, b


def regular_polygon_area(sides: int) -> float:
    """Spherical area of the regular triangle or quadrilateral of side pi/3."""
    if sides == 3:
        return 6.0 * math.asin(1.0 / math.sqrt(3.0)) - math.pi
    if sides == 4:
        return 8.0 * math.atan(math.sqrt(2.0)) - 2.0 * math.pi
    raise ValueError(f"unsupported polygon with {sides} sides")


# ---------------------------------------------------------------------------
# Delaunay triangulation and classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SphericalTriangle:
    """Triangle (i, j, k) with side lengths opposite each vertex:
    a = d(j,k), b = d(i,k), c = d(i,j); rtype counts sides > pi/3."""

    i: int
    j: int
    k: int
    a: float
    b: float
    c: float
    rtype: int

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    @property
    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def side_of_edge(self, u: int, v: int) -> float:
        pair = {u, v}
        if pair == {self.j, self.k}:
            return self.a
        if pair == {self.i, self.k}:
            return self.b
        if pair == {self.i, self.j}:
            return self.c
        raise KeyError(f"edge ({u}, {v}) not in triangle {self.vertices}")


@dataclass(frozen=True)
class SphericalTriangulation:
    """A closed triangulation of S^2: f = 2N - 4 faces, e = 3(N - 2) edges."""

    n: int
    triangles: tuple[SphericalTriangle, ...]
    edges: tuple[tuple[int, int, float], ...]  # (i, j, length), i < j


def _rtype(sides, angle_eps: float) -> int:
    return sum(1 for s in sides if s > THIRD + angle_eps)


def delaunay(config: CapConfiguration, tol: TolerancePolicy = TolerancePolicy()) -> SphericalTriangulation:
    """Delaunay triangulation of the cap centers on S^2.

    Computed as the boundary of the convex hull of the unit vectors by an
    O(N^4) plane scan, which is entirely adequate for N <= 12 and easy to
    make robust. Cospherical facets (more than 3 hull vertices on one
    plane) are split into triangles by a fan from their lexicographically
    smallest vertex index, a deterministic tie-break. Each triangle of the
    result has an empty open circumcap.

    Raises
    ------
    HemisphereDegeneracy
        If the points lie in a closed hemisphere (hull misses the center).
    ValueError
        If the configuration has fewer than 4 points.
    """
    pts = [p.unit for p in config.points]
    n = len(pts)
    if n < 4:
        raise ValueError(f"need at least 4 points, got {n}")
    eps = tol.distance_eps

    def d3(u, v):
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]

    facets: dict[frozenset, tuple[tuple[float, float, float], float]] = {}
    for i, j, k in itertools.combinations(range(n), 3):
        eij = tuple(pts[j][t] - pts[i][t] for t in range(3))
        eik = tuple(pts[k][t] - pts[i][t] for t in range(3))
        nrm = (
            eij[1] * eik[2] - eij[2] * eik[1],
            eij[2] * eik[0] - eij[0] * eik[2],
            eij[0] * eik[1] - eij[1] * eik[0],
        )
        ln = math.hypot(*nrm)
        if ln < 1e-12:
            continue  # collinear directions
        nrm = (nrm[0] / ln, nrm[1] / ln, nrm[2] / ln)
        off = d3(nrm, pts[i])
        sides = [d3(nrm, p) - off for p in pts]
        if all(s <= eps for s in sides):
            pass
        elif all(s >= -eps for s in sides):
            nrm = (-nrm[0], -nrm[1], -nrm[2])
            off = -off
        else:
            continue
        on = frozenset(m for m in range(n) if abs(d3(nrm, pts[m]) - off) <= eps)
        facets[on] = (nrm, off)

    if not facets:
        raise HemisphereDegeneracy("points do not span a 3-dimensional hull")
    for nrm, off in facets.values():
        if off <= eps:
            raise HemisphereDegeneracy(
                f"hull facet at offset {off} from the center: points lie in "
                "a closed hemisphere"
            )

    dist_cache: dict[tuple[int, int], float] = {}

    def adist(u, v):
        key = (u, v) if u < v else (v, u)
        if key not in dist_cache:
            dist_cache[key] = math.acos(max(-1.0, min(1.0, d3(pts[u], pts[v]))))
        return dist_cache[key]

    tri_keys: set[tuple[int, int, int]] = set()
    for on, (nrm, off) in facets.items():
        idx = sorted(on)
        if len(idx) == 3:
            tri_keys.add(tuple(idx))
            continue
        # order the cospherical facet cyclically, then fan from min index
        centroid = tuple(sum(pts[m][t] for m in idx) / len(idx) for t in range(3))
        u0 = tuple(pts[idx[0]][t] - centroid[t] for t in range(3))
        lu = math.hypot(*u0)
        u0 = (u0[0] / lu, u0[1] / lu, u0[2] / lu)
        w0 = (
            nrm[1] * u0[2] - nrm[2] * u0[1],
            nrm[2] * u0[0] - nrm[0] * u0[2],
            nrm[0] * u0[1] - nrm[1] * u0[0],
        )
        def angle_at(m):
            rel = tuple(pts[m][t] - centroid[t] for t in range(3))
            return math.atan2(d3(rel, w0), d3(rel, u0))
        cyc = sorted(idx, key=angle_at)
        start = cyc.index(min(cyc))
        cyc = cyc[start:] + cyc[:start]
        apex = cyc[0]
        for t in range(1, len(cyc) - 1):
            tri_keys.add(tuple(sorted((apex, cyc[t], cyc[t + 1]))))

    triangles = []
    for i, j, k in sorted(tri_keys):
        a, b, c = adist(j, k), adist(i, k), adist(i, j)
        triangles.append(
            SphericalTriangle(i, j, k, a, b, c, _rtype((a, b, c), tol.angle_eps))
        )
    edge_set = set()
    for t in triangles:
        edge_set |= {(t.i, t.j), (t.i, t.k), (t.j, t.k)}
    edges = tuple((u, v, adist(u, v)) for u, v in sorted(edge_set))
    return SphericalTriangulation(n, tuple(triangles), edges)


def classify_triangles(t: SphericalTriangulation, angle_eps: float = 1e-9) -> tuple[tuple[int, ...], dict[int, int]]:
    """Per-triangle types and their histogram {R: count}.

    Raises SideTooShort if any stored side is below pi/3 - angle_eps.
    """
    types = []
    for tri in t.triangles:
        for s in tri.sides:
            if s < THIRD - angle_eps:
                raise SideTooShort(
                    f"triangle {tri.vertices} has side {s} < pi/3"
                )
        types.append(_rtype(tri.sides, angle_eps))
    hist = {r: 0 for r in range(4)}
    for r in types:
        hist[r] += 1
    return tuple(types), hist


@dataclass(frozen=True)
class PolygonComponent:
    """A maximal union of irregular triangles glued along sides > pi/3.

    poly_class is one of "C4", "C5", "C6", "C6_prime", "C6_double_prime"
    or "OTHER"; types is the sorted tuple of member triangle types. C6'
    and C6'' share the type multiset {I, I, II, II} and are told apart by
    the gluing geometry: in C6' the internal long edges share a common
    vertex (a fan), in C6'' they do not (a zigzag). This fixed convention
    may be mirror to other descriptions of the same two hexagons.
    """

    triangle_indices: tuple[int, ...]
    boundary: tuple[int, ...]
    poly_class: str
    types: tuple[int, ...]


def _boundary_cycle(edge_multiset: dict[tuple[int, int], int]) -> tuple[int, ...]:
    boundary = [e for e, cnt in edge_multiset.items() if cnt == 1]
    if not boundary:
        return ()
    nbr: dict[int, list[int]] = {}
    for u, v in boundary:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    if any(len(vs) != 2 for vs in nbr.values()):
        return ()
    start = min(nbr)
    cycle = [start]
    prev, cur = None, start
    while True:
        a, b = nbr[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > len(boundary):
            return ()
    return tuple(cycle) if len(cycle) == len(boundary) else ()


def assemble_polygons(t: SphericalTriangulation, angle_eps: float = 1e-9) -> list[PolygonComponent]:
    """Group irregular triangles into components glued along long edges.

    Classification by size and type multiset: {I, I} -> C4; {I, I, II} ->
    C5; {I, I, I, III} -> C6; {I, I, II, II} -> C6' when the internal long
    edges share a vertex, else C6''. Anything else is OTHER.
    """
    tris = t.triangles
    irr = [idx for idx, tri in enumerate(tris) if _rtype(tri.sides, angle_eps) > 0]
    if not irr:
        return []

    def long_edges(tri: SphericalTriangle):
        out = []
        for (u, v) in ((tri.j, tri.k), (tri.i, tri.k), (tri.i, tri.j)):
            if tri.side_of_edge(u, v) > THIRD + angle_eps:
                out.append((min(u, v), max(u, v)))
        return out

    owners: dict[tuple[int, int], list[int]] = {}
    for idx in irr:
        for e in long_edges(tris[idx]):
            owners.setdefault(e, []).append(idx)

    parent = {idx: idx for idx in irr}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, members in owners.items():
        for other in members[1:]:
            parent[find(other)] = find(members[0])

    groups: dict[int, list[int]] = {}
    for idx in irr:
        groups.setdefault(find(idx), []).append(idx)

    comps = []
    for members in groups.values():
        members = sorted(members)
        types = tuple(sorted(_rtype(tris[idx].sides, angle_eps) for idx in members))
        internal = [e for e, own in owners.items()
                    if len(own) == 2 and find(own[0]) == find(members[0])]
        edge_count: dict[tuple[int, int], int] = {}
        for idx in members:
            tri = tris[idx]
            for (u, v) in ((tri.j, tri.k), (tri.i, tri.k), (tri.i, tri.j)):
                e = (min(u, v), max(u, v))
                edge_count[e] = edge_count.get(e, 0) + 1
        boundary = _boundary_cycle(edge_count)
        if types == (1, 1):
            cls = "C4"
        elif types == (1, 1, 2):
            cls = "C5"
        elif types == (1, 1, 1, 3):
            cls = "C6"
        elif types == (1, 1, 2, 2) and len(internal) == 3:
            # The dual gluing tree is forced to be the path I-II-II-I (a
            # type I triangle has one long side, a type II has two), so
            # the component is a triangulated hexagon whose three long
            # diagonals are either concurrent (a fan) or not (a strip).
            # The fan matches the formula chain that computes beta' +
            # gamma' + omega and the strip the one computing gamma' +
            # omega, hence the labels.
            shared = set.intersection(*(set(e) for e in internal))
            cls = "C6_prime" if shared else "C6_double_prime"
        else:
            cls = "OTHER"
        comps.append(PolygonComponent(tuple(members), boundary, cls, types))
    comps.sort(key=lambda c: c.triangle_indices)
    return comps


def cap_contact_counts(config: CapConfiguration, angle_eps: float = 1e-9) -> tuple[int, int]:
    """(pairs, triplets): point pairs at angular distance exactly pi/3
    (within angle_eps) and triples with all three distances pi/3."""
    pts = config.points
    n = len(pts)
    touch = [[False] * n for _ in range(n)]
    pairs = 0
    for i in range(n):
        for j in range(i + 1, n):
            if abs(angular_distance(pts[i], pts[j]) - THIRD) <= angle_eps:
                touch[i][j] = touch[j][i] = True
                pairs += 1
    triplets = 0
    for i, j, k in itertools.combinations(range(n), 3):
        if touch[i][j] and touch[i][k] and touch[j][k]:
            triplets += 1
    return pairs, triplets


def project_neighbors(p: Packing, i: int, tol: TolerancePolicy = TolerancePolicy()) -> CapConfiguration:
    """Central projection of the balls tangent to ball i onto its surface.

    Each tangent neighbor j projects to the unit vector (c_j - c_i) / 2,
    and its projected body covers a spherical cap of angular radius pi/6
    around that direction; tangency of the neighbors themselves maps to
    cap centers at angular distance exactly pi/3.
    """
    if not (0 <= i < p.n):
        raise IndexError(f"ball index {i} out of range")
    ci = p.centers[i]
    points = []
    for j, cj in enumerate(p.centers):
        if j == i:
            continue
        if abs(distance(ci, cj) - 2.0) <= tol.distance_eps:
            v = cj - ci
            points.append(SpherePoint.from_unit(v.x, v.y, v.z))
    return CapConfiguration(tuple(points), math.pi / 6.0,
                            angle_eps=tol.angle_eps)


def caps_to_json(config: CapConfiguration) -> str:
    """Serialize a cap configuration to the interchange JSON format."""
    doc = {
        "angular_radius": config.angular_radius,
        "points": [[p.theta, p.phi] for p in config.points],
    }
    return dumps(doc) + "\n"


def caps_from_json(text: str, validate: bool = True, angle_eps: float = 1e-9) -> CapConfiguration:
    """Parse the cap-configuration JSON format."""
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("cap document must be a JSON object")
    radius = doc.get("angular_radius")
    if not isinstance(radius, (int, float)):
        raise ValueError('missing or invalid "angular_radius"')
    raw = doc.get("points")
    if not isinstance(raw, list):
        raise ValueError('missing or invalid "points" array')
    points = []
    for row in raw:
        if not (isinstance(row, list) and len(row) == 2
                and all(isinstance(v, (int, float)) for v in row)):
            raise ValueError(f"invalid point pair: {row!r}")
        points.append(SpherePoint(float(row[0]), float(row[1])))
    return CapConfiguration(tuple(points), float(radius), validate=validate,
                            angle_eps=angle_eps)

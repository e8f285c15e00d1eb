"""Face-centered cubic lattice generation and Voronoi-vector classification.

The FCC lattice is realized as the integer triples (a, b, c) with a + b + c
even, scaled by a single multiplication with sqrt(2). The shortest nonzero
vectors then have length exactly 2 up to one floating-point rounding, which
keeps tangency decisions robust at the default 1e-9 tolerance.
"""

import itertools
import math
from dataclasses import dataclass

from .euclid_core import Vec3

__all__ = [
    "SQRT2",
    "Superbase",
    "VoronoiVectorReport",
    "fcc_superbase",
    "voronoi_candidates",
    "fcc_ball",
    "is_fcc_point",
]

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Superbase:
    """An obtuse superbase v0..v3: the vectors sum to zero, have pairwise
    non-positive inner products, and v1, v2, v3 generate the lattice."""

    v0: Vec3
    v1: Vec3
    v2: Vec3
    v3: Vec3

    def __post_init__(self):
        s = self.v0 + self.v1 + self.v2 + self.v3
        if s.norm() > 1e-9:
            raise ValueError("superbase vectors must sum to zero")
        vs = (self.v0, self.v1, self.v2, self.v3)
        for i in range(4):
            for j in range(i + 1, 4):
                if vs[i].dot(vs[j]) > 1e-9:
                    raise ValueError(
                        f"superbase not obtuse: v{i}.v{j} = {vs[i].dot(vs[j])}"
                    )
        det = self.v1.dot(self.v2.cross(self.v3))
        if abs(det) < 1e-9:
            raise ValueError("v1, v2, v3 must be linearly independent")

    def vectors(self) -> tuple[Vec3, Vec3, Vec3, Vec3]:
        return (self.v0, self.v1, self.v2, self.v3)


@dataclass(frozen=True)
class VoronoiVectorReport:
    """The 14 candidate strict Voronoi vectors of a first-kind lattice,
    with their Euclidean lengths."""

    vectors: tuple[Vec3, ...]
    lengths: tuple[float, ...]
    count_length_two: int

    def __post_init__(self):
        if len(self.vectors) != 14 or len(self.lengths) != 14:
            raise ValueError("expected exactly 14 candidate vectors")


# The 12 shortest FCC vectors in integer coordinates: permutations of
# (+-1, +-1, 0). Scanned in a fixed order so the search is deterministic.
_SHORTEST_INT = sorted(
    {
        tuple(v)
        for ax in range(3)
        for s1 in (1, -1)
        for s2 in (1, -1)
        for v in [
            [
                s1 if t == (ax + 1) % 3 else (s2 if t == (ax + 2) % 3 else 0)
                for t in range(3)
            ]
        ]
    },
    reverse=True,
)


def _det3(u, v, w) -> int:
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def _idot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def fcc_superbase() -> Superbase:
    """Find an obtuse superbase of the FCC lattice by exhaustive search.

    Returns
    -------
    Superbase
        The first (in a fixed scan order) triple of shortest lattice
        vectors v1, v2, v3 with |det| = 2 (so they generate the lattice,
        whose integer-coordinate cell volume is 2) whose completion
        v0 = -(v1 + v2 + v3) makes all pairwise inner products <= 0.

    Notes
    -----
    The obtuse condition genuinely fails for naive sign choices, e.g.
    (1,1,0).(1,0,1) = 1 > 0, so the search is not decorative.
    """
    for c1, c2, c3 in itertools.combinations(_SHORTEST_INT, 3):
        if abs(_det3(c1, c2, c3)) != 2:
            continue
        c0 = tuple(-(c1[t] + c2[t] + c3[t]) for t in range(3))
        quad = (c0, c1, c2, c3)
        if all(
            _idot(quad[i], quad[j]) <= 0
            for i in range(4)
            for j in range(i + 1, 4)
        ):
            v0, v1, v2, v3 = (
                Vec3(x * SQRT2, y * SQRT2, z * SQRT2) for (x, y, z) in quad
            )
            return Superbase(v0, v1, v2, v3)
    raise RuntimeError("no obtuse superbase found; search space exhausted")


def voronoi_candidates(sb: Superbase) -> VoronoiVectorReport:
    """List the 14 candidate strict Voronoi vectors of the superbase.

    These are +-v1, +-(v0+v1), +-(v1+v2), +-(v1+v3), +-(v0+v1+v2),
    +-(v0+v1+v3), +-(v1+v2+v3). For the FCC instance exactly 12 of them
    have length 2 and the remaining 2 are strictly longer.
    """
    v0, v1, v2, v3 = sb.vectors()
    seven = (
        v1,
        v0 + v1,
        v1 + v2,
        v1 + v3,
        v0 + v1 + v2,
        v0 + v1 + v3,
        v1 + v2 + v3,
    )
    vectors = []
    for w in seven:
        vectors.append(w)
        vectors.append(-w)
    lengths = tuple(w.norm() for w in vectors)
    count = sum(1 for ln in lengths if abs(ln - 2.0) <= 1e-9)
    return VoronoiVectorReport(tuple(vectors), lengths, count)


def fcc_ball(radius: float, distance_eps: float = 1e-9) -> list[Vec3]:
    """All FCC lattice points p with |p| <= radius + distance_eps.

    Parameters
    ----------
    radius : float
        Euclidean radius of the enclosing ball, radius >= 0.

    Returns
    -------
    list of Vec3
        Deterministically ordered (lexicographic in integer coordinates);
        contains the origin and is closed under negation.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    bound = radius / SQRT2 + distance_eps
    m = math.floor(bound)
    pts = []
    for x in range(-m, m + 1):
        for y in range(-m, m + 1):
            for z in range(-m, m + 1):
                if (x + y + z) % 2 != 0:
                    continue
                if math.sqrt(x * x + y * y + z * z) <= bound:
                    pts.append(Vec3(x * SQRT2, y * SQRT2, z * SQRT2))
    return pts


def is_fcc_point(p: Vec3, distance_eps: float = 1e-9) -> bool:
    """Membership test: is p an FCC lattice point (to within distance_eps)?"""
    ints = []
    for c in (p.x, p.y, p.z):
        q = c / SQRT2
        r = round(q)
        if abs(q - r) * SQRT2 > distance_eps:
            return False
        ints.append(int(r))
    return sum(ints) % 2 == 0

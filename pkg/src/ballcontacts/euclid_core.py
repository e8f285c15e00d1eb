"""Euclidean 3-space primitives and the unit-ball packing data model.

All lengths are in units where every ball has radius 1, so two balls are
tangent exactly when their centers lie at distance 2. A :class:`Packing`
stores the centers together with an absolute tolerance used both for the
non-overlap check and as the default slack when deciding tangency.
"""

import json
import math
from dataclasses import dataclass, field, InitVar

from .serialize import dumps

__all__ = [
    "Vec3",
    "TolerancePolicy",
    "Packing",
    "distance",
    "validate_packing",
    "packing_to_json",
    "packing_from_json",
]


@dataclass(frozen=True)
class Vec3:
    """A point or vector of E^3 with finite components."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for c in (self.x, self.y, self.z):
            if not math.isfinite(c):
                raise ValueError(f"non-finite component {c!r}")

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def scaled(self, s: float) -> "Vec3":
        return Vec3(self.x * s, self.y * s, self.z * s)

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.hypot(self.x, self.y, self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class TolerancePolicy:
    """Numeric slack shared by all geometric predicates.

    distance_eps is an absolute Euclidean slack; angle_eps an absolute
    angular slack in radians. Both must be strictly positive and < 1e-3.
    """

    distance_eps: float = 1e-9
    angle_eps: float = 1e-9

    def __post_init__(self):
        for name in ("distance_eps", "angle_eps"):
            v = getattr(self, name)
            if not (0.0 < v < 1e-3):
                raise ValueError(f"{name} must lie in (0, 1e-3), got {v!r}")


def distance(a: Vec3, b: Vec3) -> float:
    """Euclidean distance between two points."""
    return math.hypot(a.x - b.x, a.y - b.y, a.z - b.z)


@dataclass(frozen=True)
class Packing:
    """A finite packing of unit balls, given by their centers.

    Parameters
    ----------
    centers : tuple of Vec3
        Ball centers; order is preserved and indices identify balls.
    tolerance : float
        Absolute slack: pairwise center distances must be >= 2 - tolerance.
    validate : bool, keyword-only at construction
        When True (default), construction rejects overlapping or duplicate
        centers. Pass False to build a deliberately invalid packing, e.g.
        to exercise validate_packing.
    """

    centers: tuple[Vec3, ...]
    tolerance: float = 1e-9
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        object.__setattr__(self, "centers", tuple(self.centers))
        if self.tolerance < 0:
            raise ValueError("tolerance must be non-negative")
        if validate:
            bad = validate_packing(self)
            if bad:
                i, j = bad[0]
                d = distance(self.centers[i], self.centers[j])
                raise ValueError(
                    f"{len(bad)} overlapping pair(s); first is ({i}, {j}) "
                    f"at distance {d}"
                )

    @property
    def n(self) -> int:
        return len(self.centers)


def validate_packing(p: Packing) -> list[tuple[int, int]]:
    """Return every unordered index pair closer than 2 - tolerance.

    An empty list certifies a valid packing. Coincident centers are
    reported like any other overlapping pair. The scan is brute force
    O(n^2), which is adequate at the problem sizes this library targets.
    """
    lim = 2.0 - p.tolerance
    out = []
    cs = p.centers
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if distance(cs[i], cs[j]) < lim:
                out.append((i, j))
    return out


def packing_to_json(p: Packing) -> str:
    """Serialize a packing to the interchange JSON format."""
    doc = {
        "radius": 1.0,
        "tolerance": p.tolerance,
        "centers": [[c.x, c.y, c.z] for c in p.centers],
    }
    return dumps(doc) + "\n"


def packing_from_json(text: str, validate: bool = True) -> Packing:
    """Parse the interchange JSON format; radius must equal 1.0."""
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("packing document must be a JSON object")
    radius = doc.get("radius")
    if radius != 1.0:
        raise ValueError(f"radius must equal 1.0, got {radius!r}")
    tolerance = doc.get("tolerance", 1e-9)
    if not isinstance(tolerance, (int, float)):
        raise ValueError("tolerance must be a number")
    raw = doc.get("centers")
    if not isinstance(raw, list):
        raise ValueError('missing or invalid "centers" array')
    centers = []
    for row in raw:
        if not (isinstance(row, list) and len(row) == 3
                and all(isinstance(v, (int, float)) for v in row)):
            raise ValueError(f"invalid center triple: {row!r}")
        centers.append(Vec3(float(row[0]), float(row[1]), float(row[2])))
    return Packing(tuple(centers), float(tolerance), validate=validate)

"""Explicit constructions: the octahedral family of FCC packings and the
two distinguished cap configurations on S^2.

The octahedral packing with parameter k >= 1 consists of the FCC points
inside a regular octahedron of edge 2(k - 1). It realizes

    n(k)  = (2k^3 + k) / 3            balls,
    N3(k) = 4(k - 1)k(4k - 5) / 3     touching triplets,
    N4(k) = 4(k - 2)(k - 1)k / 3      touching quadruples,

together with (k - 1)^3 - (k - 2)(k - 1)k / 3 unit regular octahedra in
the induced cell decomposition. These closed forms are cross-checked
against exhaustive counting by verify_octahedral.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .contact_graph import ContactCounts, count_contacts
from .euclid_core import Packing, TolerancePolicy, Vec3
from .lattice import SQRT2
from .sphere_geom import CapConfiguration, SpherePoint

__all__ = [
    "MismatchError",
    "ConventionError",
    "OctahedralSpec",
    "OctahedralReport",
    "octahedral_packing",
    "octahedra_count",
    "verify_octahedral",
    "Table6Report",
    "table6_configuration",
    "table6_report",
    "cuboctahedron_configuration",
]


class MismatchError(AssertionError):
    """An exhaustive count disagrees with the corresponding closed form."""


class ConventionError(ValueError):
    """Published polar coordinates fail the packing condition under both
    the inclination and the latitude reading of the first angle."""


@dataclass(frozen=True)
class OctahedralSpec:
    """Parameter k together with the predicted counts."""

    k: int
    n_balls: int = field(init=False)
    triplets: int = field(init=False)
    quadruples: int = field(init=False)
    octahedra: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        k = self.k
        object.__setattr__(self, "n_balls", (2 * k**3 + k) // 3)
        object.__setattr__(self, "triplets", 4 * (k - 1) * k * (4 * k - 5) // 3)
        object.__setattr__(self, "quadruples", 4 * (k - 2) * (k - 1) * k // 3)
        object.__setattr__(
            self, "octahedra", (k - 1) ** 3 - (k - 2) * (k - 1) * k // 3
        )


def octahedral_packing(k: int) -> Packing:
    """Unit balls whose centers are the FCC points of a regular octahedron.

    Layer i in [-(k-1), k-1] holds the integer points
    (m + n + s, m - n, i) with s = |i| and m, n in [0, k-1-s], scaled by
    sqrt(2). Layer i is a square grid of (k - s)^2 points, whence

        n(k) = k^2 + 2 * sum_{s=1}^{k-1} (k - s)^2 = (2k^3 + k) / 3.
    """
    spec = OctahedralSpec(k)
    centers = []
    for i in range(-(k - 1), k):
        s = abs(i)
        for m in range(k - s):
            for n in range(k - s):
                centers.append(
                    Vec3((m + n + s) * SQRT2, (m - n) * SQRT2, i * SQRT2)
                )
    packing = Packing(tuple(centers))
    if packing.n != spec.n_balls:
        raise MismatchError(
            f"k={k}: generated {packing.n} centers, expected {spec.n_balls}"
        )
    return packing


def octahedra_count(k: int) -> int:
    """Number of unit regular octahedral cells induced inside the hull.

    The hull is a regular octahedron of edge 2(k - 1); its volume splits
    exactly into the unit octahedra and the N4(k) unit tetrahedra of the
    FCC cell decomposition. With edge-1 cell volumes in ratio 4 : 1 this
    gives the exact identity 4(k - 1)^3 = 4 * octahedra + N4(k), verified
    here in rational arithmetic.
    """
    spec = OctahedralSpec(k)
    total = Fraction(4, 3) * Fraction(k - 1) ** 3
    cells = (
        spec.octahedra * Fraction(4, 3) + spec.quadruples * Fraction(1, 3)
    )
    if total != cells:
        raise MismatchError(
            f"k={k}: volume {total} != cell decomposition {cells}"
        )
    return spec.octahedra


@dataclass(frozen=True)
class OctahedralReport:
    """Outcome of an exhaustive re-count of an octahedral packing."""

    k: int
    n: int
    counts: ContactCounts
    expected_n: int
    expected_triplets: int
    expected_quadruples: int
    octahedra: int


def verify_octahedral(k: int, tol: TolerancePolicy = TolerancePolicy()) -> OctahedralReport:
    """Count touching pairs, triplets and quadruples of the octahedral
    packing exhaustively and compare with the closed forms.

    Raises MismatchError on the first disagreement.
    """
    spec = OctahedralSpec(k)
    packing = octahedral_packing(k)
    counts = count_contacts(packing, tol)
    if counts.triplets != spec.triplets:
        raise MismatchError(
            f"k={k}: counted {counts.triplets} triplets, "
            f"closed form gives {spec.triplets}"
        )
    if counts.quadruples != spec.quadruples:
        raise MismatchError(
            f"k={k}: counted {counts.quadruples} quadruples, "
            f"closed form gives {spec.quadruples}"
        )
    return OctahedralReport(
        k=k,
        n=packing.n,
        counts=counts,
        expected_n=spec.n_balls,
        expected_triplets=spec.triplets,
        expected_quadruples=spec.quadruples,
        octahedra=octahedra_count(k),
    )


# ---------------------------------------------------------------------------
# Distinguished cap configurations
# ---------------------------------------------------------------------------

def _table6_polar() -> list[tuple[float, float]]:
    """The published polar coordinates (first angle, azimuth) of the
    12-point configuration whose contact graph has 21 edges."""
    A = math.acos(1.0 / 3.0)
    s2 = math.sqrt(2.0)
    rows = [(0.0, 0.0)]
    rows += [(math.pi / 3.0, k * A) for k in range(5)]
    rows += [
        (math.acos(-7.0 / 18.0), -math.atan(2.0 * s2 / 5.0)),
        (2.0 * math.atan(s2), A / 2.0),
        (math.acos(-7.0 / 18.0), math.pi - math.atan(34.0 * s2 / 19.0)),
        (2.0 * math.atan(s2), 5.0 * A / 2.0),
        (2.0 * math.atan(s2), 7.0 * A / 2.0),
        (math.acos(-53.0 / 54.0), math.atan(4.0 * s2 / 17.0)),
    ]
    return rows


def table6_configuration(angle_eps: float = 1e-9) -> tuple[CapConfiguration, str]:
    """The 12-cap configuration from the published coordinate table.

    The first polar angle is read as inclination from the +z axis; if the
    packing condition failed under that reading, latitude from the equator
    would be tried instead, and ConventionError raised if neither works.
    The inclination reading validates with minimum distance pi/3 up to
    rounding, so the fallback is never exercised.
    """
    rows = _table6_polar()
    try:
        config = CapConfiguration(
            tuple(SpherePoint(t, p) for t, p in rows),
            math.pi / 6.0,
            angle_eps=angle_eps,
        )
        return config, "inclination"
    except ValueError:
        pass
    try:
        config = CapConfiguration(
            tuple(SpherePoint(math.pi / 2.0 - t, p) for t, p in rows),
            math.pi / 6.0,
            angle_eps=angle_eps,
        )
        return config, "latitude"
    except ValueError:
        raise ConventionError(
            "12-point coordinate table validates under neither the "
            "inclination nor the latitude convention"
        ) from None


@dataclass(frozen=True)
class Table6Report:
    config: CapConfiguration
    convention: str
    min_distance: float


def table6_report(angle_eps: float = 1e-9) -> Table6Report:
    config, convention = table6_configuration(angle_eps)
    return Table6Report(config, convention, config.min_distance())


def cuboctahedron_configuration(angle_eps: float = 1e-9) -> CapConfiguration:
    """The 12 cap centers induced at a ball of the FCC lattice: the unit
    vectors toward the 12 shell neighbors, i.e. the vertices of a
    cuboctahedron (all permutations of (+-1, +-1, 0) / sqrt(2))."""
    points = []
    for axis in range(3):
        for s1 in (1.0, -1.0):
            for s2 in (1.0, -1.0):
                coords = [0.0, 0.0, 0.0]
                coords[axis] = 0.0
                other = [t for t in range(3) if t != axis]
                coords[other[0]] = s1 / SQRT2
                coords[other[1]] = s2 / SQRT2
                points.append(SpherePoint.from_unit(*coords))
    return CapConfiguration(tuple(points), math.pi / 6.0,
                            angle_eps=angle_eps)

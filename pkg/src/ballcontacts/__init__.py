"""Contact numbers for unit-ball packings and pi/6 cap packings on S^2."""

from .bounds_audit import (
    AuditResult,
    BoundReport,
    ProofParams,
    audit_chain,
    construction_lower,
    final_bound_inequality,
    high_dim_pairs_upper,
    pairs_upper,
    triplets_quads_upper,
)
from .constructions import (
    ConventionError,
    MismatchError,
    OctahedralReport,
    OctahedralSpec,
    cuboctahedron_configuration,
    octahedra_count,
    octahedral_packing,
    table6_configuration,
    table6_report,
    verify_octahedral,
)
from .contact_graph import (
    KISSING_NUMBER,
    ContactCounts,
    ContactGraph,
    DegreeOverflow,
    build_contact_graph,
    count_contacts,
    count_k4,
    count_triangles,
    per_vertex_triangle_max,
)
from .euclid_core import (
    Packing,
    TolerancePolicy,
    Vec3,
    distance,
    packing_from_json,
    packing_to_json,
    validate_packing,
)
from .lattice import (
    SQRT2,
    Superbase,
    VoronoiVectorReport,
    fcc_ball,
    fcc_superbase,
    is_fcc_point,
    voronoi_candidates,
)
from .sphere_geom import (
    FORBIDDEN_SET,
    REGULAR_ANGLE,
    CapConfiguration,
    DomainError,
    HemisphereDegeneracy,
    PolygonComponent,
    SideTooShort,
    SpherePoint,
    SphericalTriangle,
    SphericalTriangulation,
    angular_distance,
    assemble_polygons,
    base_angle_from_side,
    cap_contact_counts,
    caps_from_json,
    caps_to_json,
    case512_chain,
    classify_triangles,
    delaunay,
    forbidden_distance,
    hexagon_lemma_tables,
    opposite_angle,
    pentagon_lemma_table,
    project_neighbors,
    quad_lemma_table,
    regular_polygon_area,
    side_from_apex_angle,
)

__version__ = "0.1.0"

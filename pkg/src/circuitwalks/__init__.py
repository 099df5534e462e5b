"""Exact-arithmetic analysis of circuit walks on polytopes.

The package enumerates vertices, edges, 2-faces and circuits of a
polyhedron given by inequalities, certifies short circuit walks between
vertices (in particular between the two apices of a spindle), classifies
the orientations a linear objective can induce on the skeleton, and
replays a recorded suite of claims about the four bundled datasets.

All arithmetic is rational and exact; no floating point enters any
certificate.
"""

from .cache import ResultCache, cache_get, cache_key, cache_put, default_cache_dir
from .circuits import (
    Circuit,
    circuits_csv,
    enumerate_circuits,
    is_circuit_direction,
    seed_circuits,
    sign_compatible,
    signed_circuit_count,
)
from .datasets import BUNDLED, bundled_text, load
from .faceanalysis import (
    BatteryResult,
    CfvResult,
    FaceAnalysisError,
    FaceScanEntry,
    FaceScanReport,
    certificate_path_labels,
    cfv,
    circuit_length_upper_via_face,
    claim_star_battery,
    face_scan_csv,
    face_scan_json,
    face_scan_rows,
    non_edge_step_count,
    normalize_signed_dir,
    scan_2faces_with_apex,
    two_step_on_face,
)
from .harness import (
    CASES,
    CaseReport,
    ClaimResult,
    cached_circuits,
    cached_graph,
    claims_for,
    claims_manifest,
    verify_case,
)
from .hrep import (
    Cone,
    HRep,
    HRepError,
    HRepParseError,
    apply_linear_map,
    cone_contains,
    cone_extreme_rays,
    cone_lineality,
    feasible_cone_at,
    hrep_equivalent,
    int_positive_scale,
    is_bounded,
    parse_hrep,
    recession_extreme_rays,
    wedge_over_facet,
    write_hrep,
)
from .orientations import (
    ClassifyReport,
    Digraph,
    EdgeArrangement,
    OrientationError,
    OrientationRegion,
    arrangement_from_normals,
    build_edge_arrangement,
    classify_regions,
    digraph_dot,
    edge_direction_matroid_uniform,
    enumerate_regions,
    hamming_distance,
    is_acyclic,
    monotone_edge_diameter,
    orient_graph,
    region_of_objective,
    region_report_csv,
    region_report_json,
    sigma_string,
)
from .vertexgraph import (
    Face2,
    PolyGraph,
    Vertex,
    adjacency_graph,
    detect_spindle,
    enumerate_2faces,
    enumerate_vertices,
    face_by_labels,
    graph_distance,
    graph_distances_from,
    graph_dot,
    graph_from_points,
    is_facet_defining,
    shortest_path,
    spindle_apices,
    vertex_csv,
)
from .walks import (
    BlockedStepError,
    UnboundedDirectionError,
    ValidationReport,
    WalkCertificate,
    WalkError,
    WalkStep,
    antiblocking_walk,
    bounded_depth_search,
    containment_spindle_walk,
    delta0_upper,
    direct_step,
    is_antiblocking,
    normalize_signed,
    one_step_reach,
    same_cone_spindle_walk,
    take_step,
    triple_span_excludes,
    two_step_reachable,
    validate_walk,
    walk_from_json,
    walk_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "BUNDLED",
    "BatteryResult",
    "BlockedStepError",
    "CASES",
    "CaseReport",
    "CfvResult",
    "Cone",
    "Circuit",
    "ClaimResult",
    "ClassifyReport",
    "Digraph",
    "EdgeArrangement",
    "Face2",
    "FaceAnalysisError",
    "FaceScanEntry",
    "FaceScanReport",
    "HRep",
    "HRepError",
    "HRepParseError",
    "OrientationError",
    "OrientationRegion",
    "PolyGraph",
    "ResultCache",
    "UnboundedDirectionError",
    "ValidationReport",
    "Vertex",
    "WalkCertificate",
    "WalkError",
    "WalkStep",
    "adjacency_graph",
    "antiblocking_walk",
    "apply_linear_map",
    "arrangement_from_normals",
    "bounded_depth_search",
    "build_edge_arrangement",
    "bundled_text",
    "cache_get",
    "cache_key",
    "cache_put",
    "cached_circuits",
    "cached_graph",
    "certificate_path_labels",
    "cfv",
    "circuit_length_upper_via_face",
    "circuits_csv",
    "claim_star_battery",
    "claims_for",
    "claims_manifest",
    "cone_contains",
    "cone_extreme_rays",
    "cone_lineality",
    "classify_regions",
    "containment_spindle_walk",
    "default_cache_dir",
    "delta0_upper",
    "detect_spindle",
    "digraph_dot",
    "direct_step",
    "edge_direction_matroid_uniform",
    "enumerate_2faces",
    "enumerate_circuits",
    "enumerate_regions",
    "enumerate_vertices",
    "face_by_labels",
    "face_scan_csv",
    "face_scan_json",
    "face_scan_rows",
    "feasible_cone_at",
    "graph_distance",
    "graph_distances_from",
    "graph_dot",
    "graph_from_points",
    "hamming_distance",
    "hrep_equivalent",
    "int_positive_scale",
    "is_acyclic",
    "is_antiblocking",
    "is_bounded",
    "is_circuit_direction",
    "is_facet_defining",
    "load",
    "monotone_edge_diameter",
    "non_edge_step_count",
    "normalize_signed",
    "normalize_signed_dir",
    "one_step_reach",
    "orient_graph",
    "parse_hrep",
    "recession_extreme_rays",
    "region_of_objective",
    "region_report_csv",
    "region_report_json",
    "same_cone_spindle_walk",
    "scan_2faces_with_apex",
    "seed_circuits",
    "shortest_path",
    "sigma_string",
    "sign_compatible",
    "signed_circuit_count",
    "spindle_apices",
    "take_step",
    "triple_span_excludes",
    "two_step_on_face",
    "two_step_reachable",
    "validate_walk",
    "verify_case",
    "vertex_csv",
    "walk_from_json",
    "walk_to_json",
    "wedge_over_facet",
    "write_hrep",
]

import json
import random

import pytest

from circuitwalks import (
    FaceAnalysisError,
    adjacency_graph,
    certificate_path_labels,
    cfv,
    circuit_length_upper_via_face,
    claim_star_battery,
    enumerate_2faces,
    face_by_labels,
    face_scan_csv,
    face_scan_json,
    face_scan_rows,
    is_bounded,
    non_edge_step_count,
    normalize_signed_dir,
    scan_2faces_with_apex,
    two_step_on_face,
    validate_walk,
)
from propsuites import _mk_hrep, _random_bounded_polytope


def cube():
    return _mk_hrep(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)],
        [1, 0, 1, 0, 1, 0],
    )


def test_normalize_signed_dir():
    assert normalize_signed_dir((2, -4)) == (1, -2)
    assert normalize_signed_dir((-2, 4)) == (-1, 2)
    with pytest.raises(FaceAnalysisError):
        normalize_signed_dir((0, 0))


def test_cfv_on_cube_top_face_corner():
    p = cube()
    g = adjacency_graph(p)
    face = face_by_labels(p, ["5"])  # the z = 1 square
    corner = g.index_of_point((0, 0, 1))
    res = cfv(p, face, [corner])
    assert set(res.dropped) == {"2", "4", "5"}
    assert set(res.retained) == {"1", "3"}
    assert res.unbounded
    assert set(res.recession_rays_ambient()) == {(-1, 0, 0), (0, -1, 0)}
    assert res.lineality_ambient() == ()


def test_cfv_with_two_opposite_corners_drops_everything():
    p = cube()
    g = adjacency_graph(p)
    face = face_by_labels(p, ["5"])
    a = g.index_of_point((0, 0, 1))
    b = g.index_of_point((1, 1, 1))
    res = cfv(p, face, [a, b])
    assert res.retained == ()
    assert res.unbounded
    assert len(res.lineality_ambient()) == 2


def test_cfv_requires_face_vertices():
    p = cube()
    g = adjacency_graph(p)
    face = face_by_labels(p, ["5"])
    bottom = g.index_of_point((0, 0, 0))
    with pytest.raises(FaceAnalysisError):
        cfv(p, face, [bottom])
    with pytest.raises(FaceAnalysisError):
        cfv(p, face, [])


def test_cfv_matches_ambient_relaxation_on_polygons():
    """In the plane the polygon is its own single 2-face, so dropping the
    rows tight at a vertex must match the ambient relaxation exactly."""
    rng = random.Random(424242)
    checked = 0
    while checked < 15:
        p = _random_bounded_polytope(rng, 2)
        faces = enumerate_2faces(p)
        assert len(faces) == 1
        face = faces[0]
        g = adjacency_graph(p)
        for v in face.vertex_ids:
            keep = [
                p.labels[k]
                for k in range(p.num_ineq)
                if not g.vertices[v].tight >> k & 1
            ]
            res = cfv(p, face, [v])
            assert res.unbounded == (not is_bounded(p.sub(keep)))
        checked += 1


def test_two_step_on_face_reaches_opposite_corner():
    p = cube()
    g = adjacency_graph(p)
    face = face_by_labels(p, ["5"])
    target = g.index_of_point((1, 1, 1))
    start = (0, 0, 1)
    w = two_step_on_face(p, face, target, start)
    assert len(w.steps) <= 2
    assert w.end == (1, 1, 1)
    assert validate_walk(p, w).ok


def test_scan_cube_faces():
    p = cube()
    report = scan_2faces_with_apex(p)
    assert report.total == 6
    a1, a2 = report.apices
    assert report.count_for(a1) == 3
    assert report.count_for(a2) == 3
    assert all(e.unbounded for e in report.entries)
    assert all(e.distance == 1 for e in report.entries)
    assert report.at_distance(3) == ()


def test_face_walk_assembly_on_cube():
    p = cube()
    report = scan_2faces_with_apex(p)
    e = report.entries[0]
    w = circuit_length_upper_via_face(p, e.opposite, e.apex, e.face)
    assert len(w.steps) <= e.distance + 2
    assert validate_walk(p, w).ok
    assert non_edge_step_count(p, w) <= 2
    g = adjacency_graph(p)
    labels = certificate_path_labels(p, w)
    assert labels[0] == g.vertex_label(e.opposite)
    assert labels[-1] == g.vertex_label(e.apex)


def test_scan_renderers_shape():
    p = cube()
    report = scan_2faces_with_apex(p)
    rows = face_scan_rows(p, report)
    assert len(rows) == 6
    assert {"face_rows", "apex", "relaxation_unbounded", "distance_from_opposite"} <= set(rows[0])
    obj = json.loads(face_scan_json(p, report, with_certificates=True))
    assert obj["apex_face_incidences"] == 6
    assert all("certificate_length" in r for r in obj["faces"])
    csv = face_scan_csv(p, report)
    assert csv.splitlines()[0].startswith("face_rows,apex")
    assert len(csv.strip().splitlines()) == 7


def test_claim_star_battery():
    p = cube()
    results, all_ok = claim_star_battery(p, [list(p.labels), ["1"]])
    assert [r.bounded for r in results] == [True, False]
    assert not all_ok
    results, all_ok = claim_star_battery(p, [list(p.labels)])
    assert all_ok

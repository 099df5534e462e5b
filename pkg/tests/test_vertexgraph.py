from fractions import Fraction
from itertools import product

import pytest

from circuitwalks import (
    HRepError,
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
from propsuites import _mk_hrep, check_adjacency_against_midpoint_oracle


def cube():
    return _mk_hrep(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)],
        [1, 0, 1, 0, 1, 0],
    )


def pentagon():
    return _mk_hrep([(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1)], [3, 3, 0, 0, 5])


def test_cube_vertices_match_direct_oracle():
    got = {v.point for v in enumerate_vertices(cube())}
    expected = {
        tuple(Fraction(b) for b in bits) for bits in product((0, 1), repeat=3)
    }
    assert got == expected


def test_cube_graph_is_the_3_cube():
    g = adjacency_graph(cube())
    assert len(g.vertices) == 8
    assert len(g.edges) == 12
    for i, j in g.edges:
        diff = [a - b for a, b in zip(g.vertices[i].point, g.vertices[j].point)]
        assert sum(1 for x in diff if x != 0) == 1


def test_pentagon_graph_is_a_5_cycle():
    p = pentagon()
    g = adjacency_graph(p)
    assert len(g.vertices) == 5
    assert len(g.edges) == 5
    degrees = [0] * 5
    for i, j in g.edges:
        degrees[i] += 1
        degrees[j] += 1
    assert degrees == [2] * 5
    assert all(is_facet_defining(p, lab) for lab in p.labels)


def test_adjacency_midpoint_oracle_suite():
    assert check_adjacency_against_midpoint_oracle() == 12


def test_distances_and_paths_on_cube():
    g = adjacency_graph(cube())
    origin = g.index_of_point((0, 0, 0))
    far = g.index_of_point((1, 1, 1))
    assert graph_distance(g, origin, far) == 3
    path = shortest_path(g, origin, far)
    assert path[0] == origin and path[-1] == far
    assert len(path) == 4
    for a, b in zip(path, path[1:]):
        assert (min(a, b), max(a, b)) in set(g.edges)
    dists = graph_distances_from(g, origin)
    assert sorted(dists) == [0, 1, 1, 1, 2, 2, 2, 3]


def test_cube_2faces_are_its_six_facets():
    p = cube()
    faces = enumerate_2faces(p)
    assert len(faces) == 6
    assert all(len(f.vertex_ids) == 4 for f in faces)
    top = face_by_labels(p, ["5"])
    assert len(top.vertex_ids) == 4
    with pytest.raises(HRepError):
        face_by_labels(p, ["1", "2"])


def test_spindle_detection():
    pair = detect_spindle(cube())
    assert pair is not None
    g = adjacency_graph(cube())
    a, b = pair
    assert a < b
    assert tuple(x + y for x, y in zip(g.vertices[a].point, g.vertices[b].point)) == (1, 1, 1)
    assert (g.vertices[a].tight | g.vertices[b].tight) == (1 << 6) - 1
    assert g.vertices[a].tight & g.vertices[b].tight == 0
    assert spindle_apices(cube()) == pair
    assert detect_spindle(pentagon()) is None
    with pytest.raises(HRepError):
        spindle_apices(pentagon())


def test_graph_rehydration_roundtrip():
    p = cube()
    g = adjacency_graph(p)
    points = [v.point for v in g.vertices]
    g2 = graph_from_points(p, points, list(g.edges))
    assert [v.point for v in g2.vertices] == points
    assert list(g2.edges) == list(g.edges)


def test_graph_rehydration_rejects_tampering():
    p = cube()
    g = adjacency_graph(p)
    points = [v.point for v in g.vertices]
    edges = list(g.edges)
    bad_points = [points[0]] + [(Fraction(1, 2),) * 3] + points[2:]
    with pytest.raises(HRepError):
        graph_from_points(p, sorted(bad_points), edges)
    with pytest.raises(HRepError):
        graph_from_points(p, list(reversed(points)), edges)
    non_edge = next(
        (i, j)
        for i in range(8)
        for j in range(i + 1, 8)
        if (i, j) not in set(edges)
    )
    with pytest.raises(HRepError):
        graph_from_points(p, points, edges + [non_edge])


def test_report_renderers_shape():
    g = adjacency_graph(cube())
    dot = graph_dot(g)
    assert dot.startswith("graph")
    assert dot.count("--") == 12
    csv = vertex_csv(g)
    lines = csv.strip().splitlines()
    assert lines[0] == "id,label,x1,x2,x3"
    assert len(lines) == 9

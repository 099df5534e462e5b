"""Unbounded 2-face relaxations and the assembly of short certified walks
between spindle apices.

Dropping every inequality tight at a chosen set of face vertices leaves a
planar polyhedron; when it is unbounded, a recession ray shot from any
face point lands on an edge incident with a chosen vertex, giving a walk
of length at most two. Chaining a shortest edge walk into such a face
bounds the circuit distance between the apices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .hrep import HRep, is_bounded
from .linalg import dot, int_row, kernel_basis, normalize_coprime, vec
from .vertexgraph import (
    Face2,
    adjacency_graph,
    detect_spindle,
    enumerate_2faces,
    graph_distances_from,
    shortest_path,
)
from .walks import WalkCertificate, WalkError, direct_step, maximal_step, take_step


class FaceAnalysisError(ValueError):
    pass


@dataclass(frozen=True)
class CfvResult:
    """Recession structure of the face polygon after dropping the rows
    tight at the chosen vertices.

    The polygon carries its facet description: the rows of the ambient
    polyhedron that are tight on one of its edges. `dropped` lists every
    ambient row tight at a chosen vertex; `retained` lists the
    edge-defining rows that survive and constrain the recession cone.
    Chart pairs (s, t) refer to the face's parametrization base + s*dir1 +
    t*dir2. When the retained normals span the plane the recession cone is
    pointed and rays_chart holds its extreme rays; otherwise the cone
    contains lineality_chart's line (or the whole plane) and rays_chart is
    empty by the same convention as the ambient recession helper.
    """

    face: Face2
    vset: tuple[int, ...]
    dropped: tuple[str, ...]
    retained: tuple[str, ...]
    unbounded: bool
    lineality_chart: tuple[tuple[int, int], ...]
    rays_chart: tuple[tuple[int, int], ...]

    def _to_ambient(self, st: tuple[int, int]) -> tuple[int, ...]:
        s, t = st
        d = tuple(s * a + t * b for a, b in zip(self.face.dir1, self.face.dir2))
        return normalize_signed_dir(d)

    def recession_rays_ambient(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self._to_ambient(st) for st in self.rays_chart)

    def lineality_ambient(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self._to_ambient(st) for st in self.lineality_chart)


def normalize_signed_dir(d: Sequence) -> tuple[int, ...]:
    """Coprime integer direction, sign preserved."""
    w = int_row(d)
    if not any(w):
        raise FaceAnalysisError("zero direction")
    canon = normalize_coprime(w)
    for a, b in zip(w, canon):
        if a != 0:
            return canon if (a > 0) == (b > 0) else tuple(-x for x in canon)
    raise FaceAnalysisError("zero direction")


def cfv(p: HRep, face: Face2, vset: Iterable[int]) -> CfvResult:
    """Planar relaxation of the face polygon: drop every row tight at a
    chosen vertex, keep the remaining edge-defining rows restricted to the
    chart, and compute the 2-dim recession cone.

    A valid row's tight set on the polygon is a face of it, so a row
    defines an edge exactly when it is tight at two or more polygon
    vertices. A chart direction (s, t) recedes iff every retained row has
    non-positive rate a*s + t*b where (a, b) is the row restricted to the
    chart.
    """
    ids = tuple(sorted(set(vset)))
    if not ids:
        raise FaceAnalysisError("the vertex set must be nonempty")
    if not set(ids) <= set(face.vertex_ids):
        raise FaceAnalysisError("the vertex set must consist of face vertices")
    g = adjacency_graph(p)
    drop_mask = 0
    for i in ids:
        drop_mask |= g.vertices[i].tight
    dropped = tuple(p.labels[k] for k in range(p.num_ineq) if drop_mask >> k & 1)
    retained: list[str] = []
    normals: list[tuple[int, int]] = []
    for k in range(p.num_ineq):
        if drop_mask >> k & 1 or face.tight >> k & 1:
            continue
        if sum(1 for i in face.vertex_ids if g.vertices[i].tight >> k & 1) < 2:
            continue
        a = dot(p.rows[k], face.dir1)
        b = dot(p.rows[k], face.dir2)
        retained.append(p.labels[k])
        normals.append(normalize_signed_dir((a, b)))
    uniq = sorted(set(normals))
    if not uniq:
        lin = ((1, 0), (0, 1))
        rays: tuple[tuple[int, int], ...] = ()
        unbounded = True
    else:
        ker = kernel_basis([vec(nrm) for nrm in uniq], 2)
        if ker:
            lin = (normalize_coprime(ker[0]),)
            rays = ()
            unbounded = True
        else:
            lin = ()
            cands: set[tuple[int, int]] = set()
            for a, b in uniq:
                for c in ((b, -a), (-b, a)):
                    if all(x * c[0] + y * c[1] <= 0 for x, y in uniq):
                        cands.add(c)
            rays = tuple(sorted(cands))
            unbounded = bool(rays)
    return CfvResult(
        face=face,
        vset=ids,
        dropped=dropped,
        retained=tuple(retained),
        unbounded=unbounded,
        lineality_chart=tuple(lin),
        rays_chart=rays,
    )


def two_step_on_face(p: HRep, face: Face2, v_target: int, y0: Sequence) -> WalkCertificate:
    """Walk of length at most 2 from a face point to a face vertex whose
    dropped-row relaxation is unbounded.

    Shooting along a recession ray keeps every retained row slack, so the
    maximal step binds a dropped row and lands on a face of the 2-face
    that contains the target vertex, i.e. on an incident edge; one more
    step along that edge finishes. Rays are tried lexicographically.
    """
    res = cfv(p, face, (v_target,))
    if not res.unbounded:
        raise FaceAnalysisError("the dropped-row relaxation is bounded")
    g = adjacency_graph(p)
    target = g.vertices[v_target].point
    y0 = vec(y0)
    if not p.contains(y0):
        raise FaceAnalysisError("the start point is outside the polyhedron")
    for k in face.tight_indices():
        if dot(p.rows[k], y0) != p.rhs[k]:
            raise FaceAnalysisError("the start point is not on the face")
    if y0 == target:
        return WalkCertificate(start=y0, steps=())
    one = direct_step(p, y0, target)
    if one is not None:
        return WalkCertificate(start=y0, steps=(one,))
    for ray in _shot_directions(p, res):
        try:
            _, y1 = maximal_step(p, y0, ray)
        except WalkError:
            continue
        if y1 == target:
            return WalkCertificate(start=y0, steps=(take_step(p, y0, ray),))
        second = direct_step(p, y1, target)
        if second is not None:
            return WalkCertificate(start=y0, steps=(take_step(p, y0, ray), second))
    raise FaceAnalysisError("no recession ray reaches the target in two steps")


def _shot_directions(p: HRep, res: CfvResult) -> list[tuple[int, ...]]:
    """Ambient recession directions of the relaxation, extreme rays first.

    With lineality the cone has no extreme rays, so the boundary line and
    the interior normal-flip candidates stand in; every candidate is
    re-checked against the retained rows homogenized.
    """
    retained_idx = [p.labels.index(lab) for lab in res.retained]

    def recedes(d: tuple[int, ...]) -> bool:
        return all(dot(p.rows[k], d) <= 0 for k in retained_idx)

    cands: list[tuple[int, int]] = sorted(res.rays_chart)
    for s, t in res.lineality_chart:
        cands.extend(((s, t), (-s, -t), (t, -s), (-t, s)))
    out: list[tuple[int, ...]] = []
    for st in cands:
        d = res._to_ambient(st)
        if d not in out and recedes(d):
            out.append(d)
    return out


# ---------------------------------------------------------------------------
# Spindle face scans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FaceScanEntry:
    face: Face2
    apex: int
    opposite: int
    unbounded: bool
    distance: int
    nearest: tuple[int, ...]


@dataclass(frozen=True)
class FaceScanReport:
    """Per (2-face, contained apex) incidence: whether the dropped-row
    relaxation at the apex is unbounded, and the graph distance from the
    opposite apex to the nearest face vertex.

    A face enters the length bound dist + 2 through its nearest vertices,
    so the distance-3 slice is the set of faces usable in a length-5
    certificate.
    """

    apices: tuple[int, int]
    entries: tuple[FaceScanEntry, ...]

    def count_for(self, apex: int) -> int:
        return sum(1 for e in self.entries if e.apex == apex)

    @property
    def total(self) -> int:
        return len(self.entries)

    def at_distance(self, d: int) -> tuple[FaceScanEntry, ...]:
        return tuple(e for e in self.entries if e.distance == d)

    def unbounded_entries(self) -> tuple[FaceScanEntry, ...]:
        return tuple(e for e in self.entries if e.unbounded)


def scan_2faces_with_apex(p: HRep) -> FaceScanReport:
    """Scan every 2-face containing a spindle apex: relaxation
    unboundedness at that apex plus the distance data for the opposite
    apex."""
    g = adjacency_graph(p)
    apices = detect_spindle(p)
    if apices is None:
        raise FaceAnalysisError("the polyhedron is not a spindle")
    a1, a2 = apices
    dists = {a1: graph_distances_from(g, a1), a2: graph_distances_from(g, a2)}
    entries: list[FaceScanEntry] = []
    for face in enumerate_2faces(p):
        members = set(face.vertex_ids)
        for apex, opposite in ((a1, a2), (a2, a1)):
            if apex not in members:
                continue
            ub = cfv(p, face, (apex,)).unbounded
            dvec = dists[opposite]
            best = min(dvec[i] for i in face.vertex_ids if dvec[i] >= 0)
            nearest = tuple(sorted(i for i in face.vertex_ids if dvec[i] == best))
            entries.append(
                FaceScanEntry(
                    face=face,
                    apex=apex,
                    opposite=opposite,
                    unbounded=ub,
                    distance=best,
                    nearest=nearest,
                )
            )
    entries.sort(key=lambda e: (e.apex, e.face.vertex_ids))
    return FaceScanReport(apices=(a1, a2), entries=tuple(entries))


@dataclass(frozen=True)
class BatteryResult:
    labels: tuple[str, ...]
    bounded: bool


def claim_star_battery(p: HRep, batteries: Iterable[Iterable[str]]) -> tuple[tuple[BatteryResult, ...], bool]:
    """Boundedness of each named sub-polyhedron, plus the all-pass flag."""
    results = []
    for labels in batteries:
        labs = tuple(labels)
        sub = p.sub(labs)  # raises on unknown labels
        results.append(BatteryResult(labels=labs, bounded=is_bounded(sub)))
    return tuple(results), all(r.bounded for r in results)


def circuit_length_upper_via_face(
    p: HRep, from_apex: int, to_apex: int, face: Face2
) -> WalkCertificate:
    """Certified walk from one apex to the other: a shortest edge walk to
    the nearest face vertex, then at most two steps inside the face.

    Each edge hop is re-derived as a maximal circuit step rather than
    trusted from the graph.
    """
    g = adjacency_graph(p)
    if to_apex not in face.vertex_ids:
        raise FaceAnalysisError("the target apex is not a vertex of the face")
    if not cfv(p, face, (to_apex,)).unbounded:
        raise FaceAnalysisError("the dropped-row relaxation at the target apex is bounded")
    dvec = graph_distances_from(g, from_apex)
    reachable = [i for i in face.vertex_ids if dvec[i] >= 0]
    if not reachable:
        raise FaceAnalysisError("no face vertex is reachable from the start apex")
    y0_id = min(reachable, key=lambda i: (dvec[i], i))
    path = shortest_path(g, from_apex, y0_id)
    steps = []
    y = g.vertices[from_apex].point
    for nxt in path[1:]:
        target = g.vertices[nxt].point
        hop = direct_step(p, y, target)
        if hop is None:
            raise FaceAnalysisError("a graph edge failed to re-derive as a maximal circuit step")
        steps.append(hop)
        y = target
    tail = two_step_on_face(p, face, to_apex, y)
    steps.extend(tail.steps)
    return WalkCertificate(start=g.vertices[from_apex].point, steps=tuple(steps))


def non_edge_step_count(p: HRep, w: WalkCertificate) -> int:
    """Number of steps that are not along graph edges between vertices."""
    g = adjacency_graph(p)
    count = 0
    y = w.start
    for s in w.steps:
        try:
            u = g.index_of_point(y)
            v = g.index_of_point(s.point)
            if v not in g.adjacency[u]:
                count += 1
        except ValueError:
            count += 1
        y = s.point
    return count


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def face_scan_rows(p: HRep, report: FaceScanReport, with_certificates: bool = False) -> list[dict]:
    g = adjacency_graph(p)
    rows = []
    for e in report.entries:
        tight_labels = tuple(p.labels[k] for k in range(p.num_ineq) if e.face.tight >> k & 1)
        row = {
            "face_rows": list(tight_labels),
            "face_vertices": [g.vertex_label(i) for i in e.face.vertex_ids],
            "apex": g.vertex_label(e.apex),
            "opposite_apex": g.vertex_label(e.opposite),
            "relaxation_unbounded": e.unbounded,
            "distance_from_opposite": e.distance,
            "nearest_vertices": [g.vertex_label(i) for i in e.nearest],
        }
        if with_certificates and e.unbounded:
            cert = circuit_length_upper_via_face(p, e.opposite, e.apex, e.face)
            row["certificate_path"] = certificate_path_labels(p, cert)
            row["certificate_length"] = len(cert)
        rows.append(row)
    return rows


def face_scan_json(p: HRep, report: FaceScanReport, with_certificates: bool = False) -> str:
    g = adjacency_graph(p)
    obj = {
        "apices": [g.vertex_label(a) for a in report.apices],
        "apex_face_incidences": report.total,
        "unbounded_relaxations": len(report.unbounded_entries()),
        "at_distance_3": len(report.at_distance(3)),
        "per_apex": {g.vertex_label(a): report.count_for(a) for a in report.apices},
        "faces": face_scan_rows(p, report, with_certificates),
    }
    return json.dumps(obj, indent=2)


def face_scan_csv(p: HRep, report: FaceScanReport) -> str:
    lines = ["face_rows,apex,opposite_apex,relaxation_unbounded,distance_from_opposite,face_vertices"]
    for row in face_scan_rows(p, report):
        lines.append(
            "{},{},{},{},{},{}".format(
                " ".join(row["face_rows"]),
                row["apex"],
                row["opposite_apex"],
                row["relaxation_unbounded"],
                row["distance_from_opposite"],
                " ".join(row["face_vertices"]),
            )
        )
    return "\n".join(lines) + "\n"


def certificate_path_labels(p: HRep, w: WalkCertificate) -> list[str]:
    """Vertex labels along a walk; non-vertex waypoints render as charts of
    their tight rows in parentheses."""
    g = adjacency_graph(p)
    out = []
    for pt in w.points():
        try:
            out.append(g.vertex_label(g.index_of_point(pt)))
        except ValueError:
            out.append("(" + "".join(p.tight_labels(pt)) + ")")
    return out

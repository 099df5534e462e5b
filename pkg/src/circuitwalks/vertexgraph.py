"""Vertices, tight sets, the skeleton graph, 2-faces, and spindle detection.

Vertex enumeration goes through every inequality-row subset of the right
size rather than pivoting; the bundled instances are highly degenerate and
exhaustive subsets are immune to that. Tight sets are stored as bitmasks
over the inequality rows, so adjacency and face tests reduce to integer
bit operations plus one exact rank computation.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, islice
from math import comb
from typing import Iterable, Sequence

from .hrep import HRep, HRepError
from .linalg import (
    RatVec,
    int_row,
    kernel_basis,
    normalize_coprime,
    rank,
    rank_int,
    rat,
    solve,
    solve_vertex_int,
    vec,
    vsub,
)


@dataclass(frozen=True)
class Vertex:
    """A vertex with its complete tight set (bitmask over inequality rows)."""

    point: RatVec
    tight: int

    def tight_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.tight.bit_length()) if self.tight >> i & 1)


@dataclass(frozen=True)
class PolyGraph:
    """Skeleton of a polytope: vertices plus unordered index-pair edges."""

    p: HRep
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def vertex_label(self, i: int) -> str:
        return "".join(self.p.labels[k] for k in self.vertices[i].tight_indices())

    def index_of_point(self, x: Sequence) -> int:
        x = vec(x)
        for i, v in enumerate(self.vertices):
            if v.point == x:
                return i
        raise ValueError("point is not a vertex of the polytope")


@dataclass(frozen=True)
class Face2:
    """A 2-dimensional face: its tight rows, vertices, and an exact chart.

    `tight` holds every inequality row satisfied with equality on the whole
    face; `vertex_ids` are exactly the graph vertices whose tight set
    contains it. The chart (base point plus two orthogonal directions)
    parametrizes the affine hull.
    """

    tight: int
    vertex_ids: tuple[int, ...]
    base: RatVec
    dir1: tuple[int, ...]
    dir2: tuple[int, ...]

    def tight_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.tight.bit_length()) if self.tight >> i & 1)

    def to_plane(self, x: Sequence) -> tuple[Fraction, Fraction]:
        """Chart coordinates of an ambient point of the affine hull."""
        w = vsub(vec(x), self.base)
        s = _proj_coord(w, self.dir1)
        t = _proj_coord(w, self.dir2)
        return s, t

    def from_plane(self, s, t) -> RatVec:
        s, t = rat(s), rat(t)
        return tuple(b + s * d1 + t * d2 for b, d1, d2 in zip(self.base, self.dir1, self.dir2))


def _proj_coord(w: Sequence, d: Sequence) -> Fraction:
    num = sum((rat(a) * b for a, b in zip(w, d)), Fraction(0))
    den = sum(x * x for x in d)
    return num / den


# ---------------------------------------------------------------------------
# Vertex enumeration
# ---------------------------------------------------------------------------

def _int_system(p: HRep) -> tuple[list[tuple[int, ...]], list[int]]:
    """Each inequality scaled jointly with its rhs to integers."""
    irows, irhs = [], []
    for row, d in zip(p.rows, p.rhs):
        scaled = int_row(tuple(row) + (d,))
        irows.append(scaled[:-1])
        irhs.append(scaled[-1])
    return irows, irhs


_WORK: dict = {}


def _init_worker(irows, irhs, n):
    _WORK["irows"], _WORK["irhs"], _WORK["n"] = irows, irhs, n


def _solve_chunk(subs: list[tuple[int, ...]]) -> list[tuple[int, tuple[int, ...]]]:
    irows, irhs, n = _WORK["irows"], _WORK["irhs"], _WORK["n"]
    out = []
    for sub in subs:
        sol = solve_vertex_int([irows[i] for i in sub], [irhs[i] for i in sub])
        if sol is None:
            continue
        den, nums = sol
        if all(sum(r * x for r, x in zip(row, nums)) <= d * den for row, d in zip(irows, irhs)):
            out.append(sol)
    return out


def _chunked(it, size):
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


_VERTEX_CACHE: dict[HRep, tuple[Vertex, ...]] = {}


def enumerate_vertices(p: HRep, jobs: int = 1) -> list[Vertex]:
    """All vertices of a pointed polyhedron, sorted by coordinates.

    Solves every inequality-row subset of size dim - rank(equalities) with
    the equalities, keeps the feasible solutions, deduplicates, and
    recomputes the full tight set of each point. Raises on non-pointed
    input (no vertex exists).
    """
    cached = _VERTEX_CACHE.get(p)
    if cached is not None:
        return list(cached)
    if kernel_basis(list(p.eq_rows) + list(p.rows), p.dim):
        raise HRepError("polyhedron is not pointed; it has no vertices")
    n = p.dim
    irows, irhs = _int_system(p)
    points: set[tuple[int, tuple[int, ...]]] = set()
    if not p.eq_rows:
        subsets = combinations(range(p.num_ineq), n)
        if jobs > 1 and comb(p.num_ineq, n) > 4 * jobs:
            with ProcessPoolExecutor(
                max_workers=jobs, initializer=_init_worker, initargs=(irows, irhs, n)
            ) as ex:
                for found in ex.map(_solve_chunk, _chunked(subsets, 20000)):
                    points.update(found)
        else:
            _init_worker(irows, irhs, n)
            for found in map(_solve_chunk, _chunked(subsets, 20000)):
                points.update(found)
    else:
        r = rank(p.eq_rows)
        for sub in combinations(range(p.num_ineq), n - r):
            rows = list(p.eq_rows) + [p.rows[i] for i in sub]
            rhs = list(p.eq_rhs) + [p.rhs[i] for i in sub]
            x = solve(rows, rhs)
            if x is None or not p.contains(x):
                continue
            scaled = int_row(tuple(x) + (1,))
            points.add((scaled[-1], scaled[:-1]))

    eq_irows = [int_row(r) for r in p.eq_rows]
    verts = []
    for den, nums in points:
        pt = tuple(Fraction(x, den) for x in nums)
        mask = 0
        for i, (row, d) in enumerate(zip(irows, irhs)):
            if sum(r * x for r, x in zip(row, nums)) == d * den:
                mask |= 1 << i
        tight_rows = eq_irows + [irows[i] for i in range(mask.bit_length()) if mask >> i & 1]
        if rank_int(tight_rows, n, stop_at=n) == n:
            verts.append(Vertex(point=pt, tight=mask))
    verts.sort(key=lambda v: v.point)
    _VERTEX_CACHE[p] = tuple(verts)
    return list(verts)


# ---------------------------------------------------------------------------
# Skeleton graph
# ---------------------------------------------------------------------------

_GRAPH_CACHE: dict[HRep, PolyGraph] = {}


def adjacency_graph(p: HRep, jobs: int = 1) -> PolyGraph:
    """Skeleton of a bounded pointed polyhedron.

    Two vertices are adjacent iff their common tight rows (with the
    equalities) have rank dim-1: that forces the minimal face containing
    both to be one-dimensional, i.e. exactly the segment between them.
    """
    cached = _GRAPH_CACHE.get(p)
    if cached is not None:
        return cached
    from .hrep import is_bounded

    if not is_bounded(p):
        raise HRepError("adjacency graph requires a bounded polyhedron")
    verts = enumerate_vertices(p, jobs=jobs)
    n = p.dim
    eq_irows = [int_row(r) for r in p.eq_rows]
    irows = [int_row(r) for r in p.rows]
    r_eq = rank(p.eq_rows) if p.eq_rows else 0
    need = n - 1 - r_eq
    edges = []
    for i, j in combinations(range(len(verts)), 2):
        common = verts[i].tight & verts[j].tight
        if common.bit_count() < need:
            continue
        rows = eq_irows + [irows[k] for k in range(common.bit_length()) if common >> k & 1]
        if rank_int(rows, n, stop_at=n) == n - 1:
            edges.append((i, j))
    g = PolyGraph(p=p, vertices=tuple(verts), edges=tuple(edges))
    _GRAPH_CACHE[p] = g
    return g


def graph_from_points(
    p: HRep,
    points: Sequence[Sequence],
    edges: Sequence[tuple[int, int]],
) -> PolyGraph:
    """Rebuild a skeleton from known vertex points and edge id pairs.

    Rehydration path for the on-disk result cache. Tight sets are
    recomputed from scratch, every point is checked to be a genuine
    vertex and every pair a genuine edge, so a stale entry fails loudly
    instead of producing a wrong graph. Points must arrive in the
    canonical order (sorted, duplicate-free). Seeds the in-process
    memo caches on success.
    """
    n = p.dim
    irows, irhs = _int_system(p)
    eq_irows = [int_row(r) for r in p.eq_rows]
    verts: list[Vertex] = []
    for pt in points:
        pt = vec(pt)
        if len(pt) != n:
            raise HRepError("cached point has the wrong dimension")
        scaled = int_row(tuple(pt) + (rat(1),))
        den, nums = scaled[-1], scaled[:-1]
        mask = 0
        for i, (row, d) in enumerate(zip(irows, irhs)):
            if sum(r * x for r, x in zip(row, nums)) == d * den:
                mask |= 1 << i
        tight_rows = eq_irows + [irows[i] for i in range(mask.bit_length()) if mask >> i & 1]
        if not p.contains(pt) or rank_int(tight_rows, n, stop_at=n) != n:
            raise HRepError("cached point is not a vertex of the polyhedron")
        verts.append(Vertex(point=pt, tight=mask))
    if any(a.point >= b.point for a, b in zip(verts, verts[1:])):
        raise HRepError("cached vertex list is not in canonical order")
    checked = []
    for i, j in edges:
        if not 0 <= i < j < len(verts):
            raise HRepError("cached edge references an unknown vertex id")
        common = verts[i].tight & verts[j].tight
        rows = eq_irows + [irows[k] for k in range(common.bit_length()) if common >> k & 1]
        if rank_int(rows, n, stop_at=n) != n - 1:
            raise HRepError("cached pair is not an edge of the polyhedron")
        checked.append((i, j))
    g = PolyGraph(p=p, vertices=tuple(verts), edges=tuple(checked))
    _VERTEX_CACHE[p] = tuple(verts)
    _GRAPH_CACHE[p] = g
    return g


def graph_distance(g: PolyGraph, u: int, v: int) -> int:
    """BFS shortest-path length between two vertex ids."""
    dist = graph_distances_from(g, u)
    if dist[v] < 0:
        raise ValueError("vertices are not connected")
    return dist[v]


def graph_distances_from(g: PolyGraph, u: int) -> list[int]:
    """BFS distance from u to every vertex (-1 when unreachable)."""
    dist = [-1] * len(g.vertices)
    dist[u] = 0
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y in g.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def shortest_path(g: PolyGraph, u: int, v: int) -> list[int]:
    """One BFS shortest path from u to v, deterministic (lowest-id parents)."""
    if u == v:
        return [u]
    parent = {u: u}
    frontier = [u]
    while frontier and v not in parent:
        nxt = []
        for x in frontier:
            for y in g.adjacency[x]:
                if y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    if v not in parent:
        raise ValueError("vertices are not connected")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def is_facet_defining(p: HRep, label: str) -> bool:
    """True iff the row's tight vertices affinely span one dimension less
    than the polyhedron itself."""
    i = p.index_of(label)
    verts = enumerate_vertices(p)
    tight_pts = [v.point for v in verts if v.tight >> i & 1]
    if not tight_pts:
        return False
    dim_p = p.dim - (rank(p.eq_rows) if p.eq_rows else 0)
    base = tight_pts[0]
    diffs = [vsub(q, base) for q in tight_pts[1:]]
    return rank(diffs) == dim_p - 1


# ---------------------------------------------------------------------------
# 2-faces
# ---------------------------------------------------------------------------

def _face_from_mask(p: HRep, g: PolyGraph, mask: int) -> Face2 | None:
    """Close a candidate tight mask to a Face2, or None if not 2-dimensional."""
    n = p.dim
    irows = [int_row(r) for r in p.rows]
    eq_irows = [int_row(r) for r in p.eq_rows]
    members = [i for i, v in enumerate(g.vertices) if v.tight & mask == mask]
    if len(members) < 3:
        return None
    closed = g.vertices[members[0]].tight
    for i in members[1:]:
        closed &= g.vertices[i].tight
    rows = eq_irows + [irows[k] for k in range(closed.bit_length()) if closed >> k & 1]
    if rank_int(rows, n, stop_at=n) != n - 2:
        return None
    # chart: lexicographically smallest vertex, directions to its two
    # neighbors on the face cycle, second one orthogonalized
    members.sort(key=lambda i: g.vertices[i].point)
    base_id = members[0]
    member_set = set(members)
    cycle_nbrs = [j for j in g.adjacency[base_id] if j in member_set]
    if len(cycle_nbrs) < 2:
        return None
    base = g.vertices[base_id].point
    d1 = normalize_coprime(vsub(g.vertices[cycle_nbrs[0]].point, base))
    w = vsub(g.vertices[cycle_nbrs[1]].point, base)
    c = _proj_coord(w, d1)
    d2 = normalize_coprime(tuple(wi - c * di for wi, di in zip(w, d1)))
    return Face2(
        tight=closed,
        vertex_ids=tuple(sorted(member_set)),
        base=base,
        dir1=d1,
        dir2=d2,
    )


_FACES_CACHE: dict[HRep, tuple[Face2, ...]] = {}


def enumerate_2faces(p: HRep) -> list[Face2]:
    """Every 2-face of a bounded pointed polyhedron.

    Each 2-face contains a vertex with two of the face's edges meeting
    there, so intersecting the tight sets of adjacent edge pairs and
    keeping the rank dim-2 candidates finds them all; the vertex set of a
    candidate then closes its tight set.
    """
    cached = _FACES_CACHE.get(p)
    if cached is not None:
        return list(cached)
    g = adjacency_graph(p)
    n = p.dim
    irows = [int_row(r) for r in p.rows]
    eq_irows = [int_row(r) for r in p.eq_rows]
    faces: dict[tuple[int, ...], Face2] = {}
    seen_masks: set[int] = set()
    for u in range(len(g.vertices)):
        for a, b in combinations(g.adjacency[u], 2):
            tu = g.vertices[u].tight
            mask = tu & g.vertices[a].tight & g.vertices[b].tight
            if mask in seen_masks:
                continue
            seen_masks.add(mask)
            rows = eq_irows + [irows[k] for k in range(mask.bit_length()) if mask >> k & 1]
            if rank_int(rows, n, stop_at=n) != n - 2:
                continue
            face = _face_from_mask(p, g, mask)
            if face is not None:
                faces.setdefault(face.vertex_ids, face)
    _FACES_CACHE[p] = tuple(faces[k] for k in sorted(faces))
    return list(_FACES_CACHE[p])


def face_by_labels(p: HRep, labels: Iterable[str]) -> Face2:
    """The 2-face on which all the named rows are tight."""
    g = adjacency_graph(p)
    mask = 0
    for lab in labels:
        mask |= 1 << p.index_of(lab)
    face = _face_from_mask(p, g, mask)
    if face is None:
        raise HRepError("the named rows do not define a 2-face")
    return face


# ---------------------------------------------------------------------------
# Spindles
# ---------------------------------------------------------------------------

def detect_spindle(p: HRep) -> tuple[int, int] | None:
    """Vertex-id pair (u, v) whose tight sets partition the inequality rows.

    Every row tight at exactly one of the two; None when no pair qualifies.
    When several pairs qualify (e.g. a square), the lexicographically
    smallest one is returned.
    """
    g = adjacency_graph(p)
    full = (1 << p.num_ineq) - 1
    by_mask: dict[int, int] = {}
    for i, v in enumerate(g.vertices):
        by_mask.setdefault(v.tight, i)
    for i, v in enumerate(g.vertices):
        j = by_mask.get(full ^ v.tight)
        if j is not None and i < j:
            return i, j
    return None


def spindle_apices(p: HRep) -> tuple[int, int]:
    pair = detect_spindle(p)
    if pair is None:
        raise HRepError("polyhedron is not a spindle")
    return pair


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------

def graph_dot(g: PolyGraph) -> str:
    out = ["graph skeleton {"]
    for i in range(len(g.vertices)):
        out.append(f'  v{i} [label="{g.vertex_label(i)}"];')
    for i, j in g.edges:
        out.append(f"  v{i} -- v{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def vertex_csv(g: PolyGraph) -> str:
    n = g.p.dim
    head = "id,label," + ",".join(f"x{k + 1}" for k in range(n))
    lines = [head]
    for i, v in enumerate(g.vertices):
        coords = ",".join(str(x) for x in v.point)
        lines.append(f"{i},{g.vertex_label(i)},{coords}")
    return "\n".join(lines) + "\n"

"""Central hyperplane arrangement of edge directions, exact region
enumeration, induced acyclic orientations, and monotone edge diameters.

Each graph edge contributes the hyperplane orthogonal to its direction;
a full-dimensional region of the arrangement fixes the sign of c.(u-v)
for every edge and therefore a complete orientation of the graph. Region
geometry is handled ray-side: every extreme ray of a region cone is the
kernel line of some (dim-1)-subset of normals, so one global candidate
pool serves all regions via bitmask sign tests.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, replace
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .hrep import Cone, HRep
from .linalg import dot, int_row, kernel_line_int, normalize_coprime, rank, rank_int, vec
from .vertexgraph import PolyGraph, adjacency_graph


class OrientationError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeArrangement:
    """Deduplicated edge-direction normals plus the map back to edges.

    edge_dirs[e] = (k, s) means the direction of edge e (tail u, head v,
    u < v by vertex id) satisfies point(v) - point(u) = lambda * s *
    normals[k] for some lambda > 0.
    """

    dim: int
    normals: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    edge_dirs: tuple[tuple[int, int], ...]

    def expand_to_edges(self, sigma: Sequence[int]) -> tuple[int, ...]:
        """Per-edge sign vector induced by a per-normal sign vector."""
        return tuple(s * sigma[k] for k, s in self.edge_dirs)


@dataclass(frozen=True)
class OrientationRegion:
    """One full-dimensional region of the arrangement.

    sigma[k] is the sign of normals[k].c throughout the region; witness
    is an integer objective strictly inside. Digraph statistics are
    filled in by classify_regions.
    """

    sigma: tuple[int, ...]
    witness: tuple[int, ...]
    normals: tuple[tuple[int, ...], ...]
    sink: int | None = None
    source: int | None = None
    diameter: int | None = None
    worst: tuple[int, ...] = ()

    def cone(self) -> Cone:
        rows = tuple(tuple(-s * x for x in h) for s, h in zip(self.sigma, self.normals))
        return Cone(dim=len(self.witness), rows=rows, labels=tuple(f"h{k}" for k in range(len(rows))))


@dataclass(frozen=True)
class Digraph:
    """Acyclic orientation of a polytope graph; arc (u, v) points from the
    larger objective value to the smaller."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(s)) for s in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inc[v].append(u)
        return tuple(tuple(sorted(s)) for s in inc)

    def sinks(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if not self.successors[i])

    def sources(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if not self.predecessors[i])


def build_edge_arrangement(g: PolyGraph) -> EdgeArrangement:
    """Canonical normals of all edge directions, deduplicated up to sign
    and scaling, lexicographically sorted."""
    dirs: list[tuple[tuple[int, ...], int]] = []
    seen: set[tuple[int, ...]] = set()
    for u, v in g.edges:
        d = tuple(a - b for a, b in zip(g.vertices[v].point, g.vertices[u].point))
        canon = normalize_coprime(int_row(d))
        seen.add(canon)
        s = 1
        for a, b in zip(int_row(d), canon):
            if b != 0:
                s = 1 if (a > 0) == (b > 0) else -1
                break
        dirs.append((canon, s))
    normals = tuple(sorted(seen))
    index = {h: k for k, h in enumerate(normals)}
    edge_dirs = tuple((index[canon], s) for canon, s in dirs)
    return EdgeArrangement(dim=g.p.dim, normals=normals, edges=g.edges, edge_dirs=edge_dirs)


def arrangement_from_normals(normals: Iterable[Sequence[int]], dim: int) -> EdgeArrangement:
    """Synthetic arrangement with no underlying graph (oracle tests)."""
    canon = sorted({normalize_coprime(int_row(h)) for h in normals})
    return EdgeArrangement(dim=dim, normals=tuple(canon), edges=(), edge_dirs=())


# ---------------------------------------------------------------------------
# Region enumeration
# ---------------------------------------------------------------------------

def _candidate_rays(arr: EdgeArrangement) -> list[tuple[tuple[int, ...], int, int, int]]:
    """All kernel lines of (dim-1)-subsets of normals, with sign bitmasks.

    Entry (r, pos, neg, zero): bit k of pos/neg/zero says normals[k].r is
    positive/negative/zero. Every extreme ray of every region cone is one
    of these lines (up to sign), so the pool is computed once.
    """
    n = arr.dim
    pool: dict[tuple[int, ...], tuple[int, int, int]] = {}
    for sub in combinations(arr.normals, n - 1):
        r = kernel_line_int(list(sub), n)
        if r is None or r in pool:
            continue
        pos = neg = zero = 0
        for k, h in enumerate(arr.normals):
            t = sum(a * b for a, b in zip(h, r))
            if t > 0:
                pos |= 1 << k
            elif t < 0:
                neg |= 1 << k
            else:
                zero |= 1 << k
        pool[r] = (pos, neg, zero)
    return [(r, pos, neg, zero) for r, (pos, neg, zero) in sorted(pool.items())]


_POOL_CACHE: dict[tuple[int, tuple[tuple[int, ...], ...]], list] = {}


def _pool(arr: EdgeArrangement) -> list[tuple[tuple[int, ...], int, int, int]]:
    key = (arr.dim, arr.normals)
    got = _POOL_CACHE.get(key)
    if got is None:
        got = _POOL_CACHE[key] = _candidate_rays(arr)
    return got


def _region_rays(
    arr: EdgeArrangement, plus: int
) -> list[tuple[tuple[int, ...], int]]:
    """Extreme rays of the region cone {c : sign(normals[k].c) = sigma_k},
    as (ray, zero-mask) pairs. plus = bitmask of the +1 entries of sigma.

    +r is feasible iff no negative product lands on a plus normal and no
    positive product lands on a minus normal; -r symmetrically.
    """
    full = (1 << len(arr.normals)) - 1
    minus = full & ~plus
    rays: list[tuple[tuple[int, ...], int]] = []
    for r, pos, neg, zero in _pool(arr):
        if not (neg & plus) and not (pos & minus):
            rays.append((r, zero))
        elif not (pos & plus) and not (neg & minus):
            rays.append((tuple(-x for x in r), zero))
    return rays


def _seed_objective(arr: EdgeArrangement, max_tries: int = 1000) -> tuple[int, ...]:
    """Deterministic generic objective (1, t, t^2, ...) with every product
    nonzero, found by incrementing t."""
    n = arr.dim
    for t in range(1, max_tries + 1):
        c = tuple(t**i for i in range(n))
        if all(sum(a * b for a, b in zip(h, c)) != 0 for h in arr.normals):
            return c
    raise OrientationError("no generic seed objective found within the retry bound")


def _sigma_of(arr: EdgeArrangement, c: Sequence) -> tuple[int, ...]:
    c = vec(c)
    sigma = []
    for h in arr.normals:
        t = dot(h, c)
        if t == 0:
            raise OrientationError("objective lies on an arrangement hyperplane")
        sigma.append(1 if t > 0 else -1)
    return tuple(sigma)


def region_of_objective(arr: EdgeArrangement, c: Sequence) -> tuple[int, ...]:
    """Sign vector of the region containing a generic objective."""
    return _sigma_of(arr, c)


def enumerate_regions(arr: EdgeArrangement) -> list[OrientationRegion]:
    """All full-dimensional regions of the central arrangement.

    Breadth-first flood over the wall graph: walls of a region are the
    normals whose tight extreme rays reach rank dim-1, and flipping one
    wall sign yields the neighboring region. Connectedness of the region
    adjacency graph makes the flood exhaustive.

    Normals that span only a subspace are essentialized first: signs of
    h.c depend only on the component of c in the span, so the regions of
    the restricted arrangement are in sign-preserving bijection with the
    full-dimensional regions here, and interior witnesses map back.
    """
    kk = len(arr.normals)
    if kk == 0:
        raise OrientationError("arrangement has no hyperplanes")
    inorm = [int_row(h) for h in arr.normals]
    basis: list[tuple[int, ...]] = []
    for h in inorm:
        if rank_int(basis + [h], arr.dim) > len(basis):
            basis.append(h)
    n = len(basis)
    if n < arr.dim:
        eff = EdgeArrangement(
            dim=n,
            normals=tuple(tuple(sum(a * b for a, b in zip(bb, h)) for bb in basis) for h in inorm),
            edges=(),
            edge_dirs=(),
        )
    else:
        eff = arr
    c0 = _seed_objective(eff)
    sigma0 = _sigma_of(eff, c0)
    start = sum(1 << k for k, s in enumerate(sigma0) if s > 0)
    seen = {start}
    queue = deque([start])
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    while queue:
        plus = queue.popleft()
        rays = _region_rays(eff, plus)
        if rank_int([r for r, _ in rays], n) != n:
            raise OrientationError("flood reached a non-full-dimensional sign vector")
        witness = tuple(sum(col) for col in zip(*(r for r, _ in rays)))
        sigma = tuple(1 if plus >> k & 1 else -1 for k in range(kk))
        found.append((sigma, witness))
        for k in range(kk):
            nb = plus ^ (1 << k)
            if nb in seen:
                continue
            bit = 1 << k
            tight = [r for r, zero in rays if zero & bit]
            if len(tight) >= n - 1 and rank_int(tight, n) == n - 1:
                seen.add(nb)
                queue.append(nb)
    found.sort()
    out = []
    for sigma, w in found:
        if n < arr.dim:
            w = tuple(sum(t * bb[j] for t, bb in zip(w, basis)) for j in range(arr.dim))
        for k, h in enumerate(arr.normals):
            t = sum(a * b for a, b in zip(h, w))
            if t == 0 or (t > 0) != (sigma[k] > 0):
                raise OrientationError("ray-sum witness fails a strict sign check")
        out.append(OrientationRegion(sigma=sigma, witness=w, normals=arr.normals))
    return out


# ---------------------------------------------------------------------------
# Orientations of the graph
# ---------------------------------------------------------------------------

def orient_graph(g: PolyGraph, c: Sequence) -> Digraph:
    """Each edge directed toward the smaller objective value."""
    c = vec(c)
    arcs = []
    for u, v in g.edges:
        t = dot(c, g.vertices[u].point) - dot(c, g.vertices[v].point)
        if t == 0:
            raise OrientationError(f"objective ties on edge ({u},{v})")
        arcs.append((u, v) if t > 0 else (v, u))
    return Digraph(n=len(g.vertices), arcs=tuple(arcs))


def _orient_by_signs(g: PolyGraph, edge_signs: Sequence[int]) -> Digraph:
    arcs = []
    for (u, v), s in zip(g.edges, edge_signs):
        # s = sign of c.(v - u); positive means v is the costlier endpoint
        arcs.append((v, u) if s > 0 else (u, v))
    return Digraph(n=len(g.vertices), arcs=tuple(arcs))


def is_acyclic(d: Digraph) -> bool:
    indeg = [len(d.predecessors[i]) for i in range(d.n)]
    queue = deque(i for i in range(d.n) if indeg[i] == 0)
    removed = 0
    while queue:
        x = queue.popleft()
        removed += 1
        for y in d.successors[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return removed == d.n


def monotone_edge_diameter(d: Digraph) -> tuple[int, tuple[int, ...], int]:
    """(max shortest directed distance to the unique sink, argmax vertex
    set, sink id), by reverse breadth-first search from the sink."""
    sinks = d.sinks()
    if len(sinks) != 1:
        raise OrientationError(f"expected a unique sink, found {len(sinks)}")
    sink = sinks[0]
    dist = {sink: 0}
    queue = deque([sink])
    while queue:
        x = queue.popleft()
        for pre in d.predecessors[x]:
            if pre not in dist:
                dist[pre] = dist[x] + 1
                queue.append(pre)
    if len(dist) != d.n:
        raise OrientationError("some vertex has no directed path to the sink")
    diameter = max(dist.values())
    worst = tuple(sorted(i for i, k in dist.items() if k == diameter))
    return diameter, worst, sink


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassifyReport:
    arrangement: EdgeArrangement
    regions: tuple[OrientationRegion, ...]
    total: int
    hirsch_bound: int
    bad: tuple[OrientationRegion, ...]
    sink_counts: dict[int, int]

    def sink_count(self, vertex_id: int) -> int:
        return self.sink_counts.get(vertex_id, 0)


def classify_regions(p: HRep, jobs: int = 1) -> ClassifyReport:
    """Every orientation's digraph statistics plus the summary counts.

    The Hirsch bound here is facets minus dimension; a region is "bad"
    when its monotone edge diameter exceeds it.
    """
    g = adjacency_graph(p, jobs=jobs)
    arr = build_edge_arrangement(g)
    regions = enumerate_regions(arr)
    bound = p.num_ineq - (p.dim - (rank(p.eq_rows) if p.eq_rows else 0))
    out: list[OrientationRegion] = []
    bad: list[OrientationRegion] = []
    sink_counts: dict[int, int] = {}
    for reg in regions:
        dg = _orient_by_signs(g, arr.expand_to_edges(reg.sigma))
        if not is_acyclic(dg):
            raise OrientationError("region digraph contains a directed cycle")
        diam, worst, sink = monotone_edge_diameter(dg)
        sources = dg.sources()
        if len(sources) != 1:
            raise OrientationError("region digraph lacks a unique source")
        full = replace(reg, sink=sink, source=sources[0], diameter=diam, worst=worst)
        out.append(full)
        sink_counts[sink] = sink_counts.get(sink, 0) + 1
        if diam > bound:
            bad.append(full)
    return ClassifyReport(
        arrangement=arr,
        regions=tuple(out),
        total=len(out),
        hirsch_bound=bound,
        bad=tuple(bad),
        sink_counts=sink_counts,
    )


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError("sign vectors differ in length")
    return sum(1 for x, y in zip(a, b) if x != y)


def edge_direction_matroid_uniform(g: PolyGraph, n: int | None = None) -> bool:
    """True iff every n-subset of the distinct edge-direction normals is
    linearly independent."""
    arr = build_edge_arrangement(g)
    if n is None:
        n = arr.dim
    for sub in combinations(arr.normals, n):
        if rank_int(list(sub), arr.dim) != n:
            return False
    return True


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def sigma_string(signs: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def digraph_dot(g: PolyGraph, d: Digraph) -> str:
    lines = ["digraph orientation {"]
    for i in range(d.n):
        lines.append(f'  v{i} [label="{g.vertex_label(i)}"];')
    for u, v in sorted(d.arcs):
        lines.append(f"  v{u} -> v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def region_report_rows(report: ClassifyReport, g: PolyGraph) -> list[dict]:
    rows = []
    for reg in report.regions:
        rows.append(
            {
                "sigma_edges": sigma_string(report.arrangement.expand_to_edges(reg.sigma)),
                "witness": list(reg.witness),
                "sink": g.vertex_label(reg.sink),
                "source": g.vertex_label(reg.source),
                "diameter": reg.diameter,
                "worst": [g.vertex_label(i) for i in reg.worst],
            }
        )
    return rows


def region_report_json(report: ClassifyReport, g: PolyGraph) -> str:
    obj = {
        "total_regions": report.total,
        "hirsch_bound": report.hirsch_bound,
        "bad_regions": len(report.bad),
        "sink_counts": {g.vertex_label(i): k for i, k in sorted(report.sink_counts.items())},
        "regions": region_report_rows(report, g),
    }
    return json.dumps(obj, indent=2)


def region_report_csv(report: ClassifyReport, g: PolyGraph) -> str:
    lines = ["sigma_edges,witness,sink,source,diameter,worst"]
    for row in region_report_rows(report, g):
        lines.append(
            "{},{},{},{},{},{}".format(
                row["sigma_edges"],
                " ".join(str(x) for x in row["witness"]),
                row["sink"],
                row["source"],
                row["diameter"],
                " ".join(row["worst"]),
            )
        )
    return "\n".join(lines) + "\n"

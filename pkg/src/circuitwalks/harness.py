"""Claim verification harness for the bundled datasets.

Every reproducible statement about the four bundled polytopes lives in
data/claims.json as (id, statement, expected value, provenance); this
module runs the per-case pipelines, compares computed against expected
under exact equality, and packages the outcome as a CaseReport. The
heavyweight intermediates (vertex sets, skeletons, circuit lists) go
through the content-addressed result cache so repeated runs skip the
subset enumerations.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from importlib import resources
from typing import Any, Callable, Sequence

from .cache import ResultCache
from .circuits import (
    Circuit,
    enumerate_circuits,
    is_circuit_direction,
    seed_circuits,
    signed_circuit_count,
)
from .datasets import load
from .faceanalysis import (
    certificate_path_labels,
    circuit_length_upper_via_face,
    non_edge_step_count,
    scan_2faces_with_apex,
)
from .hrep import HRep, HRepError, apply_linear_map, hrep_equivalent, is_bounded, write_hrep
from .linalg import vsub
from .orientations import (
    ClassifyReport,
    classify_regions,
    edge_direction_matroid_uniform,
    hamming_distance,
    region_of_objective,
)
from .vertexgraph import (
    PolyGraph,
    adjacency_graph,
    detect_spindle,
    face_by_labels,
    graph_distance,
    graph_distances_from,
    graph_from_points,
)
from .walks import (
    WalkCertificate,
    antiblocking_walk,
    bounded_depth_search,
    containment_spindle_walk,
    is_antiblocking,
    take_step,
    triple_span_excludes,
    two_step_reachable,
    validate_walk,
    walk_to_json,
)

CASES = ("todd", "s48", "s28", "s25")
CASE_DATASETS = {"todd": "m4.hrep", "s48": "s48.hrep", "s28": "s28.hrep", "s25": "s25.hrep"}

_CACHE_VERSION = "1"


# ---------------------------------------------------------------------------
# Cached heavy computations
# ---------------------------------------------------------------------------

def cached_graph(p: HRep, cache: ResultCache | None, jobs: int = 1) -> PolyGraph:
    """Skeleton of p, served from the result cache when possible.

    The cache stores vertex points and edge id pairs; rehydration
    recomputes tight sets and re-checks vertex- and edgehood, so a wrong
    entry degrades to a recompute rather than a wrong graph.
    """
    if cache is None:
        return adjacency_graph(p, jobs=jobs)
    payload = write_hrep(p)
    hit = cache.get("graph:" + _CACHE_VERSION, payload)
    if hit is not None:
        try:
            obj = json.loads(hit)
            pts = [tuple(Fraction(t) for t in row) for row in obj["points"]]
            edges = [(int(i), int(j)) for i, j in obj["edges"]]
            return graph_from_points(p, pts, edges)
        except (ValueError, KeyError, TypeError, HRepError):
            pass
    g = adjacency_graph(p, jobs=jobs)
    obj = {
        "points": [[str(x) for x in v.point] for v in g.vertices],
        "edges": [[i, j] for i, j in g.edges],
    }
    cache.put("graph:" + _CACHE_VERSION, payload, json.dumps(obj))
    return g


_SIGN_CHARS = {1: "+", 0: "0", -1: "-"}
_CHAR_SIGNS = {v: k for k, v in _SIGN_CHARS.items()}


def cached_circuits(p: HRep, cache: ResultCache | None) -> list[Circuit]:
    """Canonical circuit list of p, served from the result cache when possible."""
    if cache is None:
        return enumerate_circuits(p)
    payload = write_hrep(p)
    hit = cache.get("circuits:" + _CACHE_VERSION, payload)
    if hit is not None:
        try:
            rows = json.loads(hit)
            circuits = [
                Circuit(
                    g=tuple(int(x) for x in r["g"]),
                    witness=tuple(r["witness"]),
                    bsign=tuple(_CHAR_SIGNS[c] for c in r["bsign"]),
                )
                for r in rows
            ]
            seed_circuits(p, circuits)
            return circuits
        except (ValueError, KeyError, TypeError):
            pass
    circuits = enumerate_circuits(p)
    rows = [
        {"g": list(c.g), "witness": list(c.witness), "bsign": "".join(_SIGN_CHARS[s] for s in c.bsign)}
        for c in circuits
    ]
    cache.put("circuits:" + _CACHE_VERSION, payload, json.dumps(rows))
    return circuits


_CLASSIFY_MEMO: dict[HRep, ClassifyReport] = {}


def _classify(p: HRep, jobs: int) -> ClassifyReport:
    report = _CLASSIFY_MEMO.get(p)
    if report is None:
        report = classify_regions(p, jobs=jobs)
        _CLASSIFY_MEMO[p] = report
    return report


# ---------------------------------------------------------------------------
# Claims manifest
# ---------------------------------------------------------------------------

def claims_manifest() -> dict:
    """The bundled claims table, parsed."""
    text = resources.files("circuitwalks").joinpath("data/claims.json").read_text()
    return json.loads(text)


def claims_for(case: str) -> list[dict]:
    return [c for c in claims_manifest()["claims"] if c["case"] == case]


# ---------------------------------------------------------------------------
# Report types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    statement: str
    provenance: str
    expected: Any
    computed: Any
    passed: bool
    runtime: float


@dataclass(frozen=True)
class CaseReport:
    case: str
    results: tuple[ClaimResult, ...]
    certificates: dict[str, Any]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failed_ids(self) -> list[str]:
        return [r.claim_id for r in self.results if not r.passed]

    def to_json_obj(self) -> dict:
        return {
            "case": self.case,
            "passed": self.ok,
            "failed_claims": self.failed_ids(),
            "results": [
                {
                    "claim_id": r.claim_id,
                    "statement": r.statement,
                    "provenance": r.provenance,
                    "expected": r.expected,
                    "computed": r.computed,
                    "passed": r.passed,
                    "runtime_seconds": r.runtime,
                }
                for r in self.results
            ],
            "certificates": self.certificates,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def summary_lines(self) -> list[str]:
        lines = []
        for r in self.results:
            lines.append(
                f"{'PASS' if r.passed else 'FAIL'} {r.claim_id} [{r.provenance}]"
                f" expected={_compact(r.expected)} computed={_compact(r.computed)}"
                f" ({r.runtime:.2f}s)"
            )
        status = "all claims pass" if self.ok else f"FAILED: {', '.join(self.failed_ids())}"
        lines.append(f"case {self.case}: {len(self.results)} claims, {status}")
        return lines


def _compact(value: Any, limit: int = 96) -> str:
    s = json.dumps(value, separators=(",", ":"), default=str)
    return s if len(s) <= limit else s[: limit - 3] + "..."


# ---------------------------------------------------------------------------
# Shared parsing helpers
# ---------------------------------------------------------------------------

_LABEL_RE = re.compile(r"^(\d+)([+-]?)$")


def _lab_key(label: str) -> tuple:
    m = _LABEL_RE.match(label)
    if not m:
        return (1 << 30, 0, label)
    return (int(m.group(1)), 0 if m.group(2) != "-" else 1, "")


def _sort_labels(labels: Sequence[str]) -> list[str]:
    return sorted(labels, key=_lab_key)


def _sort_label_sets(sets: Sequence[Sequence[str]]) -> list[list[str]]:
    return sorted((_sort_labels(s) for s in sets), key=lambda ls: [_lab_key(x) for x in ls])


def _vec_of(text: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(tok) for tok in text.split())


def _vec_str(v: Sequence) -> str:
    return " ".join(str(Fraction(x)) for x in v)


# ---------------------------------------------------------------------------
# Per-case context with lazily shared intermediates
# ---------------------------------------------------------------------------

class _Ctx:
    def __init__(self, case: str, cache: ResultCache | None = None, jobs: int = 1):
        self.case = case
        self.cache = cache
        self.jobs = jobs
        self.certificates: dict[str, Any] = {}
        self._dists: dict[int, list[int]] = {}

    @cached_property
    def p(self) -> HRep:
        return load(CASE_DATASETS[self.case])

    @cached_property
    def graph(self) -> PolyGraph:
        return cached_graph(self.p, self.cache, jobs=self.jobs)

    @cached_property
    def circuits(self) -> list[Circuit]:
        return cached_circuits(self.p, self.cache)

    @cached_property
    def classify(self) -> ClassifyReport:
        self.graph
        return _classify(self.p, self.jobs)

    @cached_property
    def scan(self):
        self.graph
        return scan_2faces_with_apex(self.p)

    @cached_property
    def apices(self) -> tuple[int, int]:
        self.graph
        pair = detect_spindle(self.p)
        if pair is None:
            raise HRepError("dataset is not a spindle")
        return pair

    @cached_property
    def point_ids(self) -> dict[tuple, int]:
        return {v.point: i for i, v in enumerate(self.graph.vertices)}

    @cached_property
    def tight_ids(self) -> dict[frozenset, int]:
        p = self.p
        return {
            frozenset(p.labels[k] for k in v.tight_indices()): i
            for i, v in enumerate(self.graph.vertices)
        }

    def vid(self, text: str) -> int:
        return self.point_ids[_vec_of(text)]

    def dists_from(self, vid: int) -> list[int]:
        if vid not in self._dists:
            self._dists[vid] = graph_distances_from(self.graph, vid)
        return self._dists[vid]

    def vertex_labels(self, vid: int) -> list[str]:
        return _sort_labels(self.p.labels[k] for k in self.graph.vertices[vid].tight_indices())


# ---------------------------------------------------------------------------
# Claim evaluators, keyed by the id suffix after the case prefix
# ---------------------------------------------------------------------------

_EVALUATORS: dict[str, Callable[[_Ctx, dict], Any]] = {}


def _evaluator(*suffixes: str):
    def deco(fn):
        for s in suffixes:
            _EVALUATORS[s] = fn
        return fn

    return deco


@_evaluator("vertex-count")
def _ev_vertex_count(ctx: _Ctx, claim: dict) -> int:
    return len(ctx.graph.vertices)


@_evaluator("edge-count")
def _ev_edge_count(ctx: _Ctx, claim: dict) -> int:
    return len(ctx.graph.edges)


@_evaluator("apices")
def _ev_apices(ctx: _Ctx, claim: dict) -> list[str]:
    return [_vec_str(ctx.graph.vertices[i].point) for i in ctx.apices]


@_evaluator("antiblocking")
def _ev_antiblocking(ctx: _Ctx, claim: dict) -> bool:
    return is_antiblocking(ctx.p)


@_evaluator("apex-distance")
def _ev_apex_distance(ctx: _Ctx, claim: dict) -> int:
    a, b = ctx.apices
    return graph_distance(ctx.graph, a, b)


@_evaluator("canonical-circuit-count")
def _ev_canonical_circuits(ctx: _Ctx, claim: dict) -> int:
    return len(ctx.circuits)


@_evaluator("signed-circuit-count")
def _ev_signed_circuits(ctx: _Ctx, claim: dict) -> int:
    ctx.circuits
    return signed_circuit_count(ctx.p)


@_evaluator("region-count")
def _ev_region_count(ctx: _Ctx, claim: dict) -> int:
    return ctx.classify.total


@_evaluator("bad-region-count")
def _ev_bad_region_count(ctx: _Ctx, claim: dict) -> int:
    return len(ctx.classify.bad)


@_evaluator("origin-sink-count")
def _ev_origin_sink_count(ctx: _Ctx, claim: dict) -> int:
    origin = ctx.vid(_vec_str([0] * ctx.p.dim))
    return ctx.classify.sink_count(origin)


@_evaluator("bad-regions-sink-origin")
def _ev_bad_sink_origin(ctx: _Ctx, claim: dict) -> bool:
    origin = ctx.vid(_vec_str([0] * ctx.p.dim))
    return all(reg.sink == origin for reg in ctx.classify.bad)


@_evaluator("bad-region-diameters")
def _ev_bad_diameters(ctx: _Ctx, claim: dict) -> list[int]:
    return [reg.diameter for reg in ctx.classify.bad]


@_evaluator("bad-regions-worst-start")
def _ev_bad_worst_start(ctx: _Ctx, claim: dict) -> bool:
    apex = max(ctx.apices, key=lambda i: ctx.graph.vertices[i].point)
    return all(reg.worst == (apex,) for reg in ctx.classify.bad)


@_evaluator("representatives-cover-bad")
def _ev_reps_cover(ctx: _Ctx, claim: dict) -> dict:
    arr = ctx.classify.arrangement
    sigmas = [region_of_objective(arr, c) for c in claim["params"]["objectives"]]
    bad = {reg.sigma for reg in ctx.classify.bad}
    return {
        "all_bad": all(s in bad for s in sigmas),
        "distinct": len(set(sigmas)),
        "cover_all_bad": set(sigmas) == bad,
    }


@_evaluator("bad-hamming-profile")
def _ev_bad_hamming(ctx: _Ctx, claim: dict) -> list[int]:
    arr = ctx.classify.arrangement
    ref = region_of_objective(arr, claim["params"]["reference_objective"])
    ref_edges = arr.expand_to_edges(ref)
    return sorted(
        hamming_distance(ref_edges, arr.expand_to_edges(reg.sigma))
        for reg in ctx.classify.bad
        if reg.sigma != ref
    )


@_evaluator("worst-start-not-source")
def _ev_worst_not_source(ctx: _Ctx, claim: dict) -> bool:
    apex = max(ctx.apices, key=lambda i: ctx.graph.vertices[i].point)
    return all(reg.source != apex for reg in ctx.classify.bad)


@_evaluator("matroid-uniform")
def _ev_matroid(ctx: _Ctx, claim: dict) -> bool:
    return edge_direction_matroid_uniform(ctx.graph)


@_evaluator("nonbad-diameter-bound")
def _ev_nonbad_bound(ctx: _Ctx, claim: dict) -> bool:
    rep = ctx.classify
    bad = {reg.sigma for reg in rep.bad}
    return all(reg.diameter <= rep.hirsch_bound for reg in rep.regions if reg.sigma not in bad)


@_evaluator("representative-walks")
def _ev_rep_walks(ctx: _Ctx, claim: dict) -> dict:
    pr = claim["params"]
    start, target = _vec_of(pr["start"]), _vec_of(pr["target"])
    contain, anti, all_valid = [], [], True
    for k, c in enumerate(pr["objectives"]):
        w1 = containment_spindle_walk(ctx.p, start, target, objective=c)
        w2 = antiblocking_walk(ctx.p, start, objective=c)
        r1, r2 = validate_walk(ctx.p, w1), validate_walk(ctx.p, w2)
        ok = (
            r1.ok and r2.ok and r1.monotone is True and r2.monotone is True
            and w1.end == target and w2.end == target
        )
        all_valid = all_valid and ok
        contain.append(len(w1.steps))
        anti.append(len(w2.steps))
        if k == 0:
            ctx.certificates[claim["id"]] = {
                "containment": json.loads(walk_to_json(ctx.p, w1)),
                "antiblocking": json.loads(walk_to_json(ctx.p, w2)),
            }
    return {"containment_lengths": contain, "antiblocking_lengths": anti, "all_valid": all_valid}


@_evaluator("apex-triple-span-excluded")
def _ev_triple_span(ctx: _Ctx, claim: dict) -> bool:
    return triple_span_excludes(ctx.p, _vec_of(claim["params"]["vertex"]))


@_evaluator("depth3-search-absent")
def _ev_depth3(ctx: _Ctx, claim: dict) -> bool:
    pr = claim["params"]
    found = bounded_depth_search(ctx.p, _vec_of(pr["start"]), _vec_of(pr["target"]), pr["max_depth"])
    return found is None


@_evaluator("two-step-forward", "two-step-reverse")
def _ev_two_step(ctx: _Ctx, claim: dict) -> dict:
    pr = claim["params"]
    start, mid, end = _vec_of(pr["from"]), _vec_of(pr["midpoint"]), _vec_of(pr["to"])
    s1 = take_step(ctx.p, start, vsub(mid, start))
    s2 = take_step(ctx.p, s1.point, vsub(end, s1.point))
    w = WalkCertificate(start=start, steps=(s1, s2))
    rep = validate_walk(ctx.p, w)
    ctx.certificates[claim["id"]] = json.loads(walk_to_json(ctx.p, w))
    return {
        "length": len(w.steps),
        "valid": rep.ok and w.end == end,
        "midpoint": _vec_str(s1.point),
        "step_directions": [" ".join(map(str, s.g)) for s in w.steps],
        "directions_are_circuits": all(is_circuit_direction(ctx.p, s.g) for s in w.steps),
    }


@_evaluator("two-step-absent-forward", "two-step-absent-reverse")
def _ev_two_step_absent(ctx: _Ctx, claim: dict) -> bool:
    pr = claim["params"]
    ctx.circuits
    return two_step_reachable(ctx.p, _vec_of(pr["from"]), _vec_of(pr["to"])) is None


@_evaluator("e1-not-circuit")
def _ev_e1_not_circuit(ctx: _Ctx, claim: dict) -> bool:
    return is_circuit_direction(ctx.p, _vec_of(claim["params"]["direction"]))


@_evaluator("boundedness-battery", "battery-details")
def _ev_battery(ctx: _Ctx, claim: dict) -> list[bool]:
    return [is_bounded(ctx.p.sub(labels)) for labels in claim["params"]["batteries"]]


@_evaluator("boundedness-conditions")
def _ev_battery_conditions(ctx: _Ctx, claim: dict) -> dict:
    pr = claim["params"]
    return {
        "condition_i": any(is_bounded(ctx.p.sub(labels)) for labels in pr["condition_i"]),
        "condition_ii": any(is_bounded(ctx.p.sub(labels)) for labels in pr["condition_ii"]),
    }


@_evaluator("symmetry-fixes-hrep")
def _ev_symmetry(ctx: _Ctx, claim: dict) -> list[bool]:
    return [
        hrep_equivalent(apply_linear_map(ctx.p, t), ctx.p) is not None
        for t in claim["params"]["maps"]
    ]


@_evaluator("qualifying-2faces")
def _ev_qualifying(ctx: _Ctx, claim: dict) -> dict:
    entries = ctx.scan.at_distance(3)
    a, b = ctx.scan.apices
    return {
        "total": len(entries),
        "per_apex": [sum(1 for e in entries if e.apex == a), sum(1 for e in entries if e.apex == b)],
    }


@_evaluator("unbounded-relaxations-at-distance-3")
def _ev_unbounded_at_3(ctx: _Ctx, claim: dict) -> int:
    return sum(1 for e in ctx.scan.at_distance(3) if e.unbounded)


def _face_and_apices(ctx: _Ctx, rows: Sequence[str]):
    face = face_by_labels(ctx.p, rows)
    ids = set(face.vertex_ids)
    a, b = ctx.apices
    if a in ids and b in ids:
        raise HRepError("face contains both apices")
    on = a if a in ids else b
    if on not in ids:
        raise HRepError("face contains neither apex")
    return face, on, (b if on == a else a)


@_evaluator("figure-face-distance")
def _ev_face_distance(ctx: _Ctx, claim: dict) -> int:
    face, _on, opp = _face_and_apices(ctx, claim["params"]["face"])
    dist = ctx.dists_from(opp)
    return min(dist[i] for i in face.vertex_ids)


@_evaluator("figure-face-entry-vertices")
def _ev_face_entries(ctx: _Ctx, claim: dict) -> list[list[str]]:
    face, _on, opp = _face_and_apices(ctx, claim["params"]["face"])
    dist = ctx.dists_from(opp)
    return _sort_label_sets(
        ctx.vertex_labels(i) for i in face.vertex_ids if dist[i] == 3
    )


@_evaluator("figure-face-a", "figure-face-b", "figure-face-c", "figure-face-d")
def _ev_figure_face(ctx: _Ctx, claim: dict) -> dict:
    pr = claim["params"]
    face, on, opp = _face_and_apices(ctx, pr["face"])
    want = "1" if pr["apex"] == "+" else "-1"
    if ctx.graph.vertices[on].point[0] != Fraction(want):
        raise HRepError("face contains the other apex than stated")
    face_rows = set(pr["face"])
    d_opp = ctx.dists_from(opp)
    d_on = ctx.dists_from(on)
    extras = {
        i: [lab for lab in ctx.vertex_labels(i) if lab not in face_rows]
        for i in face.vertex_ids
    }
    expected = claim["expected"]
    confirmed_d1 = [
        s for s in expected["distance_1"]
        if ctx.tight_ids.get(frozenset(s)) is not None and d_opp[ctx.tight_ids[frozenset(s)]] == 1
    ]
    confirmed_d2 = [
        s for s in expected["distance_2"]
        if ctx.tight_ids.get(frozenset(s)) is not None and d_opp[ctx.tight_ids[frozenset(s)]] == 2
    ]
    return {
        "face_vertices": _sort_label_sets(extras[i] for i in face.vertex_ids if i != on),
        "distance_1": confirmed_d1,
        "distance_2": confirmed_d2,
        "entry": _sort_label_sets(
            extras[i] for i in face.vertex_ids if d_opp[i] == 3 and d_on[i] == 3
        ),
    }


def _run_face_walk(ctx: _Ctx, spec: dict) -> tuple[dict, dict]:
    face, _on, _opp = _face_and_apices(ctx, spec["face"])
    u, v = ctx.vid(spec["from"]), ctx.vid(spec["to"])
    w = circuit_length_upper_via_face(ctx.p, u, v, face)
    rep = validate_walk(ctx.p, w)
    summary = {
        "length": len(w.steps),
        "valid": rep.ok and w.end == ctx.graph.vertices[v].point,
        "non_edge_steps": non_edge_step_count(ctx.p, w),
    }
    cert = {
        "face": list(spec["face"]),
        "walk": json.loads(walk_to_json(ctx.p, w)),
        "waypoints": certificate_path_labels(ctx.p, w),
    }
    return summary, cert


@_evaluator("walk-forward", "walk-reverse")
def _ev_face_walk(ctx: _Ctx, claim: dict) -> dict:
    summary, cert = _run_face_walk(ctx, claim["params"])
    ctx.certificates[claim["id"]] = cert
    return summary


@_evaluator("walks-via-figure-faces")
def _ev_face_walks(ctx: _Ctx, claim: dict) -> list[dict]:
    summaries, certs = [], []
    for spec in claim["params"]["walks"]:
        summary, cert = _run_face_walk(ctx, spec)
        summaries.append(summary)
        certs.append(cert)
    ctx.certificates[claim["id"]] = certs
    return summaries


def _combine_rows(ctx: _Ctx, coeffs: dict[str, Fraction]) -> tuple[Fraction, ...]:
    rows = {lab: row for lab, row in zip(ctx.p.labels, ctx.p.rows)}
    total = [Fraction(0)] * ctx.p.dim
    for lab, c in coeffs.items():
        total = [t + c * x for t, x in zip(total, rows[lab])]
    return tuple(total)


@_evaluator("combination-negative-e1", "combination-negative-e1-alt",
            "combination-positive-e1", "sum-rows-1-2", "sum-rows-4",
            "sum-rows-13-to-24")
def _ev_combination(ctx: _Ctx, claim: dict) -> str:
    coeffs = {lab: Fraction(c) for lab, c in claim["params"]["coefficients"].items()}
    return _vec_str(_combine_rows(ctx, coeffs))


@_evaluator("beta-combination")
def _ev_beta_combination(ctx: _Ctx, claim: dict) -> dict:
    pr = claim["params"]
    beta = Fraction(549 * 38 + 54 * 22) - Fraction(2999, 50)
    part_a = _combine_rows(ctx, {lab: Fraction(c) for lab, c in pr["coefficients_a"].items()})
    coeffs_b = {
        lab: Fraction(c.removesuffix("*beta")) * beta
        for lab, c in pr["coefficients_b"].items()
    }
    part_b = _combine_rows(ctx, coeffs_b)
    total = tuple(a + b for a, b in zip(part_a, part_b))
    return {
        "beta": str(beta),
        "rows_22_24_25": _vec_str(part_a),
        "rows_16_17": _vec_str(part_b),
        "total": _vec_str(total),
    }


# ---------------------------------------------------------------------------
# Case runner
# ---------------------------------------------------------------------------

def verify_case(case: str, cache: ResultCache | None = None, jobs: int = 1) -> CaseReport:
    """Run every claim of one case (or of all cases) and report the outcomes.

    A claim passes iff its computed value equals the manifest value
    exactly; evaluator exceptions are recorded as failing computed
    values instead of aborting the remaining claims.
    """
    if case == "all":
        subs = [verify_case(c, cache=cache, jobs=jobs) for c in CASES]
        return CaseReport(
            case="all",
            results=tuple(r for s in subs for r in s.results),
            certificates={k: v for s in subs for k, v in s.certificates.items()},
        )
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES + ('all',)}")
    ctx = _Ctx(case, cache=cache, jobs=jobs)
    results = []
    for claim in claims_for(case):
        suffix = claim["id"].split(".", 1)[1]
        fn = _EVALUATORS[suffix]
        t0 = time.perf_counter()
        try:
            computed: Any = fn(ctx, claim)
        except Exception as exc:
            computed = {"error": f"{type(exc).__name__}: {exc}"}
        runtime = round(time.perf_counter() - t0, 3)
        results.append(
            ClaimResult(
                claim_id=claim["id"],
                statement=claim["statement"],
                provenance=claim["provenance"],
                expected=claim["expected"],
                computed=computed,
                passed=computed == claim["expected"],
                runtime=runtime,
            )
        )
    return CaseReport(case=case, results=tuple(results), certificates=dict(ctx.certificates))

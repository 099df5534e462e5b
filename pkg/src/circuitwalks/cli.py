"""Command line interface.

Every subcommand loads one H-format description (``--input`` accepts a
file path or a bundled dataset name), computes exactly, and renders to
the requested ``--format``. Outputs are deterministic: the same invocation
produces byte-identical text regardless of ``--jobs`` or cache state.

Exit codes: 0 success, 1 computation failure, 2 usage error, 3 a verified
claim failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .cache import ResultCache
from .circuits import circuits_csv
from .datasets import BUNDLED, load
from .faceanalysis import (
    FaceAnalysisError,
    cfv,
    circuit_length_upper_via_face,
    face_scan_csv,
    face_scan_json,
    face_scan_rows,
    non_edge_step_count,
    scan_2faces_with_apex,
)
from .harness import CASES, cached_circuits, cached_graph, verify_case
from .hrep import HRep, HRepError, wedge_over_facet, write_hrep
from .orientations import (
    OrientationError,
    build_edge_arrangement,
    classify_regions,
    digraph_dot,
    enumerate_regions,
    is_acyclic,
    monotone_edge_diameter,
    orient_graph,
    region_report_csv,
    region_report_json,
    sigma_string,
)
from .vertexgraph import (
    PolyGraph,
    detect_spindle,
    enumerate_2faces,
    face_by_labels,
    graph_distance,
    graph_dot,
    shortest_path,
    spindle_apices,
    vertex_csv,
)
from .walks import (
    WalkError,
    antiblocking_walk,
    bounded_depth_search,
    is_antiblocking,
    one_step_reach,
    two_step_reachable,
    validate_walk,
    walk_to_json,
)


class UsageError(ValueError):
    pass


_COMPUTE_ERRORS = (
    HRepError,
    WalkError,
    OrientationError,
    FaceAnalysisError,
    FileNotFoundError,
    KeyError,
    ValueError,
    ZeroDivisionError,
    OverflowError,
)


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------

def _load_input(args) -> HRep:
    if not args.input:
        raise UsageError(
            "--input is required; give a file path or one of: " + ", ".join(BUNDLED)
        )
    return load(args.input)


def _cache(args) -> ResultCache:
    return ResultCache(args.cache_dir)


def _graph(p: HRep, args) -> PolyGraph:
    return cached_graph(p, _cache(args), jobs=args.jobs)


def _need_format(args, *allowed: str) -> None:
    if args.format not in allowed:
        raise UsageError(
            f"format {args.format!r} is not supported by this subcommand "
            f"(choose from: {', '.join(allowed)})"
        )


def _pt(x: Sequence) -> str:
    return " ".join(str(c) for c in x)


def _pt_list(x: Sequence) -> list[str]:
    return [str(c) for c in x]


def _parse_point(text: str) -> tuple[Fraction, ...]:
    parts = text.replace(",", " ").split()
    if not parts:
        raise UsageError("empty point")
    try:
        return tuple(Fraction(t) for t in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"cannot parse point {text!r}: {e}") from None


def _resolve_point(p: HRep, args, spec: str) -> tuple[Fraction, ...]:
    """A point given as coordinates, ``apex:0``/``apex:1``, or ``id:K``."""
    if spec.startswith("apex:"):
        pair = spindle_apices(p)
        idx = int(spec[5:])
        if idx not in (0, 1):
            raise UsageError("apex index must be 0 or 1")
        g = _graph(p, args)
        return g.vertices[pair[idx]].point
    if spec.startswith("id:"):
        g = _graph(p, args)
        i = int(spec[3:])
        if not 0 <= i < len(g.vertices):
            raise UsageError(f"vertex id {i} out of range 0..{len(g.vertices) - 1}")
        return g.vertices[i].point
    pt = _parse_point(spec)
    if len(pt) != p.dim:
        raise UsageError(f"point has {len(pt)} coordinates, expected {p.dim}")
    return pt


def _resolve_vertex(p: HRep, args, spec: str) -> int:
    g = _graph(p, args)
    try:
        return g.index_of_point(_resolve_point(p, args, spec))
    except ValueError:
        raise UsageError(f"{spec!r} is not a vertex") from None


def _labels_arg(text: str) -> list[str]:
    labs = [t for t in text.replace(",", " ").split() if t]
    if not labs:
        raise UsageError("empty label list")
    return labs


def _walk_text(p: HRep, w) -> str:
    rep = validate_walk(p, w)
    lines = [f"start  {_pt(w.start)}"]
    for i, s in enumerate(w.steps, 1):
        entered = ",".join(s.entered) if s.entered else "-"
        lines.append(
            f"step {i}: direction {_pt(s.g)}  length {s.alpha}  "
            f"-> {_pt(s.point)}  entered {entered}"
        )
    lines.append(f"steps {len(w.steps)}  valid {rep.ok}")
    if rep.monotone is not None:
        lines.append(f"monotone {rep.monotone}")
    return "\n".join(lines)


def _emit(text: str, args) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Subcommand handlers (each returns the rendered text and an exit code)
# ---------------------------------------------------------------------------

def _cmd_vertices(args) -> tuple[str, int]:
    _need_format(args, "text", "json", "csv")
    p = _load_input(args)
    g = _graph(p, args)
    if args.format == "csv":
        return vertex_csv(g), 0
    if args.format == "json":
        obj = {
            "count": len(g.vertices),
            "vertices": [
                {"id": i, "label": g.vertex_label(i), "point": _pt_list(v.point)}
                for i, v in enumerate(g.vertices)
            ],
        }
        return json.dumps(obj, indent=2), 0
    lines = [f"{len(g.vertices)} vertices"]
    for i, v in enumerate(g.vertices):
        lines.append(f"{i}\t{g.vertex_label(i)}\t{_pt(v.point)}")
    return "\n".join(lines), 0


def _cmd_graph(args) -> tuple[str, int]:
    p = _load_input(args)
    g = _graph(p, args)
    if args.format == "dot":
        return graph_dot(g), 0
    if args.format == "json":
        obj = {
            "vertices": len(g.vertices),
            "edges": [[u, v] for u, v in g.edges],
        }
        return json.dumps(obj, indent=2), 0
    if args.format == "csv":
        lines = ["u,v,u_label,v_label"]
        for u, v in g.edges:
            lines.append(f"{u},{v},{g.vertex_label(u)},{g.vertex_label(v)}")
        return "\n".join(lines), 0
    lines = [f"{len(g.vertices)} vertices, {len(g.edges)} edges"]
    for u, v in g.edges:
        lines.append(f"{u} -- {v}\t{g.vertex_label(u)} | {g.vertex_label(v)}")
    return "\n".join(lines), 0


def _cmd_circuits(args) -> tuple[str, int]:
    _need_format(args, "text", "json", "csv")
    p = _load_input(args)
    cs = cached_circuits(p, _cache(args))
    if args.format == "csv":
        return circuits_csv(p), 0
    if args.format == "json":
        obj = {
            "canonical": len(cs),
            "signed": 2 * len(cs),
            "circuits": [
                {"direction": list(c.g), "witness": list(c.witness)} for c in cs
            ],
        }
        return json.dumps(obj, indent=2), 0
    lines = [f"{len(cs)} canonical circuit directions ({2 * len(cs)} signed)"]
    for c in cs:
        lines.append(f"{_pt(c.g)}\t({' '.join(c.witness)})")
    return "\n".join(lines), 0


def _cmd_distance(args) -> tuple[str, int]:
    _need_format(args, "text", "json", "csv")
    p = _load_input(args)
    g = _graph(p, args)
    u = _resolve_vertex(p, args, args.src)
    v = _resolve_vertex(p, args, args.dst)
    d = graph_distance(g, u, v)
    path = shortest_path(g, u, v)
    labels = [g.vertex_label(i) for i in path]
    if args.format == "json":
        obj = {"distance": d, "path_ids": path, "path_labels": labels}
        return json.dumps(obj, indent=2), 0
    if args.format == "csv":
        lines = ["step,id,label"]
        for k, i in enumerate(path):
            lines.append(f"{k},{i},{labels[k]}")
        return "\n".join(lines), 0
    return f"distance {d}\npath: " + " -> ".join(labels), 0


def _classify_text(p: HRep, report, g: PolyGraph) -> str:
    lines = [
        f"{report.total} regions of the edge-direction arrangement",
        f"facet-count walk bound: {report.hirsch_bound}",
        f"regions beyond the bound: {len(report.bad)}",
    ]
    zero = tuple(Fraction(0) for _ in range(p.dim))
    try:
        zid = g.index_of_point(zero)
    except ValueError:
        zid = None
    if zid is not None:
        lines.append(
            f"orientations with sink at {g.vertex_label(zid)}: {report.sink_count(zid)}"
        )
    for reg in report.bad:
        sigma = sigma_string(report.arrangement.expand_to_edges(reg.sigma))
        worst = " ".join(g.vertex_label(i) for i in reg.worst)
        lines.append(
            f"bad region {sigma}  witness {_pt(reg.witness)}  "
            f"sink {g.vertex_label(reg.sink)}  diameter {reg.diameter}  worst {worst}"
        )
    return "\n".join(lines)


def _cmd_orientations(args) -> tuple[str, int]:
    p = _load_input(args)
    g = _graph(p, args)
    if args.mode == "census":
        _need_format(args, "text", "json")
        arr = build_edge_arrangement(g)
        regs = enumerate_regions(arr)
        if args.format == "json":
            return json.dumps({"regions": len(regs)}, indent=2), 0
        return f"{len(regs)} regions of the edge-direction arrangement", 0
    if args.mode == "classify":
        _need_format(args, "text", "json", "csv")
        report = classify_regions(p, jobs=args.jobs)
        if args.format == "json":
            return region_report_json(report, g), 0
        if args.format == "csv":
            return region_report_csv(report, g), 0
        return _classify_text(p, report, g), 0
    # mode == "show": one generic orientation, rendered as a digraph
    _need_format(args, "text", "json", "dot")
    if not args.objective:
        raise UsageError("--objective is required for 'orientations show'")
    c = _parse_point(args.objective)
    if len(c) != p.dim:
        raise UsageError(f"objective has {len(c)} coordinates, expected {p.dim}")
    d = orient_graph(g, c)
    if not is_acyclic(d):
        raise UsageError("the objective is constant on an edge; perturb it")
    diam, worst, sink = monotone_edge_diameter(d)
    if args.format == "dot":
        return digraph_dot(g, d), 0
    if args.format == "json":
        obj = {
            "objective": _pt_list(c),
            "arcs": [[u, v] for u, v in sorted(d.arcs)],
            "sink": g.vertex_label(sink),
            "monotone_diameter": diam,
            "worst_starts": [g.vertex_label(i) for i in worst],
        }
        return json.dumps(obj, indent=2), 0
    _need_format(args, "text", "json", "dot")
    lines = [
        f"objective {_pt(c)}",
        f"sink {g.vertex_label(sink)}",
        f"monotone edge diameter {diam}",
        "worst starts: " + " ".join(g.vertex_label(i) for i in worst),
    ]
    for u, v in sorted(d.arcs):
        lines.append(f"{g.vertex_label(u)} -> {g.vertex_label(v)}")
    return "\n".join(lines), 0


def _cmd_classify(args) -> tuple[str, int]:
    args.mode = "classify"
    return _cmd_orientations(args)


def _cmd_walk(args) -> tuple[str, int]:
    _need_format(args, "text", "json")
    p = _load_input(args)
    if args.mode == "one-step":
        y = _resolve_point(p, args, args.src)
        reach = one_step_reach(p, y)
        if args.format == "json":
            obj = {
                "from": _pt_list(y),
                "count": len(reach),
                "reachable": [
                    {"direction": list(g_), "point": _pt_list(z)} for g_, z in reach
                ],
            }
            return json.dumps(obj, indent=2), 0
        lines = [f"{len(reach)} points reachable in one maximal circuit step"]
        for g_, z in reach:
            lines.append(f"{_pt(g_)} -> {_pt(z)}")
        return "\n".join(lines), 0

    if not args.dst:
        raise UsageError(f"--to is required for 'circuit-walk {args.mode}'")
    u = _resolve_point(p, args, args.src)
    v = _resolve_point(p, args, args.dst)
    if args.mode == "two-step":
        w = two_step_reachable(p, u, v)
        depth = 2
    else:
        if args.max_depth is None:
            raise UsageError("--max-depth is required for 'circuit-walk search'")
        w = bounded_depth_search(p, u, v, args.max_depth)
        depth = args.max_depth
    if w is None:
        if args.format == "json":
            return json.dumps({"found": False, "max_depth": depth}, indent=2), 0
        return f"no circuit walk of length <= {depth} found", 0
    if args.format == "json":
        return walk_to_json(p, w), 0
    return _walk_text(p, w), 0


def _cmd_spindle(args) -> tuple[str, int]:
    _need_format(args, "text", "json")
    p = _load_input(args)
    g = _graph(p, args)
    pair = detect_spindle(p)
    if args.mode == "detect":
        if pair is None:
            if args.format == "json":
                return json.dumps({"spindle": False}, indent=2), 0
            return "not a spindle", 0
        u, v = pair
        nu = bin(g.vertices[u].tight).count("1")
        nv = bin(g.vertices[v].tight).count("1")
        if args.format == "json":
            obj = {
                "spindle": True,
                "apices": [
                    {"id": u, "label": g.vertex_label(u), "point": _pt_list(g.vertices[u].point), "tight_rows": nu},
                    {"id": v, "label": g.vertex_label(v), "point": _pt_list(g.vertices[v].point), "tight_rows": nv},
                ],
            }
            return json.dumps(obj, indent=2), 0
        return (
            f"spindle with apices {g.vertex_label(u)} = ({_pt(g.vertices[u].point)}) "
            f"[{nu} rows] and {g.vertex_label(v)} = ({_pt(g.vertices[v].point)}) [{nv} rows]"
        ), 0
    # mode == "length"
    u, v = spindle_apices(p)
    d = graph_distance(g, u, v)
    if args.format == "json":
        obj = {"apices": [g.vertex_label(u), g.vertex_label(v)], "distance": d}
        return json.dumps(obj, indent=2), 0
    return f"apex distance {d}", 0


def _cmd_antiblocking(args) -> tuple[str, int]:
    _need_format(args, "text", "json")
    p = _load_input(args)
    if args.mode == "check":
        b = is_antiblocking(p)
        if args.format == "json":
            return json.dumps({"antiblocking": b}, indent=2), 0
        return f"anti-blocking: {'yes' if b else 'no'}", 0
    # mode == "walk"
    if not args.src:
        raise UsageError("--from is required for 'antiblocking walk'")
    x = _resolve_point(p, args, args.src)
    c = _parse_point(args.objective) if args.objective else None
    w = antiblocking_walk(p, x, objective=c)
    if args.format == "json":
        return walk_to_json(p, w), 0
    return _walk_text(p, w), 0


def _cmd_twoface(args) -> tuple[str, int]:
    p = _load_input(args)
    g = _graph(p, args)
    if args.mode == "enum":
        _need_format(args, "text", "json", "csv")
        faces = enumerate_2faces(p)

        def rows_of(face):
            return [p.labels[k] for k in range(p.num_ineq) if face.tight >> k & 1]

        if args.format == "json":
            obj = {
                "count": len(faces),
                "faces": [
                    {
                        "rows": rows_of(f),
                        "vertices": [g.vertex_label(i) for i in f.vertex_ids],
                    }
                    for f in faces
                ],
            }
            return json.dumps(obj, indent=2), 0
        if args.format == "csv":
            lines = ["rows,vertex_count,vertices"]
            for f in faces:
                lines.append(
                    "{},{},{}".format(
                        " ".join(rows_of(f)),
                        len(f.vertex_ids),
                        " ".join(g.vertex_label(i) for i in f.vertex_ids),
                    )
                )
            return "\n".join(lines), 0
        lines = [f"{len(faces)} two-dimensional faces"]
        for f in faces:
            lines.append(
                f"{' '.join(rows_of(f))}\t{len(f.vertex_ids)} vertices: "
                + " ".join(g.vertex_label(i) for i in f.vertex_ids)
            )
        return "\n".join(lines), 0

    if args.mode == "scan":
        _need_format(args, "text", "json", "csv")
        report = scan_2faces_with_apex(p)
        if args.format == "json":
            return face_scan_json(p, report, with_certificates=args.certificates), 0
        if args.format == "csv":
            return face_scan_csv(p, report), 0
        a1, a2 = report.apices
        lines = [
            f"apex-face incidences: {report.total}",
            f"per apex: {g.vertex_label(a1)} {report.count_for(a1)}, "
            f"{g.vertex_label(a2)} {report.count_for(a2)}",
            f"unbounded relaxations: {len(report.unbounded_entries())}",
            f"at distance 3 from the opposite apex: {len(report.at_distance(3))}",
        ]
        for row in face_scan_rows(p, report, with_certificates=args.certificates):
            line = (
                f"face {' '.join(row['face_rows'])}  apex {row['apex']}  "
                f"unbounded {row['relaxation_unbounded']}  "
                f"distance {row['distance_from_opposite']}  "
                f"nearest {' '.join(row['nearest_vertices'])}"
            )
            if "certificate_length" in row:
                line += (
                    f"  walk length {row['certificate_length']}: "
                    + " -> ".join(row["certificate_path"])
                )
            lines.append(line)
        return "\n".join(lines), 0

    # mode == "cfv"
    _need_format(args, "text", "json")
    if not args.face:
        raise UsageError("--face is required for 'twoface cfv'")
    if not args.at:
        raise UsageError("--at is required for 'twoface cfv'")
    face = face_by_labels(p, _labels_arg(args.face))
    ids = sorted({_resolve_vertex(p, args, s) for s in args.at})
    res = cfv(p, face, ids)
    if args.format == "json":
        obj = {
            "face_rows": [p.labels[k] for k in range(p.num_ineq) if face.tight >> k & 1],
            "chosen_vertices": [g.vertex_label(i) for i in ids],
            "dropped": list(res.dropped),
            "retained": list(res.retained),
            "unbounded": res.unbounded,
            "recession_rays": [list(r) for r in res.recession_rays_ambient()],
            "lineality": [list(r) for r in res.lineality_ambient()],
        }
        return json.dumps(obj, indent=2), 0
    lines = [
        "chosen vertices: " + " ".join(g.vertex_label(i) for i in ids),
        "dropped rows: " + (" ".join(res.dropped) or "-"),
        "retained rows: " + (" ".join(res.retained) or "-"),
        f"relaxation unbounded: {res.unbounded}",
    ]
    for r in res.recession_rays_ambient():
        lines.append(f"extreme ray {_pt(r)}")
    for r in res.lineality_ambient():
        lines.append(f"lineality {_pt(r)}")
    return "\n".join(lines), 0


def _cmd_wedge(args) -> tuple[str, int]:
    _need_format(args, "text", "json")
    p = _load_input(args)
    if not args.facet:
        raise UsageError("--facet is required")
    w = wedge_over_facet(p, args.facet)
    text = write_hrep(w)
    if args.format == "json":
        obj = {"dim": w.dim, "inequalities": w.num_ineq, "hrep": text}
        return json.dumps(obj, indent=2), 0
    return text, 0


def _verify_input_pipeline(args) -> tuple[str, int]:
    """Spindle pipeline for a user-supplied H-file: apex distance, the
    apex-containing 2-face scan, and one assembled walk per direction."""
    p = _load_input(args)
    g = _graph(p, args)
    u, v = spindle_apices(p)
    d = graph_distance(g, u, v)
    report = scan_2faces_with_apex(p)
    directions = []
    worst = 0
    for src, dst in ((u, v), (v, u)):
        best = None
        for e in report.entries:
            if e.apex != dst or not e.unbounded:
                continue
            key = (e.distance, tuple(sorted(
                p.labels[k] for k in range(p.num_ineq) if e.face.tight >> k & 1
            )))
            if best is None or key < best[0]:
                best = (key, e)
        entry_obj = {
            "from": g.vertex_label(src),
            "to": g.vertex_label(dst),
        }
        if best is None:
            entry_obj["walk"] = None
        else:
            e = best[1]
            w = circuit_length_upper_via_face(p, src, dst, e.face)
            rep = validate_walk(p, w)
            entry_obj["face_rows"] = list(best[0][1])
            entry_obj["length"] = len(w)
            entry_obj["valid"] = rep.ok
            entry_obj["non_edge_steps"] = non_edge_step_count(p, w)
            worst = max(worst, len(w))
            if not rep.ok:
                entry_obj["problems"] = list(rep.problems)
        directions.append(entry_obj)
    ok = all(e.get("walk", True) is not None and e.get("valid", False) for e in directions)
    bound_ok = True
    if args.max_depth is not None:
        bound_ok = ok and worst <= args.max_depth
    obj = {
        "input": args.input,
        "apices": [g.vertex_label(u), g.vertex_label(v)],
        "apex_distance": d,
        "walks": directions,
        "circuit_distance_upper_bound": worst if ok else None,
    }
    if args.max_depth is not None:
        obj["bound"] = args.max_depth
        obj["within_bound"] = bound_ok
    code = 0 if (ok and bound_ok) else 3
    if args.format == "json":
        return json.dumps(obj, indent=2), code
    lines = [
        f"apices: {obj['apices'][0]} {obj['apices'][1]}",
        f"edge-graph apex distance: {d}",
    ]
    for e in directions:
        if e.get("walk", True) is None:
            lines.append(f"walk {e['from']} -> {e['to']}: no usable unbounded 2-face")
        else:
            lines.append(
                f"walk {e['from']} -> {e['to']}: length {e['length']} via face "
                f"{' '.join(e['face_rows'])}  valid {e['valid']}  "
                f"non-edge steps {e['non_edge_steps']}"
            )
    if ok:
        lines.append(f"circuit-distance upper bound: {worst}")
    if args.max_depth is not None:
        lines.append(f"within bound {args.max_depth}: {bound_ok}")
    return "\n".join(lines), code


def _cmd_verify(args) -> tuple[str, int]:
    _need_format(args, "text", "json", "csv")
    if args.input:
        return _verify_input_pipeline(args)
    report = verify_case(args.case, cache=_cache(args), jobs=args.jobs)
    code = 0 if report.ok else 3
    if args.format == "json":
        return report.to_json(), code
    if args.format == "csv":
        lines = ["claim_id,provenance,passed,runtime_seconds"]
        for r in report.results:
            lines.append(f"{r.claim_id},{r.provenance},{r.passed},{r.runtime:.2f}")
        return "\n".join(lines), code
    return "\n".join(report.summary_lines()), code


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE",
                        help="H-format file path or bundled dataset name")
    common.add_argument("--format", choices=("text", "json", "csv", "dot"),
                        default="text", help="output format (default: text)")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for the heavy enumerations")
    common.add_argument("--cache-dir", metavar="DIR",
                        help="result cache directory (default: user cache dir)")
    common.add_argument("--max-depth", type=int, metavar="K",
                        help="depth bound for walk searches")
    common.add_argument("--out", metavar="FILE",
                        help="write the output to FILE instead of stdout")

    ap = argparse.ArgumentParser(
        prog="circuitwalks",
        description="Exact circuit-walk analysis of polytopes given by inequalities.",
    )
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    q = sub.add_parser("vertices", parents=[common],
                       help="enumerate the vertices")
    q.set_defaults(handler=_cmd_vertices)

    q = sub.add_parser("graph", parents=[common],
                       help="vertex-edge graph of the polytope")
    q.set_defaults(handler=_cmd_graph)

    q = sub.add_parser("circuits", parents=[common],
                       help="enumerate the circuit directions")
    q.set_defaults(handler=_cmd_circuits)

    q = sub.add_parser("distance", parents=[common],
                       help="edge-graph distance between two vertices")
    q.add_argument("--from", dest="src", required=True, metavar="V",
                   help="vertex: coordinates, apex:0/apex:1, or id:K")
    q.add_argument("--to", dest="dst", required=True, metavar="V")
    q.set_defaults(handler=_cmd_distance)

    q = sub.add_parser("orientations", parents=[common],
                       help="regions of the edge-direction arrangement")
    q.add_argument("mode", choices=("census", "classify", "show"))
    q.add_argument("--objective", metavar="C",
                   help="objective coordinates for 'show'")
    q.set_defaults(handler=_cmd_orientations)

    q = sub.add_parser("classify", parents=[common],
                       help="shorthand for 'orientations classify'")
    q.set_defaults(handler=_cmd_classify)

    q = sub.add_parser("circuit-walk", parents=[common],
                       help="search for certified circuit walks")
    q.add_argument("mode", choices=("search", "one-step", "two-step"))
    q.add_argument("--from", dest="src", required=True, metavar="P",
                   help="start point: coordinates, apex:0/apex:1, or id:K")
    q.add_argument("--to", dest="dst", metavar="P",
                   help="target point (search and two-step)")
    q.set_defaults(handler=_cmd_walk)

    q = sub.add_parser("spindle", parents=[common],
                       help="detect the two-apex structure")
    q.add_argument("mode", choices=("detect", "length"))
    q.set_defaults(handler=_cmd_spindle)

    q = sub.add_parser("antiblocking", parents=[common],
                       help="anti-blocking structure and coordinate walks")
    q.add_argument("mode", choices=("check", "walk"))
    q.add_argument("--from", dest="src", metavar="P",
                   help="start point for 'walk'")
    q.add_argument("--objective", metavar="C",
                   help="optional objective the walk must improve")
    q.set_defaults(handler=_cmd_antiblocking)

    q = sub.add_parser("twoface", parents=[common],
                       help="2-faces and their dropped-row relaxations")
    q.add_argument("mode", choices=("enum", "scan", "cfv"))
    q.add_argument("--face", metavar="ROWS",
                   help="comma-separated row labels naming a 2-face (cfv)")
    q.add_argument("--at", action="append", metavar="V",
                   help="chosen vertex for cfv; repeatable")
    q.add_argument("--certificates", action="store_true",
                   help="attach assembled walks to the scan output")
    q.set_defaults(handler=_cmd_twoface)

    q = sub.add_parser("wedge", parents=[common],
                       help="wedge of the polytope over one facet")
    q.add_argument("--facet", metavar="LABEL", required=True)
    q.set_defaults(handler=_cmd_wedge)

    q = sub.add_parser("verify-paper", parents=[common],
                       help="run the recorded claim suites for the bundled data")
    q.add_argument("--case", choices=CASES + ("all",), default="all")
    q.set_defaults(handler=_cmd_verify)

    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        text, code = args.handler(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except _COMPUTE_ERRORS as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 1
    _emit(text, args)
    return code


if __name__ == "__main__":
    sys.exit(main())

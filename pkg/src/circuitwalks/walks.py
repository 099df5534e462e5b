"""Maximal circuit steps, walk certificates, searches, and the three
constructive walk algorithms (same-cone, containment, anti-blocking).

A walk step moves from a feasible point along a circuit direction until
some constraint becomes tight; the step length must be positive and
maximal. Certificates store enough to re-derive every property from
scratch, and validate_walk does exactly that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

from .circuits import enumerate_circuits, is_circuit_direction, sign_compatible
from .hrep import (
    Cone,
    HRep,
    cone_contains,
    cone_extreme_rays,
    cone_lineality,
    feasible_cone_at,
    is_bounded,
)
from .linalg import (
    RatVec,
    dot,
    int_row,
    normalize_coprime,
    rank_int,
    rat,
    smul,
    vadd,
    vec,
    vsub,
)
from .vertexgraph import _int_system, enumerate_vertices, is_facet_defining


class WalkError(ValueError):
    pass


class BlockedStepError(WalkError):
    """The direction is already tight at the start point (step length 0)."""


class UnboundedDirectionError(WalkError):
    """No constraint ever becomes tight along the direction."""


@dataclass(frozen=True)
class WalkStep:
    g: tuple[int, ...]
    alpha: Fraction
    point: RatVec
    entered: tuple[str, ...]


@dataclass(frozen=True)
class WalkCertificate:
    start: RatVec
    steps: tuple[WalkStep, ...]
    objective: RatVec | None = None

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> RatVec:
        return self.steps[-1].point if self.steps else self.start

    def points(self) -> list[RatVec]:
        return [self.start] + [s.point for s in self.steps]

    def with_objective(self, c: Sequence) -> "WalkCertificate":
        return replace(self, objective=vec(c))


@dataclass(frozen=True)
class ValidationReport:
    feasible: bool
    arithmetic: bool
    circuit_steps: bool
    maximal: bool
    entered_rows: bool
    sign_compatible_flag: bool
    monotone: bool | None
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        required = (
            self.feasible
            and self.arithmetic
            and self.circuit_steps
            and self.maximal
            and self.entered_rows
        )
        return required and (self.monotone is not False)


def maximal_step(p: HRep, y: Sequence, g: Sequence) -> tuple[Fraction, RatVec]:
    """Largest feasible step from y along g, with its endpoint.

    The step length is the minimum slack ratio over the rows that increase
    along g. A zero length (y already tight against g) and a direction
    with no increasing row are both errors, not steps.
    """
    y = vec(y)
    g = vec(g.g) if hasattr(g, "g") else vec(g)
    if not p.contains(y):
        raise WalkError("step start point is not in the polyhedron")
    if any(dot(a, g) != 0 for a in p.eq_rows):
        raise WalkError("direction violates an equality row")
    alpha = None
    for row, d in zip(p.rows, p.rhs):
        inc = dot(row, g)
        if inc > 0:
            ratio = (d - dot(row, y)) / inc
            if alpha is None or ratio < alpha:
                alpha = ratio
    if alpha is None:
        raise UnboundedDirectionError("no constraint bounds the direction")
    if alpha == 0:
        raise BlockedStepError("direction is blocked at the start point")
    return alpha, vadd(y, smul(alpha, g))


def _entered(p: HRep, before: Sequence, after: Sequence) -> tuple[str, ...]:
    prev = set(p.tight_set(before))
    return tuple(p.labels[i] for i in p.tight_set(after) if i not in prev)


def take_step(p: HRep, y: RatVec, g: Sequence) -> WalkStep:
    """The maximal step from y along g, packaged as a certificate step."""
    alpha, end = maximal_step(p, y, g)
    gi = normalize_signed(g)
    return WalkStep(g=gi, alpha=alpha * _scale(g, gi), point=end, entered=_entered(p, y, end))


def normalize_signed(g: Sequence) -> tuple[int, ...]:
    """Coprime integer form of a direction, keeping its sign."""
    w = int_row(g)
    canon = normalize_coprime(w)
    for a, b in zip(w, canon):
        if a != 0:
            return canon if (a > 0) == (b > 0) else tuple(-x for x in canon)
    raise ValueError("zero direction")


def _scale(g: Sequence, gi: Sequence) -> Fraction:
    """Factor lambda > 0 with g = lambda * gi."""
    for a, b in zip(g, gi):
        if b != 0:
            return rat(a) / b
    raise ValueError("zero direction")


def validate_walk(p: HRep, w: WalkCertificate) -> ValidationReport:
    """Re-derive every certificate invariant from scratch."""
    problems: list[str] = []
    feasible = p.contains(w.start)
    if not feasible:
        problems.append("start point infeasible")
    arithmetic = True
    circuit_steps = True
    maximal = True
    entered_ok = True
    y = w.start
    images = []
    for k, s in enumerate(w.steps):
        if s.alpha <= 0:
            arithmetic = False
            problems.append(f"step {k}: non-positive step length")
        if vadd(y, smul(s.alpha, s.g)) != s.point:
            arithmetic = False
            problems.append(f"step {k}: endpoint does not match start + alpha*g")
        if not p.contains(s.point):
            feasible = False
            problems.append(f"step {k}: endpoint infeasible")
        try:
            if not is_circuit_direction(p, s.g):
                circuit_steps = False
                problems.append(f"step {k}: direction is not a circuit")
        except ValueError:
            circuit_steps = False
            problems.append(f"step {k}: zero direction")
        try:
            alpha, end = maximal_step(p, y, s.g)
            if alpha != s.alpha or end != s.point:
                maximal = False
                problems.append(f"step {k}: not the maximal step")
        except WalkError as e:
            maximal = False
            problems.append(f"step {k}: {e}")
        if _entered(p, y, s.point) != s.entered:
            entered_ok = False
            problems.append(f"step {k}: entered-row labels do not match")
        images.append(tuple(dot(row, s.g) for row in p.rows))
        y = s.point
    sign_flag = all(
        sign_compatible(a, b) for a, b in combinations(images, 2)
    )
    monotone: bool | None = None
    if w.objective is not None:
        vals = [dot(w.objective, pt) for pt in w.points()]
        monotone = all(a > b for a, b in zip(vals, vals[1:]))
        if not monotone:
            problems.append("objective values are not strictly decreasing")
    return ValidationReport(
        feasible=feasible,
        arithmetic=arithmetic,
        circuit_steps=circuit_steps,
        maximal=maximal,
        entered_rows=entered_ok,
        sign_compatible_flag=sign_flag,
        monotone=monotone,
        problems=tuple(problems),
    )


# ---------------------------------------------------------------------------
# Reachability searches
# ---------------------------------------------------------------------------

_REACH_CACHE: dict[tuple[HRep, RatVec], tuple[tuple[tuple[int, ...], RatVec], ...]] = {}


def one_step_reach(p: HRep, y: Sequence) -> list[tuple[tuple[int, ...], RatVec]]:
    """Endpoint of the maximal step along every signed circuit, deduplicated
    by endpoint (keeping the smallest direction). Blocked and unbounded
    directions are skipped.

    Runs on the jointly scaled integer system: per-row positive scaling
    leaves every slack ratio unchanged, so min-ratio selection can use
    integer cross-multiplication instead of Fraction arithmetic.
    """
    y = vec(y)
    key = (p, y)
    cached = _REACH_CACHE.get(key)
    if cached is not None:
        return list(cached)
    if not p.contains(y):
        raise WalkError("start point is not in the polyhedron")
    irows, irhs = _int_system(p)
    q = 1
    for x in y:
        q = lcm(q, x.denominator)
    ynum = tuple(int(x * q) for x in y)
    slack = [d * q - sum(a * b for a, b in zip(row, ynum)) for row, d in zip(irows, irhs)]
    best: dict[RatVec, tuple[int, ...]] = {}

    def record(g: tuple[int, ...], num: int, den: int) -> None:
        alpha = Fraction(num, q * den)
        end = tuple(a + alpha * b for a, b in zip(y, g))
        cur = best.get(end)
        if cur is None or g < cur:
            best[end] = g

    for c in enumerate_circuits(p):
        g = c.g
        bp = bn = None  # (slack, rate) with minimal slack/rate per direction
        blocked_p = blocked_n = False
        for s, row in zip(slack, irows):
            t = sum(a * b for a, b in zip(row, g))
            if t > 0:
                if s == 0:
                    blocked_p = True
                    if blocked_n:
                        break
                elif bp is None or s * bp[1] < bp[0] * t:
                    bp = (s, t)
            elif t < 0:
                if s == 0:
                    blocked_n = True
                    if blocked_p:
                        break
                elif bn is None or s * bn[1] < bn[0] * -t:
                    bn = (s, -t)
        if not blocked_p and bp is not None:
            record(g, bp[0], bp[1])
        if not blocked_n and bn is not None:
            record(tuple(-x for x in g), bn[0], bn[1])
    result = tuple(sorted((g, end) for end, g in best.items()))
    _REACH_CACHE[key] = result
    return list(result)


def direct_step(p: HRep, y: RatVec, v: RatVec) -> WalkStep | None:
    """The maximal step from y that lands exactly on v, if it exists."""
    w = vsub(v, y)
    if all(x == 0 for x in w):
        return None
    if not is_circuit_direction(p, w):
        return None
    try:
        alpha, end = maximal_step(p, y, w)
    except WalkError:
        return None
    if end != v:
        return None
    return take_step(p, y, w)


def two_step_reachable(p: HRep, u: Sequence, v: Sequence) -> WalkCertificate | None:
    """A walk of length at most 2 from u to v, or None.

    The single maximal step from any point toward v is forced, so checking
    the direct direction from u and from every one-step endpoint is
    exhaustive.
    """
    u, v = vec(u), vec(v)
    if u == v:
        raise WalkError("endpoints coincide")
    direct = direct_step(p, u, v)
    if direct is not None:
        return WalkCertificate(start=u, steps=(direct,))
    for g1, y1 in one_step_reach(p, u):
        if y1 == v:
            return WalkCertificate(start=u, steps=(take_step(p, u, g1),))
        s2 = direct_step(p, y1, v)
        if s2 is not None:
            return WalkCertificate(start=u, steps=(take_step(p, u, g1), s2))
    return None


def bounded_depth_search(p: HRep, u: Sequence, v: Sequence, k_max: int) -> WalkCertificate | None:
    """Shortest walk certificate from u to v of length at most k_max, or
    None. Breadth-first over maximal-step endpoints with exact point
    deduplication; the last level only checks the forced direct step."""
    u, v = vec(u), vec(v)
    if u == v:
        return WalkCertificate(start=u, steps=())
    frontier: dict[RatVec, tuple[WalkStep, ...]] = {u: ()}
    visited = {u}
    for depth in range(1, k_max + 1):
        for y, steps in frontier.items():
            final = direct_step(p, y, v)
            if final is not None:
                return WalkCertificate(start=u, steps=steps + (final,))
        if depth == k_max:
            break
        nxt: dict[RatVec, tuple[WalkStep, ...]] = {}
        for y, steps in frontier.items():
            for g, end in one_step_reach(p, y):
                if end in visited or end in nxt:
                    continue
                nxt[end] = steps + (take_step(p, y, g),)
        visited.update(nxt)
        frontier = dict(sorted(nxt.items()))
    return None


def triple_span_excludes(p: HRep, v: Sequence) -> bool:
    """True iff no three circuits linearly span v.

    Spanning is necessary for a three-step walk from the origin to v, so a
    True answer rules such walks out; False alone proves nothing.
    """
    v = vec(v)
    if all(x == 0 for x in v):
        raise ValueError("the zero vector is excluded trivially")
    iv = int_row(v)
    n = p.dim
    gs = [c.g for c in enumerate_circuits(p)]
    size = min(3, len(gs))  # fewer than 3 circuits: their whole span decides
    if size == 0:
        return True
    for trip in combinations(gs, size):
        base = rank_int(list(trip), n)
        if rank_int(list(trip) + [iv], n) == base:
            return False
    return True


# ---------------------------------------------------------------------------
# Constructive spindle walks
# ---------------------------------------------------------------------------

def _spindle_hrep(c: Cone, u: RatVec, v: RatVec) -> HRep:
    """The polytope (C+u) intersected with (-C+v), rows labeled u.* / v.*."""
    rows, rhs, labels = [], [], []
    for lab, m in zip(c.labels, c.rows):
        mr = vec(m)
        rows.append(mr)
        rhs.append(dot(mr, u))
        labels.append(f"u.{lab}")
    for lab, m in zip(c.labels, c.rows):
        mr = vec(tuple(-x for x in m))
        rows.append(mr)
        rhs.append(dot(mr, v))
        labels.append(f"v.{lab}")
    return HRep(dim=c.dim, rows=tuple(rows), rhs=tuple(rhs), labels=tuple(labels))


def same_cone_spindle_walk(c: Cone, u: Sequence, v: Sequence) -> WalkCertificate:
    """Walk from u to v inside (C+u) & (-C+v) along extreme rays of C.

    Each step follows the lexicographically smallest extreme ray of the
    current face of C (the rows already tight on the v side stay tight),
    so every step is an edge step of the current sub-spindle and binds at
    least one new v-side row; the tight rows gain rank every step, which
    bounds the length by the dimension.
    """
    u, v = vec(u), vec(v)
    if u == v:
        return WalkCertificate(start=u, steps=())
    if cone_lineality(c):
        raise WalkError("cone is not pointed")
    if not c.contains_strictly(vsub(v, u)):
        raise WalkError("target minus start is not strictly interior to the cone")
    pp = _spindle_hrep(c, u, v)
    y = u
    steps: list[WalkStep] = []
    while y != v:
        if len(steps) > c.dim:
            raise AssertionError("walk exceeded the dimension bound")
        tight_rows: list[tuple[int, ...]] = []
        for m in c.rows:
            if dot(m, y) == dot(m, v):
                tight_rows.append(tuple(m))
        face = Cone(
            dim=c.dim,
            rows=c.rows + tuple(tight_rows) + tuple(tuple(-x for x in m) for m in tight_rows),
            labels=tuple(f"r{i}" for i in range(len(c.rows) + 2 * len(tight_rows))),
        )
        rays = cone_extreme_rays(face)
        if not rays:
            raise WalkError("no feasible edge direction; precondition violated")
        g = rays[0]
        steps.append(take_step(pp, y, g))
        y = steps[-1].point
    return WalkCertificate(start=u, steps=tuple(steps))


def containment_spindle_walk(
    p: HRep, u: Sequence, v: Sequence, objective: Sequence | None = None
) -> WalkCertificate:
    """Walk of length at most dim from apex u to apex v of a spindle whose
    reversed feasible cone at v contains every direction feasible at u.

    Runs the same-cone walk inside the inner spindle spanned by the
    reversed cone at v, then re-derives each step against P itself: the
    binding rows are always rows tight at v, which P shares, so the steps
    stay maximal in P.
    """
    u, v = vec(u), vec(v)
    cu = feasible_cone_at(p, u)
    cv = feasible_cone_at(p, v)
    d = Cone(
        dim=cv.dim,
        rows=tuple(tuple(-x for x in m) for m in cv.rows),
        labels=cv.labels,
    )
    if not cone_contains(d, cu):
        raise WalkError("reversed cone at the target is not contained in the cone at the start")
    inner = same_cone_spindle_walk(d, u, v)
    y = u
    steps = []
    for s in inner.steps:
        steps.append(take_step(p, y, s.g))
        if steps[-1].point != s.point:
            raise WalkError("step is not maximal in the enclosing polyhedron")
        y = steps[-1].point
    cert = WalkCertificate(start=u, steps=tuple(steps))
    if objective is not None:
        cert = cert.with_objective(objective)
    return cert


# ---------------------------------------------------------------------------
# Anti-blocking polytopes
# ---------------------------------------------------------------------------

def is_antiblocking(p: HRep) -> bool:
    """True iff the rows split into all dim sign constraints -x_i <= 0 plus
    rows with non-negative coefficients and right-hand sides, every row
    facet-defining, and the polytope is bounded and full-dimensional."""
    if p.eq_rows or not is_bounded(p):
        return False
    sign_rows: set[int] = set()
    for row, d in zip(p.rows, p.rhs):
        nz = [i for i, x in enumerate(row) if x != 0]
        if len(nz) == 1 and row[nz[0]] < 0 and d == 0:
            sign_rows.add(nz[0])
        elif all(x >= 0 for x in row) and d >= 0:
            continue
        else:
            return False
    if sign_rows != set(range(p.dim)):
        return False
    return all(is_facet_defining(p, lab) for lab in p.labels)


def antiblocking_walk(
    p: HRep, x: Sequence, objective: Sequence | None = None
) -> WalkCertificate:
    """Coordinate-zeroing walk from x to the origin, one maximal step per
    nonzero coordinate in descending index order."""
    x = vec(x)
    if not is_antiblocking(p):
        raise WalkError("polyhedron is not anti-blocking")
    if not p.contains(x):
        raise WalkError("start point is not in the polyhedron")
    y = x
    steps = []
    for i in range(p.dim - 1, -1, -1):
        if y[i] == 0:
            continue
        g = tuple(-1 if k == i else 0 for k in range(p.dim))
        steps.append(take_step(p, y, g))
        y = steps[-1].point
    if any(c != 0 for c in y):
        raise AssertionError("walk did not reach the origin")
    cert = WalkCertificate(start=x, steps=tuple(steps))
    if objective is not None:
        cert = cert.with_objective(objective)
    return cert


def delta0_upper(p: HRep, k_max: int) -> int | None:
    """Largest shortest-walk length from the origin over all vertices, or
    None when some vertex needs more than k_max steps."""
    if not is_antiblocking(p):
        raise WalkError("polyhedron is not anti-blocking")
    origin = vec([0] * p.dim)
    worst = 0
    for vert in enumerate_vertices(p):
        if vert.point == origin:
            continue
        cert = bounded_depth_search(p, origin, vert.point, k_max)
        if cert is None:
            return None
        worst = max(worst, len(cert))
    return worst


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _rat_str(x) -> str:
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def walk_to_json(p: HRep, w: WalkCertificate) -> str:
    """Certificate JSON including freshly validated flags."""
    rep = validate_walk(p, w)
    obj: dict = {
        "start": [_rat_str(x) for x in w.start],
        "steps": [
            {
                "g": list(s.g),
                "alpha": _rat_str(s.alpha),
                "point": [_rat_str(x) for x in s.point],
                "entered": list(s.entered),
            }
            for s in w.steps
        ],
        "flags": {
            "feasible": rep.feasible,
            "maximal": rep.maximal,
            "sign_compatible": rep.sign_compatible_flag,
            "monotone": rep.monotone,
        },
    }
    if w.objective is not None:
        obj["objective"] = [_rat_str(x) for x in w.objective]
        obj["values"] = [_rat_str(dot(w.objective, pt)) for pt in w.points()]
    return json.dumps(obj, indent=2)


def walk_from_json(text: str) -> WalkCertificate:
    obj = json.loads(text)
    steps = tuple(
        WalkStep(
            g=tuple(int(x) for x in s["g"]),
            alpha=Fraction(s["alpha"]),
            point=tuple(Fraction(x) for x in s["point"]),
            entered=tuple(s["entered"]),
        )
        for s in obj["steps"]
    )
    objective = None
    if "objective" in obj:
        objective = tuple(Fraction(x) for x in obj["objective"])
    return WalkCertificate(
        start=tuple(Fraction(x) for x in obj["start"]),
        steps=steps,
        objective=objective,
    )

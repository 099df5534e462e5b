"""Randomized property suites backed by independent brute-force oracles.

Each family generates small random instances, recomputes the quantity
under test from first principles (own rank / kernel / lattice code, no
package imports beyond the function under test), and compares exactly.
The acceptance gate and the per-module unit tests both call these.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import gcd

from circuitwalks import (
    Cone,
    HRep,
    adjacency_graph,
    arrangement_from_normals,
    containment_spindle_walk,
    enumerate_circuits,
    enumerate_regions,
    enumerate_vertices,
    is_bounded,
    is_facet_defining,
    region_of_objective,
    same_cone_spindle_walk,
    validate_walk,
    wedge_over_facet,
)

# ---------------------------------------------------------------------------
# Oracle-side linear algebra, written independently of the package
# ---------------------------------------------------------------------------

def _oracle_rank(rows) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][c]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _oracle_kernel(rows, n):
    """Basis of the null space, by elimination on the transposed system."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][c]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(c)
        rank += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -mat[r][fc]
        basis.append(tuple(v))
    return basis


def _canon_int(v):
    """Coprime integer vector, first nonzero entry positive."""
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    w = [int(x * den) for x in v]
    g = 0
    for x in w:
        g = gcd(g, abs(x))
    w = [x // g for x in w]
    lead = next(x for x in w if x != 0)
    if lead < 0:
        w = [-x for x in w]
    return tuple(w)


def _mk_hrep(rows, rhs, eq_rows=(), eq_rhs=()):
    return HRep(
        dim=len(rows[0]),
        rows=tuple(tuple(Fraction(x) for x in r) for r in rows),
        rhs=tuple(Fraction(d) for d in rhs),
        labels=tuple(str(i + 1) for i in range(len(rows))),
        eq_rows=tuple(tuple(Fraction(x) for x in r) for r in eq_rows),
        eq_rhs=tuple(Fraction(d) for d in eq_rhs),
        eq_labels=tuple(f"e{i + 1}" for i in range(len(eq_rows))),
    )


def _halfspace_key(r, d):
    g = 0
    for x in r:
        g = gcd(g, abs(x))
    return tuple(x // g for x in r), Fraction(d, g)


def _random_bounded_polytope(rng: random.Random, n: int) -> HRep:
    """Box around the origin plus a few random cuts with the origin kept
    strictly inside, then pruned to an irredundant description."""
    rows = []
    rhs = []
    seen = set()

    def add(r, d):
        key = _halfspace_key(r, d)
        if key not in seen:
            seen.add(key)
            rows.append(r)
            rhs.append(d)

    for i in range(n):
        e = [0] * n
        e[i] = 1
        add(tuple(e), rng.randint(1, 3))
        add(tuple(-x for x in e), rng.randint(1, 3))
    for _ in range(rng.randint(1, n + 2)):
        r = tuple(rng.randint(-3, 3) for _ in range(n))
        if any(r):
            add(r, rng.randint(1, 4))
    p = _mk_hrep(rows, rhs)
    keep = [lab for lab in p.labels if is_facet_defining(p, lab)]
    return p.sub(keep)


# ---------------------------------------------------------------------------
# Family A: circuit enumeration vs subset brute force (m <= 10, n <= 3)
# ---------------------------------------------------------------------------

def check_circuits_against_bruteforce(cases: int = 20, seed: int = 20260815) -> int:
    rng = random.Random(seed)
    checked = 0
    for _ in range(cases):
        n = rng.randint(1, 3)
        m = rng.randint(n, 10)
        rows = []
        while len(rows) < m:
            r = tuple(rng.randint(-3, 3) for _ in range(n))
            if any(r):
                rows.append(r)
        p = _mk_hrep(rows, [rng.randint(0, 4) for _ in range(m)])

        expected = set()
        for size in range(0, n):
            for sub in combinations(range(m), size):
                chosen = [rows[i] for i in sub]
                if _oracle_rank(chosen) != n - 1:
                    continue
                ker = _oracle_kernel(chosen, n)
                if len(ker) != 1:
                    continue
                expected.add(_canon_int(ker[0]))

        got = {c.g for c in enumerate_circuits(p)}
        assert got == expected, (
            f"circuit sets differ for rows {rows}: "
            f"extra {got - expected}, missing {expected - got}"
        )
        for c in enumerate_circuits(p):
            zero = [rows[i] for i in range(m) if sum(a * b for a, b in zip(rows[i], c.g)) == 0]
            assert _oracle_rank(zero) == n - 1
        checked += 1
    return checked


# ---------------------------------------------------------------------------
# Family B: edge adjacency vs midpoint-face oracle (dim <= 3)
# ---------------------------------------------------------------------------

def check_adjacency_against_midpoint_oracle(cases: int = 12, seed: int = 977) -> int:
    rng = random.Random(seed)
    checked = 0
    for _ in range(cases):
        n = rng.randint(2, 3)
        p = _random_bounded_polytope(rng, n)
        g = adjacency_graph(p)
        points = [v.point for v in g.vertices]
        edges = set(g.edges)
        for i, j in combinations(range(len(points)), 2):
            mid = tuple((a + b) / 2 for a, b in zip(points[i], points[j]))
            tight = [
                k for k in range(p.num_ineq)
                if sum(a * b for a, b in zip(p.rows[k], mid)) == p.rhs[k]
            ]
            tight_rows = [p.rows[k] for k in tight]
            on_face = [
                w for w in range(len(points))
                if all(
                    sum(a * b for a, b in zip(p.rows[k], points[w])) == p.rhs[k]
                    for k in tight
                )
            ]
            adjacent = _oracle_rank(tight_rows) == n - 1 and on_face == [i, j]
            assert ((i, j) in edges) == adjacent, (
                f"adjacency mismatch for vertices {points[i]} and {points[j]}"
            )
        checked += 1
    return checked


# ---------------------------------------------------------------------------
# Family C: wedge shape on random polytopes
# ---------------------------------------------------------------------------

def check_wedge_shape(cases: int = 20, seed: int = 40913) -> int:
    rng = random.Random(seed)
    checked = 0
    while checked < cases:
        n = rng.randint(2, 3)
        p = _random_bounded_polytope(rng, n)
        facet = rng.choice(p.labels)
        w = wedge_over_facet(p, facet)

        assert w.dim == p.dim + 1
        assert w.num_ineq == p.num_ineq + 1
        assert is_bounded(w)
        assert all(is_facet_defining(w, lab) for lab in w.labels)

        base = [v.point for v in enumerate_vertices(p)]
        k = p.index_of(facet)
        on_facet = sum(
            1 for v in base
            if sum(a * b for a, b in zip(p.rows[k], v)) == p.rhs[k]
        )
        assert len(enumerate_vertices(w)) == 2 * len(base) - on_facet
        checked += 1
    return checked


# ---------------------------------------------------------------------------
# Family D: same-cone spindle walks (50 random spindles)
# ---------------------------------------------------------------------------

def check_same_cone_spindle_walks(cases: int = 50, seed: int = 5150) -> int:
    rng = random.Random(seed)
    checked = 0
    while checked < cases:
        n = rng.randint(2, 4)
        rows = []
        while True:
            r = tuple([-rng.randint(1, 3)] + [rng.randint(-3, 3) for _ in range(n - 1)])
            rows.append(r)
            if len(rows) >= n and _oracle_rank(rows) == n:
                break
            if len(rows) > n + 3:
                rows = []
        cone = Cone(dim=n, rows=tuple(rows), labels=tuple(f"c{i}" for i in range(len(rows))))
        u = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
        step = rng.randint(1, 3)
        v = (u[0] + step,) + u[1:]

        # any interior vector of the polar cone decreases strictly along
        # every direction of the cone; the row sum is one such vector
        objective = tuple(sum(r[i] for r in rows) for i in range(n))

        walk = same_cone_spindle_walk(cone, u, v)
        assert walk.end == tuple(Fraction(x) for x in v)
        assert len(walk.steps) <= n
        for s in walk.steps:
            assert cone.contains(s.g)
            assert sum(c * gi for c, gi in zip(objective, s.g)) < 0

        spindle = _mk_hrep(
            [list(r) for r in rows] + [[-x for x in r] for r in rows],
            [sum(a * b for a, b in zip(r, u)) for r in rows]
            + [-sum(a * b for a, b in zip(r, v)) for r in rows],
        )
        cert = containment_spindle_walk(spindle, u, v, objective=objective)
        assert cert.end == tuple(Fraction(x) for x in v)
        assert len(cert.steps) <= n
        report = validate_walk(spindle, cert)
        assert report.ok and report.monotone is True, report.problems
        for s in cert.steps:
            assert s.entered
        checked += 1
    return checked


# ---------------------------------------------------------------------------
# Family E: orientation region census vs intersection-lattice oracle
# ---------------------------------------------------------------------------

def _region_count_oracle(normals, n: int) -> int:
    """Region count of a central arrangement from the Moebius function of
    its intersection lattice (sum of absolute values)."""
    k = len(normals)
    flats = {}
    for size in range(k + 1):
        for sub in combinations(range(k), size):
            chosen = [normals[i] for i in sub]
            r = _oracle_rank(chosen)
            closure = frozenset(
                i for i in range(k) if _oracle_rank(chosen + [normals[i]]) == r
            )
            flats[closure] = r
    mu = {}
    total = 0
    for t in sorted(flats, key=lambda s: (flats[s], len(s), sorted(s))):
        mu[t] = 1 if not t else -sum(mu[s] for s in mu if s < t)
        total += abs(mu[t])
    return total


def check_region_census_against_lattice_oracle(cases: int = 15, seed: int = 271) -> int:
    rng = random.Random(seed)
    checked = 0
    while checked < cases:
        k = rng.randint(3, 6)
        normals = set()
        while len(normals) < k:
            r = tuple(rng.randint(-2, 2) for _ in range(3))
            if any(r):
                normals.add(_canon_int(tuple(Fraction(x) for x in r)))
        normals = sorted(normals)
        arr = arrangement_from_normals(normals, 3)
        regions = enumerate_regions(arr)
        assert len(regions) == _region_count_oracle(normals, 3)
        for reg in regions:
            assert region_of_objective(arr, reg.witness) == reg.sigma
        checked += 1
    return checked


ALL_FAMILIES = (
    check_circuits_against_bruteforce,
    check_adjacency_against_midpoint_oracle,
    check_wedge_shape,
    check_same_cone_spindle_walks,
    check_region_census_against_lattice_oracle,
)

"""Circuit enumeration and circuit-membership predicates.

A circuit of P = {x : Ax = b, Bx <= d} is a nonzero kernel direction g of A
whose image Bg has support-minimal sign pattern; equivalently, the rows
tight on g (together with A) have rank dim-1. Circuits are normalized to
coprime integers with positive leading entry, and one representative per
opposite pair is stored (the signed count is twice the canonical count).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .hrep import HRep
from .linalg import (
    RatVec,
    int_row,
    kernel_line_int,
    normalize_coprime,
    rank,
    rank_int,
    rat,
    vec,
)


@dataclass(frozen=True)
class Circuit:
    """Canonical circuit direction with a defining row subset.

    The witness rows (with the equalities) have rank dim-1 and vanish on g;
    appending any row with a nonzero product raises the rank to dim, which
    certifies support minimality of the image.
    """

    g: tuple[int, ...]
    witness: tuple[str, ...]
    bsign: tuple[int, ...]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


_CIRCUIT_CACHE: dict[HRep, tuple[tuple[Circuit, ...], frozenset]] = {}


def _circuit_data(p: HRep) -> tuple[tuple[Circuit, ...], frozenset]:
    cached = _CIRCUIT_CACHE.get(p)
    if cached is not None:
        return cached
    n = p.dim
    eq_irows = [int_row(r) for r in p.eq_rows]
    r_eq = rank(p.eq_rows) if p.eq_rows else 0
    if r_eq and len(eq_irows) > r_eq:
        # keep an independent subset so the kernel computation sees n-1 rows
        keep: list[tuple[int, ...]] = []
        for row in eq_irows:
            if rank_int(keep + [row], n) > len(keep):
                keep.append(row)
        eq_irows = keep
    irows = [int_row(r) for r in p.rows]
    found: dict[tuple[int, ...], tuple[str, ...]] = {}
    k = n - 1 - r_eq
    if k < 0:
        _CIRCUIT_CACHE[p] = ((), frozenset())
        return _CIRCUIT_CACHE[p]
    for sub in combinations(range(p.num_ineq), k):
        g = kernel_line_int(eq_irows + [irows[i] for i in sub], n)
        if g is not None and g not in found:
            found[g] = tuple(p.labels[i] for i in sub)
    circuits = tuple(
        Circuit(
            g=g,
            witness=found[g],
            bsign=tuple(_sign(sum(a * b for a, b in zip(row, g))) for row in irows),
        )
        for g in sorted(found)
    )
    _CIRCUIT_CACHE[p] = (circuits, frozenset(c.g for c in circuits))
    return _CIRCUIT_CACHE[p]


def enumerate_circuits(p: HRep) -> list[Circuit]:
    """All canonical circuits, sorted by direction vector.

    Every kernel line of an independent (dim-1-rank) tight system is
    support-minimal and vice versa, so it suffices to scan the
    inequality-row subsets of size dim-1-rank(equalities).
    """
    return list(_circuit_data(p)[0])


def seed_circuits(p: HRep, circuits: Sequence[Circuit]) -> None:
    """Install a precomputed circuit list (result-cache rehydration).

    Directions must be canonical (coprime, positive leading entry) and
    strictly sorted; completeness is the caller's responsibility and is
    normally guaranteed by the cache's content hashing.
    """
    for c in circuits:
        if normalize_coprime(c.g) != c.g:
            raise ValueError("cached circuit direction is not canonical")
    if any(a.g >= b.g for a, b in zip(circuits, circuits[1:])):
        raise ValueError("cached circuit list is not in canonical order")
    _CIRCUIT_CACHE[p] = (tuple(circuits), frozenset(c.g for c in circuits))


def signed_circuit_count(p: HRep) -> int:
    return 2 * len(_circuit_data(p)[0])


def is_circuit_direction(p: HRep, w: Sequence) -> bool:
    """True iff w (or -w) points along some circuit of P."""
    w = vec(w)
    if all(x == 0 for x in w):
        raise ValueError("the zero vector is not a direction")
    return normalize_coprime(w) in _circuit_data(p)[1]


def sign_compatible(a: Sequence, b: Sequence) -> bool:
    """Componentwise products all non-negative."""
    a, b = vec(a), vec(b)
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return all(x * y >= 0 for x, y in zip(a, b))


def in_minimal_face(p: HRep, g, direction: Sequence) -> bool:
    """Whether +-g lies in the minimal sign-pattern cell containing the
    direction: every inequality row's product with g is zero or matches
    the row's product with the direction in sign.
    """
    gv = vec(g.g if isinstance(g, Circuit) else g)
    direction = vec(direction)
    if all(x == 0 for x in direction):
        raise ValueError("the zero vector is not a direction")
    for eps in (1, -1):
        ok = True
        for row in p.rows:
            sg = _sign(sum((rat(r) * x for r, x in zip(row, gv)), rat(0))) * eps
            if sg == 0:
                continue
            sd = _sign(sum((rat(r) * x for r, x in zip(row, direction)), rat(0)))
            if sg != sd:
                ok = False
                break
        if ok:
            return True
    return False


def circuits_csv(p: HRep) -> str:
    lines = ["g,witness"]
    for c in enumerate_circuits(p):
        lines.append(" ".join(str(x) for x in c.g) + "," + " ".join(c.witness))
    return "\n".join(lines) + "\n"

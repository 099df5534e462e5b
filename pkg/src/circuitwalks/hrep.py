"""Inequality descriptions of polyhedra and polyhedral cones.

A polyhedron is P = {x : Ax = b, Bx <= d} with a unique string label per
inequality row. The text format ("H format") encodes each row as
``<label> <d_i> <-B_i1> ... <-B_in>``, i.e. the stored entries after the
label are the coefficients of d_i - B_i . x >= 0; an optional ``LIN <k>``
section holds equality rows in the same layout, terminated by ``END``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .linalg import (
    Rat,
    RatVec,
    SingularMatrixError,
    dot,
    int_row,
    int_rows,
    inverse,
    kernel_basis,
    kernel_line_int,
    mat_vec,
    normalize_coprime,
    rank,
    rat,
    vec,
)


class HRepError(ValueError):
    pass


class HRepParseError(HRepError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class HRep:
    """Polyhedron {x : eq_rows . x = eq_rhs, rows . x <= rhs}."""

    dim: int
    rows: tuple[RatVec, ...]
    rhs: tuple[Fraction, ...]
    labels: tuple[str, ...]
    eq_rows: tuple[RatVec, ...] = ()
    eq_rhs: tuple[Fraction, ...] = ()
    eq_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.rows) != len(self.rhs) or len(self.rows) != len(self.labels):
            raise HRepError("inequality row/rhs/label lengths differ")
        if len(self.eq_rows) != len(self.eq_rhs) or len(self.eq_rows) != len(self.eq_labels):
            raise HRepError("equality row/rhs/label lengths differ")
        seen = set()
        for lab in self.labels + self.eq_labels:
            if lab in seen:
                raise HRepError(f"duplicate row label {lab!r}")
            seen.add(lab)
        for r in self.rows + self.eq_rows:
            if len(r) != self.dim:
                raise HRepError("row width differs from dim")

    @property
    def num_ineq(self) -> int:
        return len(self.rows)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise HRepError(f"no inequality row labeled {label!r}") from None

    def contains(self, x: Sequence) -> bool:
        x = vec(x)
        if any(dot(a, x) != b for a, b in zip(self.eq_rows, self.eq_rhs)):
            return False
        return all(dot(r, x) <= d for r, d in zip(self.rows, self.rhs))

    def tight_set(self, x: Sequence) -> tuple[int, ...]:
        """Indices of inequality rows satisfied with equality at x."""
        x = vec(x)
        return tuple(i for i, (r, d) in enumerate(zip(self.rows, self.rhs)) if dot(r, x) == d)

    def tight_labels(self, x: Sequence) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in self.tight_set(x))

    def sub(self, labels: Iterable[str]) -> "HRep":
        """Sub-polyhedron keeping only the named inequality rows."""
        keep = [self.index_of(lab) for lab in labels]
        return HRep(
            dim=self.dim,
            rows=tuple(self.rows[i] for i in keep),
            rhs=tuple(self.rhs[i] for i in keep),
            labels=tuple(self.labels[i] for i in keep),
            eq_rows=self.eq_rows,
            eq_rhs=self.eq_rhs,
            eq_labels=self.eq_labels,
        )


@dataclass(frozen=True)
class Cone:
    """Homogeneous cone {g : rows . g <= 0} with integer normal rows."""

    dim: int
    rows: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def contains(self, g: Sequence) -> bool:
        g = vec(g)
        return all(dot(r, g) <= 0 for r in self.rows)

    def contains_strictly(self, g: Sequence) -> bool:
        g = vec(g)
        return all(dot(r, g) < 0 for r in self.rows)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_NUM_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _parse_entry(tok: str, lineno: int) -> Fraction:
    if not _NUM_RE.match(tok):
        raise HRepParseError(lineno, f"bad numeric entry {tok!r} (expected integer or p/q)")
    return Fraction(tok)


def parse_hrep(text: str) -> HRep:
    lines = text.splitlines()
    pos = 0

    def next_line() -> tuple[int, str]:
        nonlocal pos
        while pos < len(lines):
            ln = lines[pos]
            pos += 1
            if ln.strip():
                return pos, ln
        raise HRepParseError(len(lines) + 1, "unexpected end of input")

    lineno, ln = next_line()
    while ln.lstrip().startswith("*"):
        lineno, ln = next_line()
    if ln.strip() != "H":
        raise HRepParseError(lineno, f"expected 'H' marker, got {ln.strip()!r}")
    lineno, ln = next_line()
    head = ln.split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise HRepParseError(lineno, f"expected '<m> <n>' header, got {ln.strip()!r}")
    m, n = int(head[0]), int(head[1])

    def parse_row(lineno: int, ln: str) -> tuple[str, Fraction, RatVec]:
        toks = ln.split()
        if len(toks) != n + 2:
            raise HRepParseError(lineno, f"expected label + {n + 1} entries, got {len(toks)} tokens")
        label = toks[0]
        d = _parse_entry(toks[1], lineno)
        # stored entries are -B_i, so negate to recover the row of B
        row = tuple(-_parse_entry(t, lineno) for t in toks[2:])
        return label, d, row

    labels, rhs, rows = [], [], []
    for _ in range(m):
        lineno, ln = next_line()
        lab, d, row = parse_row(lineno, ln)
        labels.append(lab)
        rhs.append(d)
        rows.append(row)

    eq_labels, eq_rhs, eq_rows = [], [], []
    lineno, ln = next_line()
    if ln.split() and ln.split()[0] == "LIN":
        toks = ln.split()
        if len(toks) != 2 or not toks[1].isdigit():
            raise HRepParseError(lineno, f"expected 'LIN <k>', got {ln.strip()!r}")
        k = int(toks[1])
        for _ in range(k):
            lineno, ln = next_line()
            lab, d, row = parse_row(lineno, ln)
            eq_labels.append(lab)
            eq_rhs.append(d)
            eq_rows.append(row)
        lineno, ln = next_line()
    if ln.strip() != "END":
        raise HRepParseError(lineno, f"expected 'END', got {ln.strip()!r}")
    try:
        return HRep(
            dim=n,
            rows=tuple(rows),
            rhs=tuple(rhs),
            labels=tuple(labels),
            eq_rows=tuple(eq_rows),
            eq_rhs=tuple(eq_rhs),
            eq_labels=tuple(eq_labels),
        )
    except HRepError as e:
        raise HRepParseError(lineno, str(e)) from None


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write_hrep(p: HRep) -> str:
    out = ["H", f"{p.num_ineq} {p.dim}"]
    for lab, d, row in zip(p.labels, p.rhs, p.rows):
        out.append(" ".join([lab, _fmt(d)] + [_fmt(-x) for x in row]))
    if p.eq_rows:
        out.append(f"LIN {len(p.eq_rows)}")
        for lab, d, row in zip(p.eq_labels, p.eq_rhs, p.eq_rows):
            out.append(" ".join([lab, _fmt(d)] + [_fmt(-x) for x in row]))
    out.append("END")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Recession cone, feasible cones, containment
# ---------------------------------------------------------------------------

def _pointed_cone_rays(irows: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {g : irows . g <= 0}.

    Every extreme ray is tight on a rank n-1 subset of the normals, so it
    appears as the kernel line of some (n-1)-row selection; the sign making
    the ray feasible is kept. Caller must have checked pointedness.
    """
    k = n - 1
    if k < 0:
        return []
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    for sub in combinations(range(len(irows)), k):
        sel = [irows[i] for i in sub]
        g = kernel_line_int(sel, n)
        if g is None:
            continue
        if g in found:
            continue
        pos = neg = False
        for r in irows:
            s = sum(a * b for a, b in zip(r, g))
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            if pos and neg:
                break
        if pos and neg:
            found[g] = ()
            continue
        found[g] = g if not pos else tuple(-x for x in g)
    return sorted(r for r in found.values() if r)


def recession_extreme_rays(p: HRep) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """(lineality basis, extreme rays) of {g : A g = 0, B g <= 0}.

    When the lineality space is nonzero the cone is not pointed and the ray
    list is empty by convention.
    """
    stacked = list(p.eq_rows) + list(p.rows)
    lin = kernel_basis(stacked, p.dim)
    if lin:
        return lin, []
    irows = int_rows(p.rows)
    eq_irows = int_rows(p.eq_rows)
    # equalities enter the homogeneous system as opposite inequality pairs
    both = eq_irows + [tuple(-x for x in r) for r in eq_irows]
    return [], _pointed_cone_rays(irows + both, p.dim)


def is_bounded(p: HRep) -> bool:
    lin, rays = recession_extreme_rays(p)
    return not lin and not rays


def feasible_cone_at(p: HRep, x: Sequence) -> Cone:
    """Cone of feasible directions at a point of P (tight rows homogenized)."""
    x = vec(x)
    if not p.contains(x):
        raise HRepError("point is not in the polyhedron")
    rows: list[tuple[int, ...]] = []
    labels: list[str] = []
    for lab, a in zip(p.eq_labels, p.eq_rows):
        ia = int_row(a)
        rows.append(ia)
        labels.append(f"{lab}+")
        rows.append(tuple(-v for v in ia))
        labels.append(f"{lab}-")
    for i in p.tight_set(x):
        rows.append(int_row(p.rows[i]))
        labels.append(p.labels[i])
    return Cone(dim=p.dim, rows=tuple(rows), labels=tuple(labels))


def cone_lineality(c: Cone) -> list[tuple[int, ...]]:
    return kernel_basis(c.rows, c.dim)


def cone_extreme_rays(c: Cone) -> list[tuple[int, ...]]:
    """Extreme rays of a pointed cone; raises if the cone has lineality."""
    if cone_lineality(c):
        raise HRepError("cone is not pointed")
    return _pointed_cone_rays(list(c.rows), c.dim)


def cone_contains(d: Cone, c: Cone) -> bool:
    """True iff the pointed cone D is contained in the cone C."""
    rays = cone_extreme_rays(d)
    return all(sum(a * b for a, b in zip(row, g)) <= 0 for g in rays for row in c.rows)


# ---------------------------------------------------------------------------
# Linear images, equivalence, wedges
# ---------------------------------------------------------------------------

def apply_linear_map(p: HRep, t: Sequence[Sequence]) -> HRep:
    """Image of P under the invertible linear map x -> T x."""
    tinv = inverse(t)  # raises SingularMatrixError when T is singular
    cols = list(zip(*tinv))
    new_rows = tuple(tuple(dot(r, col) for col in cols) for r in p.rows)
    new_eq = tuple(tuple(dot(r, col) for col in cols) for r in p.eq_rows)
    return HRep(p.dim, new_rows, p.rhs, p.labels, new_eq, p.eq_rhs, p.eq_labels)


def _canon_posscale(row: RatVec, d: Fraction) -> tuple[int, ...]:
    return tuple(int_positive_scale(list(row) + [d]))


def int_positive_scale(v: Sequence) -> tuple[int, ...]:
    """Scale by a positive rational to coprime integers (sign preserved)."""
    w = int_row(v)
    g = 0
    for x in w:
        g = gcd(g, abs(x))
    if g == 0:
        return w
    return tuple(x // g for x in w)


def hrep_equivalent(p: HRep, q: HRep) -> dict[str, str] | None:
    """Label bijection identifying rows equal up to positive scaling, or None.

    Both representations should be irredundant (or at least have matching
    row multisets) for the bijection to be meaningful.
    """
    if p.dim != q.dim or p.num_ineq != q.num_ineq or len(p.eq_rows) != len(q.eq_rows):
        return None

    # equalities compare as unordered multisets up to nonzero scaling
    def eq_canon(rows, rhs):
        out = []
        for a, b in zip(rows, rhs):
            joint = list(a) + [b]
            if all(x == 0 for x in joint):
                out.append(tuple(0 for _ in joint))
            else:
                out.append(normalize_coprime(joint))
        return sorted(out)

    if eq_canon(p.eq_rows, p.eq_rhs) != eq_canon(q.eq_rows, q.eq_rhs):
        return None
    buckets: dict[tuple[int, ...], list[str]] = {}
    for lab, row, d in sorted(zip(q.labels, q.rows, q.rhs), key=lambda t: t[0]):
        buckets.setdefault(_canon_posscale(row, d), []).append(lab)
    mapping: dict[str, str] = {}
    for lab, row, d in zip(p.labels, p.rows, p.rhs):
        key = _canon_posscale(row, d)
        if not buckets.get(key):
            return None
        mapping[lab] = buckets[key].pop(0)
    return mapping


def wedge_over_facet(p: HRep, facet_label: str) -> HRep:
    """Wedge of P over the facet named by facet_label.

    Lives one dimension up (new last coordinate t): every other row is
    lifted with coefficient 0 on t, the chosen row f becomes the pair
    {B_f . x + t <= d_f, -t <= 0}. The new row is labeled "t" (first free
    variant thereof). Errors when the label is not facet-defining.
    """
    from .vertexgraph import is_facet_defining

    if not is_facet_defining(p, facet_label):
        raise HRepError(f"row {facet_label!r} is not facet-defining")
    f = p.index_of(facet_label)
    zero = Fraction(0)
    rows = []
    for i, r in enumerate(p.rows):
        rows.append(tuple(r) + (Fraction(1) if i == f else zero,))
    t_label = "t"
    k = 2
    while t_label in p.labels or t_label in p.eq_labels:
        t_label = f"t{k}"
        k += 1
    rows.append(tuple([zero] * p.dim + [Fraction(-1)]))
    return HRep(
        dim=p.dim + 1,
        rows=tuple(rows),
        rhs=p.rhs + (zero,),
        labels=p.labels + (t_label,),
        eq_rows=tuple(tuple(r) + (zero,) for r in p.eq_rows),
        eq_rhs=p.eq_rhs,
        eq_labels=p.eq_labels,
    )

"""Exact linear algebra over the rationals.

All public functions take sequences of numbers (int or Fraction), never
floats. Vectors are tuples of Fractions, integer vectors are tuples of ints.
Hot enumeration paths elsewhere in the package rely on the pure-integer
helpers (`rank_int`, `kernel_line_int`, `solve_vertex_int`); those clear
denominators once and then stay in fraction-free integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rat = Fraction
RatVec = tuple[Fraction, ...]
RatMat = tuple[RatVec, ...]

Num = "int | Fraction"


class SingularMatrixError(ValueError):
    pass


def rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def vec(xs: Iterable) -> RatVec:
    return tuple(rat(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> RatMat:
    return tuple(vec(r) for r in rows)


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return sum((rat(x) * rat(y) for x, y in zip(a, b)), Fraction(0))


def vadd(a: Sequence, b: Sequence) -> RatVec:
    return tuple(rat(x) + rat(y) for x, y in zip(a, b))


def vsub(a: Sequence, b: Sequence) -> RatVec:
    return tuple(rat(x) - rat(y) for x, y in zip(a, b))


def smul(c, v: Sequence) -> RatVec:
    c = rat(c)
    return tuple(c * rat(x) for x in v)


def is_zero_vec(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def int_row(v: Sequence) -> tuple[int, ...]:
    """Scale one vector by a positive rational so all entries are integers."""
    den = 1
    for x in v:
        x = rat(x)
        den = _lcm(den, x.denominator)
    return tuple(int(rat(x) * den) for x in v)


def int_rows(rows: Iterable[Sequence]) -> list[tuple[int, ...]]:
    return [int_row(r) for r in rows]


def normalize_coprime(v: Sequence) -> tuple[int, ...]:
    """Canonical integer form of a nonzero rational vector.

    Clears denominators, divides by the gcd of the entries, and fixes the
    sign so the first nonzero entry is positive. Idempotent and invariant
    under scaling by any nonzero rational. Raises ValueError on the zero
    vector.
    """
    w = int_row(v)
    g = 0
    for x in w:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("cannot normalize the zero vector")
    w = tuple(x // g for x in w)
    for x in w:
        if x != 0:
            return w if x > 0 else tuple(-y for y in w)
    raise AssertionError("unreachable")


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows: Iterable[Sequence]) -> int:
    m = [[rat(x) for x in r] for r in rows]
    if not m:
        return 0
    _, pivots = _rref(m, len(m[0]))
    return len(pivots)


def kernel_basis(rows: Iterable[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Basis of the kernel of the row matrix, one canonical coprime integer
    vector per free column. rank + len(result) == ncols."""
    m = [[rat(x) for x in r] for r in rows]
    if m and any(len(r) != ncols for r in m):
        raise ValueError("row width mismatch")
    if not m:
        m = []
    red, pivots = _rref(m, ncols) if m else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][free]
        basis.append(normalize_coprime(v))
    return basis


def solve(rows: Iterable[Sequence], rhs: Sequence) -> RatVec | None:
    """One exact solution of rows * x = rhs, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    a = [[rat(x) for x in r] for r in rows]
    b = [rat(x) for x in rhs]
    if len(a) != len(b):
        raise ValueError("rhs length mismatch")
    if not a:
        return ()
    ncols = len(a[0])
    aug = [row + [bv] for row, bv in zip(a, b)]
    red, pivots = _rref(aug, ncols)
    for row in red:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = red[i][ncols]
    return tuple(x)


def inverse(rows: Iterable[Sequence]) -> RatMat:
    a = [[rat(x) for x in r] for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix not square")
    aug = [row + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = _rref(aug, n)
    if len(pivots) != n:
        raise SingularMatrixError("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))


def mat_vec(rows: Sequence[Sequence], v: Sequence) -> RatVec:
    return tuple(dot(r, v) for r in rows)


# ---------------------------------------------------------------------------
# Integer fast paths (fraction-free). Inputs must already be integer rows.
# ---------------------------------------------------------------------------

def rank_int(rows: Sequence[Sequence[int]], ncols: int, stop_at: int | None = None) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    If stop_at is given, returns early once the rank reaches it.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    r = 0
    prev = 1
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pk = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            mi = m[i]
            mic = mi[c]
            for j in range(c + 1, ncols):
                mi[j] = (pk * mi[j] - mic * row_r[j]) // prev
            mi[c] = 0
        prev = pk
        r += 1
        if r == nrows or (stop_at is not None and r >= stop_at):
            return r
    return r


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mik = mi[k]
            row_k = m[k]
            for j in range(k + 1, n):
                mi[j] = (pk * mi[j] - mik * row_k[j]) // prev
            mi[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1] if n > 0 else 1


def kernel_line_int(rows: Sequence[Sequence[int]], ncols: int) -> tuple[int, ...] | None:
    """Canonical generator of the kernel of an (n-1)-row integer matrix.

    Requires exactly ncols-1 rows. Returns None when the rows are dependent
    (kernel dimension > 1). The generator components are the signed maximal
    minors, reduced to coprime form with first nonzero entry positive.
    """
    if len(rows) != ncols - 1:
        raise ValueError("kernel_line_int needs exactly ncols-1 rows")
    g = []
    sign = 1
    for j in range(ncols):
        minor = [[r[c] for c in range(ncols) if c != j] for r in rows]
        g.append(sign * det_int(minor))
        sign = -sign
    if all(x == 0 for x in g):
        return None
    return normalize_coprime(g)


def solve_vertex_int(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Solve a square integer system exactly; returns (den, nums) with
    x = nums/den and den > 0, or None if the matrix is singular.

    Fraction-free forward elimination on the augmented matrix followed by
    integer back substitution (scaled so every intermediate stays integral).
    """
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return None
        pk = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mik = mi[k]
            row_k = m[k]
            for j in range(k + 1, n + 1):
                mi[j] = (pk * mi[j] - mik * row_k[j]) // prev
            mi[k] = 0
        prev = pk
    det = sign * m[n - 1][n - 1]
    if det == 0:
        return None
    # Back substitution over Fractions on the echelon form (n is small).
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n])
        for j in range(i + 1, n):
            s -= m[i][j] * x[j]
        if m[i][i] == 0:
            return None
        x[i] = s / m[i][i]
    den = 1
    for xi in x:
        den = _lcm(den, xi.denominator)
    nums = tuple(int(xi * den) for xi in x)
    return den, nums

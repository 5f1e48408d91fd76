"""Exact integer linear algebra.

Matrices are lists of rows of Python ints, so nothing ever overflows.

Hermite normal form convention (column style), fixed throughout the package:
``A @ U == H`` with ``U`` unimodular and ``H`` lower echelon.  Walking the rows
top to bottom, a row is a *pivot row* when it is not in the span of the rows
above it; its pivot sits in the next free column, is strictly positive, every
entry to its right is zero, and every entry to its left lies in
``[0, pivot)``.  Columns after the last pivot are zero.  For a matrix of full
column rank this representative of the orbit ``A @ GL_n(Z)`` is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

Matrix = list[list[int]]
Vector = tuple[int, ...]


class ShapeError(ValueError):
    """Raised when a matrix has the wrong shape for an operation."""


@dataclass(frozen=True)
class HnfResult:
    h: Matrix
    u: Matrix
    rank: int
    pivot_rows: tuple[int, ...]


@dataclass(frozen=True)
class SnfResult:
    s: Matrix
    u: Matrix
    v: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.s[i][i] for i in range(min(len(self.s), len(self.s[0]) if self.s else 0))]


def as_matrix(a: Sequence[Sequence[int]]) -> Matrix:
    rows = [[int(x) for x in row] for row in a]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ShapeError("ragged matrix")
    return rows


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(p * q for p, q in zip(row, x)) for row in a]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> Vector:
    """Divide ``v`` by the gcd of its entries (the zero vector is returned as is)."""
    g = content(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def det(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    m = as_matrix(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ShapeError(f"det needs a square matrix, got {n}x{len(m[0]) if m else 0}")
    if n == 0:
        return 1
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
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank(a: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals via fraction-free elimination."""
    m = as_matrix(a)
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, rows):
            f = m[i][c]
            if f:
                m[i] = [x * p - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def is_unimodular(a: Sequence[Sequence[int]]) -> bool:
    return abs(det(a)) == 1


def _col_combine(m: Matrix, c1: int, c2: int, s: int, t: int, x: int, y: int) -> None:
    # columns (c1, c2) <- (s*c1 + t*c2, x*c1 + y*c2)
    for row in m:
        a, b = row[c1], row[c2]
        row[c1] = s * a + t * b
        row[c2] = x * a + y * b


def _col_addmul(m: Matrix, dst: int, src: int, q: int) -> None:
    for row in m:
        row[dst] += q * row[src]


def _col_neg(m: Matrix, c: int) -> None:
    for row in m:
        row[c] = -row[c]


def hnf(a: Sequence[Sequence[int]]) -> HnfResult:
    """Column-style Hermite normal form: ``A @ U == H`` (see module docstring)."""
    h = as_matrix(a)
    rows = len(h)
    cols = len(h[0]) if h else 0
    u = identity(cols)
    c = 0
    pivot_rows = []
    for i in range(rows):
        if c == cols:
            break
        row = h[i]
        for j in range(c + 1, cols):
            b = row[j]
            if b == 0:
                continue
            a_ = row[c]
            if a_ != 0 and b % a_ == 0:
                q = -(b // a_)
                _col_addmul(h, j, c, q)
                _col_addmul(u, j, c, q)
                continue
            g, s, t = xgcd(a_, b)
            x, y = -b // g, a_ // g
            _col_combine(h, c, j, s, t, x, y)
            _col_combine(u, c, j, s, t, x, y)
        p = row[c]
        if p == 0:
            continue
        if p < 0:
            _col_neg(h, c)
            _col_neg(u, c)
            p = -p
        for j in range(c):
            q = row[j] // p
            if q:
                _col_addmul(h, j, c, -q)
                _col_addmul(u, j, c, -q)
        pivot_rows.append(i)
        c += 1
    return HnfResult(h=h, u=u, rank=c, pivot_rows=tuple(pivot_rows))


def _row_swap(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _row_addmul(m: Matrix, i: int, j: int, q: int) -> None:
    m[i] = [x + q * y for x, y in zip(m[i], m[j])]


def _col_swap(m: Matrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def snf(a: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form ``U @ A @ V == S`` with ``d_1 | d_2 | ...`` and ``d_i >= 0``."""
    s = as_matrix(a)
    rows = len(s)
    cols = len(s[0]) if s else 0
    u = identity(rows)
    v = identity(cols)
    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(s[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if s[i][j]]
            if not nz:
                return SnfResult(s=s, u=u, v=v)
            _, pi, pj = min(nz)
            if pi != t:
                _row_swap(s, t, pi)
                _row_swap(u, t, pi)
            if pj != t:
                _col_swap(s, t, pj)
                _col_swap(v, t, pj)
            d = s[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = s[i][t] // d
                if q:
                    _row_addmul(s, i, t, -q)
                    _row_addmul(u, i, t, -q)
                clean = clean and s[i][t] == 0
            for j in range(t + 1, cols):
                q = s[t][j] // d
                if q:
                    _col_addmul(s, j, t, -q)
                    _col_addmul(v, j, t, -q)
                clean = clean and s[t][j] == 0
            # leftover remainders are smaller than |d|, so the next pivot shrinks
            if not clean:
                continue
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if s[i][j] % d), None)
            if bad is None:
                break
            _row_addmul(s, t, bad, 1)
            _row_addmul(u, t, bad, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return SnfResult(s=s, u=u, v=v)


def solve_integer(
    a: Sequence[Sequence[int]], b: Sequence[int]
) -> Optional[tuple[Vector, list[Vector]]]:
    """Solve ``A @ x == b`` over the integers.

    Returns ``(x, kernel)`` where ``kernel`` is a basis of the integer kernel of
    ``A``, or ``None`` when no integer solution exists.
    """
    m = as_matrix(a)
    if len(m) != len(b):
        raise ShapeError(f"{len(m)} equations but {len(b)} right-hand sides")
    if not m:
        return (), []
    cols = len(m[0])
    res = hnf(m)
    h, u, r = res.h, res.u, res.rank
    y = [0] * cols
    for c, i in enumerate(res.pivot_rows):
        rest = b[i] - sum(h[i][l] * y[l] for l in range(c))
        q, rem = divmod(rest, h[i][c])
        if rem:
            return None
        y[c] = q
    for i in range(len(m)):
        if sum(h[i][l] * y[l] for l in range(r)) != b[i]:
            return None
    x = tuple(sum(u[k][l] * y[l] for l in range(r)) for k in range(cols))
    kernel = [tuple(u[k][l] for k in range(cols)) for l in range(r, cols)]
    return x, kernel


def reduce_mod_lattice(x: Sequence[int], basis: Sequence[Sequence[int]]) -> Vector:
    """Canonical representative of ``x`` modulo the lattice spanned by ``basis``.

    The basis is brought to row echelon form (transposed HNF) and each pivot
    coordinate of ``x`` is reduced into ``[0, pivot)``.
    """
    x = list(x)
    if not basis:
        return tuple(x)
    hb = transpose(hnf(transpose(basis)).h)  # rows: upper echelon basis
    for row in hb:
        piv = next((j for j, e in enumerate(row) if e), None)
        if piv is None:
            continue
        q = x[piv] // row[piv]
        if q:
            x = [xi - q * ri for xi, ri in zip(x, row)]
    return tuple(x)


def affine_lattice_coordinates(points: Sequence[Sequence[int]]) -> tuple[int, list[Vector]]:
    """Map points onto the lattice of their affine span.

    Returns ``(d, coords)`` where ``coords`` are the images in ``Z^d`` under a
    lattice isomorphism between (affine span) ∩ Z^n and Z^d, with the first
    point sent to the origin.
    """
    base = points[0]
    diffs = [[p - q for p, q in zip(pt, base)] for pt in points]
    res = hnf(diffs)
    d = res.rank
    return d, [tuple(row[:d]) for row in res.h]

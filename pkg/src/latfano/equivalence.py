"""Affine unimodular equivalence, canonical normal forms and the D_n family.

Normal form
-----------
Maps act on row vectors, ``x -> (x - v0) @ U`` with ``U`` in ``GL_n(Z)``.
For an ordered affine basis ``(v0, v1, ..., vn)`` of vertices let ``D`` be
the matrix with rows ``vi - v0``.  Its column Hermite form ``H = D @ U`` (see
:mod:`latfano.linalg`) is the unique representative of ``D @ GL_n(Z)``, and
``U`` is then determined, so the remaining vertices map to fixed rows.  The
normal form is the lexicographic minimum, over all ordered affine bases, of

    [0, H rows..., sorted((w - v0) @ U for the other vertices w)]

which is invariant by construction: an equivalence permutes ordered bases.
Two polytopes with equal forms are equivalent because each form is the
vertex matrix of an affine unimodular image.  The search keeps only branches
whose partial Hermite rows are minimal (prefix rows of the Hermite form of
``D`` only depend on the prefix rows of ``D``), and the base point ``v0`` is
restricted to vertices with the smallest facet-distance profile.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .linalg import det, rank, xgcd
from .polytope import LatticePolytope, Point, convex_hull, count_points


@dataclass(frozen=True)
class NormalForm:
    matrix: tuple[Point, ...]

    @property
    def key(self) -> str:
        text = ";".join(",".join(map(str, r)) for r in self.matrix)
        return hashlib.sha1(text.encode()).hexdigest()[:16]

    @property
    def dim(self) -> int:
        return len(self.matrix[0])

    def to_text(self) -> str:
        lines = ["# normal-form", f"dim {self.dim}"]
        lines.extend(" ".join(map(str, r)) for r in self.matrix)
        return "\n".join(lines) + "\n"

    def polytope(self) -> LatticePolytope:
        return convex_hull(self.matrix)


def _profile(p: LatticePolytope, v: Point) -> tuple[int, ...]:
    return tuple(sorted(sum(a * b for a, b in zip(u, v)) + c for u, c in p.facets))


def _extend(level: int, u: list[list[int]], d: Sequence[int]):
    """Append row ``d`` to a Hermite prefix with transform ``u``.

    Rows already placed vanish on columns ``>= level``, so column operations
    there and the left reduction by the new pivot column leave them intact.
    Returns ``(new_row, new_u)`` or ``None`` if ``d`` is dependent.
    """
    n = len(u)
    r = [sum(d[k] * u[k][j] for k in range(n)) for j in range(n)]
    u = [row[:] for row in u]
    c = level
    for j in range(c + 1, n):
        b = r[j]
        if b == 0:
            continue
        a = r[c]
        if a != 0 and b % a == 0:
            q = b // a
            for row in u:
                row[j] -= q * row[c]
            r[j] = 0
            continue
        g, s_, t = xgcd(a, b)
        x, y = -b // g, a // g
        for row in u:
            p_, q_ = row[c], row[j]
            row[c] = s_ * p_ + t * q_
            row[j] = x * p_ + y * q_
        r[c], r[j] = g, 0
    piv = r[c]
    if piv == 0:
        return None
    if piv < 0:
        for row in u:
            row[c] = -row[c]
        piv = r[c] = -piv
    for j in range(c):
        q = r[j] // piv
        if q:
            for row in u:
                row[j] -= q * row[c]
            r[j] -= q * piv
    return tuple(r), u


def normal_form(p: LatticePolytope) -> NormalForm:
    if "nf" in p._cache:
        return p._cache["nf"]
    n = p.ambient_rank
    verts = p.vertices
    profiles = [_profile(p, v) for v in verts]
    best_profile = min(profiles)
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    # state: (v0 index, chosen indices, hermite rows so far, transform)
    states = [(i, (i,), (), ident) for i, prof in enumerate(profiles) if prof == best_profile]
    for level in range(n):
        best_row = None
        nxt = []
        for i0, chosen, rows, u in states:
            v0 = verts[i0]
            for j, w in enumerate(verts):
                if j in chosen:
                    continue
                ext = _extend(level, u, [a - b for a, b in zip(w, v0)])
                if ext is None:
                    continue
                row, u2 = ext
                if best_row is None or row < best_row:
                    best_row = row
                    nxt = [(i0, chosen + (j,), rows + (row,), u2)]
                elif row == best_row:
                    nxt.append((i0, chosen + (j,), rows + (row,), u2))
        states = nxt
    best = None
    for i0, chosen, rows, u in states:
        v0 = verts[i0]
        rest = sorted(
            tuple(sum((w[k] - v0[k]) * u[k][j] for k in range(n)) for j in range(n))
            for idx, w in enumerate(verts)
            if idx not in chosen
        )
        form = ((0,) * n,) + rows + tuple(rest)
        if best is None or form < best:
            best = form
    nf = NormalForm(best)
    p._cache["nf"] = nf
    return nf


def _affine_basis(verts) -> list[int]:
    chosen = [0]
    rows = []
    for j in range(1, len(verts)):
        cand = rows + [[a - b for a, b in zip(verts[j], verts[0])]]
        if rank(cand) == len(cand):
            rows = cand
            chosen.append(j)
    return chosen


def find_equivalence(p: LatticePolytope, q: LatticePolytope):
    """Search vertex correspondences for ``x -> (x - b0) @ U + q0`` mapping ``p`` onto ``q``.

    Returns ``(U, b0, q0)`` or ``None``.  Independent of :func:`normal_form`.
    """
    n = p.ambient_rank
    if q.ambient_rank != n or len(p.vertices) != len(q.vertices):
        return None
    if len(p.facets) != len(q.facets) or count_points(p) != count_points(q):
        return None
    pv, qv = p.vertices, q.vertices
    basis = _affine_basis(pv)
    b0 = pv[basis[0]]
    bp = [[a - b for a, b in zip(pv[i], b0)] for i in basis[1:]]
    dp = det(bp)
    # adj(bp) so that bp^{-1} = adj / dp
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(bp) if k != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    target = set(qv)
    for tup in permutations(range(len(qv)), n + 1):
        q0 = qv[tup[0]]
        bq = [[a - b for a, b in zip(qv[i], q0)] for i in tup[1:]]
        if abs(det(bq)) != abs(dp):
            continue
        u = []
        ok = True
        for i in range(n):
            row = []
            for j in range(n):
                s = sum(adj[i][k] * bq[k][j] for k in range(n))
                if s % dp:
                    ok = False
                    break
                row.append(s // dp)
            if not ok:
                break
            u.append(row)
        if not ok:
            continue
        image = {
            tuple(sum((v[k] - b0[k]) * u[k][j] for k in range(n)) + q0[j] for j in range(n))
            for v in pv
        }
        if image == target:
            return u, b0, q0
    return None


def is_equivalent(p: LatticePolytope, q: LatticePolytope) -> bool:
    return find_equivalence(p, q) is not None


def make_dn(n: int) -> LatticePolytope:
    """``Conv{0, e1, e2, e1+e2+2e3, e4, ..., en}``."""
    if n < 3:
        raise ValueError(f"D_n needs n >= 3, got {n}")

    def e(i):
        return tuple(int(j == i) for j in range(n))

    special = tuple(1 if j < 2 else (2 if j == 2 else 0) for j in range(n))
    pts = [(0,) * n, e(0), e(1), special] + [e(i) for i in range(3, n)]
    return convex_hull(pts)


def is_dn(p: LatticePolytope) -> bool:
    n = p.ambient_rank
    if n < 3 or len(p.vertices) != n + 1 or count_points(p) != n + 1:
        return False
    return is_equivalent(p, make_dn(n))


def random_unimodular(n: int, rng, steps: int = 0) -> list[list[int]]:
    """Product of random elementary matrices (multipliers in [-2, 2]) and a
    signed permutation; ``rng`` is a :class:`random.Random`."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps or 3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            break
        f = rng.choice((-2, -1, 1, 2))
        u[i] = [a + f * b for a, b in zip(u[i], u[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((-1, 1)) for _ in range(n)]
    return [[s * x for x in u[k]] for s, k in zip(signs, perm)]

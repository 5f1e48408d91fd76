"""Vertex cones, their edge generators and dual ray generators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor
from typing import Optional, Sequence

from . import kernels
from .linalg import det, primitive, rank
from .polytope import LatticePolytope, Point, convex_hull
from ._pykernels import _normal


@dataclass(frozen=True)
class VertexCone:
    """Cone of ``P`` at ``apex``, shifted so the apex is the origin.

    ``edge_generators`` are the primitive directions of the edges at the apex;
    ``dual_generators`` the primitive inward normals of the facets through it.
    """

    apex: Point
    edge_generators: tuple[Point, ...]
    dual_generators: tuple[Point, ...]

    @property
    def dim(self) -> int:
        return len(self.apex)

    def heights(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(u, x)) for u in self.dual_generators)


def _dot(u, x):
    return sum(a * b for a, b in zip(u, x))


def vertex_cone(p: LatticePolytope, v: Sequence[int]) -> VertexCone:
    v = tuple(v)
    if v not in p.vertices:
        raise ValueError(f"{v} is not a vertex of the polytope")
    n = p.ambient_rank
    duals = sorted(u for u, c in p.facets if _dot(u, v) + c == 0)
    edges = set()
    for sub in combinations(duals, n - 1):
        if rank(sub) != n - 1:
            continue
        d = primitive(_normal([list(u) for u in sub], n))
        hs = [_dot(u, d) for u in duals]
        if all(h >= 0 for h in hs):
            edges.add(d)
        elif all(h <= 0 for h in hs):
            edges.add(tuple(-x for x in d))
    return VertexCone(apex=v, edge_generators=tuple(sorted(edges)), dual_generators=tuple(duals))


def cone_base_polytope(c: VertexCone) -> LatticePolytope:
    """``Conv{0, m_1, ..., m_t}`` for the edge generators ``m_i``."""
    return convex_hull([(0,) * c.dim, *c.edge_generators])


def _height_box(c: VertexCone, h: int) -> tuple[Point, Point]:
    # The region 0 <= <u_j, x> <= h sits inside B^{-1}[0, h]^n for any n
    # independent dual generators B.
    n = c.dim
    basis = None
    for sub in combinations(c.dual_generators, n):
        if rank(sub) == n:
            basis = [list(u) for u in sub]
            break
    if basis is None:
        raise ValueError("cone is not pointed")
    d = det(basis)
    adj = []
    for j in range(n):  # adj[i][j] = cofactor C_ji
        row = []
        for i in range(n):
            minor = [r[:i] + r[i + 1:] for k, r in enumerate(basis) if k != j]
            row.append((-1) ** (i + j) * det(minor))
        adj.append(row)
    inv = [[Fraction(adj[j][i], d) for j in range(n)] for i in range(n)]
    lo, hi = [], []
    for i in range(n):
        neg = sum(min(x, 0) for x in inv[i]) * h
        pos = sum(max(x, 0) for x in inv[i]) * h
        lo.append(floor(neg))
        hi.append(ceil(pos))
    return tuple(lo), tuple(hi)


def truncated_cone_points(c: VertexCone, height_bound: int) -> tuple[frozenset, frozenset]:
    """Lattice points of the cone with every height ``<u_j, x>`` at most the bound,
    and the subset of those that are interior (every height at least 1)."""
    if height_bound < 1:
        raise ValueError("height bound must be positive")
    lo, hi = _height_box(c, height_bound)
    duals = list(c.dual_generators)
    normals = duals + [tuple(-x for x in u) for u in duals]
    offsets = [0] * len(duals) + [height_bound] * len(duals)
    pts = kernels.list_points(normals, offsets, lo, hi, False)
    interior = [x for x in pts if all(h >= 1 for h in c.heights(x))]
    return frozenset(pts), frozenset(interior)


def definitional_gorenstein(c: VertexCone, height_bound: Optional[int] = None) -> Optional[Point]:
    """Brute-force Gorenstein test straight from ``Int(C) ∩ M = m0 + C ∩ M``.

    Works on the truncation at ``height_bound`` (default ``3n``) and returns
    the witness ``m0`` relative to the apex, or ``None``.  Independent of the
    linear-system test in :mod:`latfano.gorenstein`.
    """
    h = height_bound or 3 * c.dim
    _, interior = truncated_cone_points(c, h)
    if not interior:
        return None
    # m0 + (C ∩ M) has a unique element of least total height, namely m0
    sums = sorted((sum(c.heights(x)), x) for x in interior)
    if len(sums) > 1 and sums[0][0] == sums[1][0]:
        return None
    m0 = sums[0][1]
    for x in interior:
        diff = tuple(a - b for a, b in zip(x, m0))
        if any(t < 0 for t in c.heights(diff)):
            return None
    return m0

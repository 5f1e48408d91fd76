"""Exhaustive enumeration of small lattice polytopes and claim verification.

Enumeration walks subsets of box points in convex position.  Any subset of a
set in convex position is again in convex position, so a depth-first search
that only appends points of larger index meets every vertex set exactly once.
Interior counts only grow along the search (``Q ⊆ P`` gives
``Int(kQ) ⊆ Int(kP)``), so a profile ``|Int(kP)| = c`` prunes every branch
whose count already exceeds ``c``.  Translation classes are cut down by only
keeping vertex sets that touch the lower face of the box on every axis.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional

from . import kernels
from .linalg import rank
from .polytope import LatticePolytope, Point, convex_hull

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusSpec:
    """What to enumerate.

    ``profile`` is a tuple of ``(k, count)`` pairs meaning
    ``|Int(kP) ∩ M| == count``; an empty profile keeps every polytope.
    """

    dim: int
    lo: tuple[int, ...]
    hi: tuple[int, ...]
    profile: tuple[tuple[int, int], ...] = ()
    max_vertices: Optional[int] = None

    def __post_init__(self):
        if len(self.lo) != self.dim or len(self.hi) != self.dim:
            raise ValueError("box bounds must have one entry per axis")
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise ValueError("empty box")
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if any(k < 1 or c < 0 for k, c in self.profile):
            raise ValueError("profile entries need k >= 1 and count >= 0")

    @classmethod
    def cube(cls, dim: int, lo: int, hi: int, profile=(), max_vertices=None) -> "CensusSpec":
        prof = tuple(sorted(dict(profile).items())) if isinstance(profile, dict) else tuple(profile)
        return cls(dim, (lo,) * dim, (hi,) * dim, prof, max_vertices)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "box": [list(self.lo), list(self.hi)],
            "interior_profile": {str(k): c for k, c in self.profile},
            "max_vertices": self.max_vertices,
        }


def parse_profile(text: str) -> tuple[tuple[int, int], ...]:
    """Parse ``"1:0,2:1"`` into ``((1, 0), (2, 1))``."""
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        k, _, c = part.partition(":")
        try:
            k_, c_ = int(k), int(c)
        except ValueError:
            raise ValueError(f"bad profile entry {part!r}") from None
        if k_ < 1 or c_ < 0:
            raise ValueError(f"bad profile entry {part!r}")
        out[k_] = c_
    return tuple(sorted(out.items()))


def _pivot_columns(rows: list[list[int]]) -> list[int]:
    m = [r[:] for r in rows]
    cols = len(m[0])
    piv = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = [x * m[r][c] - f * y for x, y in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    return piv


def _in_convex_position(pts: list[Point], arank: int, n: int):
    """Return facets of the hull (full-dimensional case), ``()`` for a lower
    dimensional set in convex position, or ``None`` if some point is not extreme."""
    if arank < n:
        if arank <= 1:
            return () if len(pts) <= arank + 1 else None
        p0 = pts[0]
        diffs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
        cols = _pivot_columns(diffs)
        proj = [tuple(p[c] for c in cols) for p in pts]
        _, flags = kernels.hull(proj, arank)
        return () if all(flags) else None
    fac, flags = kernels.hull(pts, n)
    return fac if all(flags) else None


def _interior_count(fac, lo, hi, k):
    return kernels.count_points(
        [u for u, _ in fac], [k * c for _, c in fac], tuple(k * x for x in lo), tuple(k * x for x in hi), True
    )


def _search_root(spec: CensusSpec, root: int, pts: list[Point]) -> list[tuple[Point, ...]]:
    n = spec.dim
    found = []
    profile = spec.profile
    maxv = spec.max_vertices
    npts = len(pts)

    def visit(idx: list[int], chosen: list[Point], arank: int, basis: list[list[int]]):
        for j in range(idx[-1] + 1, npts):
            x = pts[j]
            d = [a - b for a, b in zip(x, chosen[0])]
            new_rank = arank
            new_basis = basis
            if arank < n:
                cand = basis + [d]
                if rank(cand) == len(cand):
                    new_rank = arank + 1
                    new_basis = cand
            cur = chosen + [x]
            if maxv is not None and len(cur) > maxv:
                continue
            fac = _in_convex_position(cur, new_rank, n)
            if fac is None:
                continue
            if new_rank == n:
                cols = list(zip(*cur))
                lo = tuple(min(c) for c in cols)
                hi = tuple(max(c) for c in cols)
                exact = True
                over = False
                for k, target in profile:
                    cnt = _interior_count(fac, lo, hi, k)
                    if cnt > target:
                        over = True
                        break
                    if cnt != target:
                        exact = False
                if over:
                    continue
                if exact and lo == spec.lo:
                    found.append(tuple(cur))
            visit(idx + [j], cur, new_rank, new_basis)

    visit([root], [pts[root]], 0, [])
    return found


def box_points(spec: CensusSpec) -> list[Point]:
    return sorted(product(*[range(a, b + 1) for a, b in zip(spec.lo, spec.hi)]))


def worker_count() -> int:
    env = os.environ.get("LATFANO_THREADS")
    cpus = os.cpu_count() or 1
    if env:
        try:
            return max(1, min(cpus, int(env)))
        except ValueError:
            pass
    return 1


def _root_job(args):
    spec, root = args
    return _search_root(spec, root, box_points(spec))


def _box_symmetries(spec: CensusSpec):
    """Signed axis permutations mapping the box onto itself."""
    n = spec.dim
    widths = [b - a for a, b in zip(spec.lo, spec.hi)]
    out = []
    for perm in permutations(range(n)):
        if any(widths[perm[i]] != widths[i] for i in range(n)):
            continue
        for flips in product((False, True), repeat=n):
            out.append((perm, flips))
    return out


def enumerate_polytopes(spec: CensusSpec, workers: Optional[int] = None) -> list[LatticePolytope]:
    """One polytope per unimodular equivalence class satisfying ``spec``.

    Classes are listed in order of their normal forms; the representative of
    each class is the first one met by the search, in box coordinates.
    """
    from .equivalence import normal_form

    pts = box_points(spec)
    roots = [i for i, p in enumerate(pts) if p[0] == spec.lo[0]]
    workers = worker_count() if workers is None else workers
    jobs = [(spec, r) for r in roots]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_root_job, jobs))
    else:
        results = [_root_job(j) for j in jobs]
    syms = _box_symmetries(spec)
    seen = set()
    classes: dict = {}
    for found in results:
        for verts in found:
            key = kernels.symmetry_key(verts, syms, spec.lo)
            if key in seen:
                continue
            seen.add(key)
            p = convex_hull(verts)
            nf = normal_form(p)
            if nf.matrix not in classes:
                classes[nf.matrix] = p
    ordered = sorted(classes.items(), key=lambda kv: (len(kv[0]), kv[0]))
    log.info("census %s: %d classes", spec, len(ordered))
    return [p for _, p in ordered]

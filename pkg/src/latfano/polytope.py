"""Lattice polytopes: hulls, facets, dilations and lattice point enumeration."""

from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from typing import Optional, Union

from . import kernels
from .linalg import affine_lattice_coordinates, det, rank

Point = tuple[int, ...]
Facet = tuple[Point, int]  # (inward primitive normal u, offset c): <u, x> + c >= 0


class DimensionError(ValueError):
    """The input points do not span the ambient space."""

    def __init__(self, affine_rank: int, ambient_rank: int):
        super().__init__(
            f"points span an affine space of dimension {affine_rank}, expected {ambient_rank}"
        )
        self.affine_rank = affine_rank
        self.ambient_rank = ambient_rank


class ParseError(ValueError):
    pass


class LatticePolytope:
    """A full-dimensional lattice polytope.

    Build instances with :func:`convex_hull`.  Vertices are stored in
    lexicographic order and facets sorted by ``(normal, offset)``; both are
    fixed at construction, so instances are safe to share between workers.
    """

    __slots__ = ("ambient_rank", "vertices", "facets", "_cache")

    def __init__(self, vertices: Sequence[Point], facets: Sequence[Facet], ambient_rank: int):
        self.ambient_rank = ambient_rank
        self.vertices: tuple[Point, ...] = tuple(sorted(vertices))
        self.facets: tuple[Facet, ...] = tuple(sorted(facets))
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return self.ambient_rank

    @property
    def normals(self) -> list[Point]:
        return [u for u, _ in self.facets]

    @property
    def offsets(self) -> list[int]:
        return [c for _, c in self.facets]

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope({list(self.vertices)})"

    def contains(self, x: Sequence[int], strict: bool = False) -> bool:
        t = 1 if strict else 0
        return all(sum(a * b for a, b in zip(u, x)) + c >= t for u, c in self.facets)

    def vertices_on(self, facet_index: int) -> list[int]:
        u, c = self.facets[facet_index]
        return [
            i for i, v in enumerate(self.vertices) if sum(a * b for a, b in zip(u, v)) + c == 0
        ]

    def bounding_box(self) -> tuple[Point, Point]:
        cols = list(zip(*self.vertices))
        return tuple(min(c) for c in cols), tuple(max(c) for c in cols)


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]]) if len(points) > 1 else 0


def convex_hull(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Hull of lattice points; raises :class:`DimensionError` unless full-dimensional."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise DimensionError(-1, 0)
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points of mixed length")
    r = affine_rank(pts)
    if r != n:
        raise DimensionError(r, n)
    fac, flags = kernels.hull(pts, n)
    verts = [p for p, f in zip(pts, flags) if f]
    return LatticePolytope(verts, fac, n)


def facets(p: LatticePolytope) -> list[Facet]:
    return list(p.facets)


def dilate(p: LatticePolytope, k: int) -> LatticePolytope:
    if k <= 0:
        raise ValueError(f"dilation factor must be positive, got {k}")
    return LatticePolytope(
        [tuple(k * x for x in v) for v in p.vertices],
        [(u, k * c) for u, c in p.facets],
        p.ambient_rank,
    )


def translate(p: LatticePolytope, t: Sequence[int]) -> LatticePolytope:
    return LatticePolytope(
        [tuple(a + b for a, b in zip(v, t)) for v in p.vertices],
        [(u, c - sum(a * b for a, b in zip(u, t))) for u, c in p.facets],
        p.ambient_rank,
    )


def transform(p: LatticePolytope, u: Sequence[Sequence[int]], t: Optional[Sequence[int]] = None) -> LatticePolytope:
    """Image of ``p`` under ``x -> U x + t`` (``U`` must be nonsingular)."""
    n = p.ambient_rank
    t = t or (0,) * n
    img = [
        tuple(sum(u[i][j] * v[j] for j in range(n)) + t[i] for i in range(n)) for v in p.vertices
    ]
    return convex_hull(img)


def _dilated_box(p: LatticePolytope, k: int) -> tuple[Point, Point]:
    lo, hi = p.bounding_box()
    return tuple(k * x for x in lo), tuple(k * x for x in hi)


def count_points(p: LatticePolytope, k: int = 1, strict: bool = False) -> int:
    """``|kP ∩ M|`` (or the interior count when ``strict``) without listing points."""
    if k == 0:
        return 0 if strict else 1
    key = ("count", k, strict)
    if key not in p._cache:
        lo, hi = _dilated_box(p, k)
        p._cache[key] = kernels.count_points(
            p.normals, [k * c for c in p.offsets], lo, hi, strict
        )
    return p._cache[key]


def lattice_points(p: LatticePolytope) -> frozenset[Point]:
    return frozenset(dilate_points(p, 1, False))


def interior_lattice_points(p: LatticePolytope) -> frozenset[Point]:
    return frozenset(dilate_points(p, 1, True))


def interior_count(p: LatticePolytope, k: int = 1) -> int:
    """``|Int(kP) ∩ M|``, with ``Int(0P)`` empty."""
    return count_points(p, k, strict=True)


def dilate_points(p: LatticePolytope, k: int, strict: bool) -> list[Point]:
    key = ("points", k, strict)
    if key not in p._cache:
        lo, hi = _dilated_box(p, k)
        p._cache[key] = kernels.list_points(p.normals, [k * c for c in p.offsets], lo, hi, strict)
    return p._cache[key]


def layer_equality(p: LatticePolytope, k: int) -> bool:
    """Whether every lattice point of ``(k+1)P`` is a point of ``kP`` plus a point of ``P``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    key = ("layer", k)
    if key not in p._cache:
        p._cache[key] = kernels.layer_covered(
            p.normals, p.offsets, k, dilate_points(p, 1, False), dilate_points(p, k + 1, False)
        )
    return p._cache[key]


def default_layer_bound(n: int) -> int:
    return max(1, n - 2)


def is_normal(p: LatticePolytope, layers_up_to: Optional[int] = None) -> bool:
    """Check the layer equality for ``k = 1..K``.

    ``K`` defaults to ``max(1, n-2)``: the equality holds for every ``k >= n-1``
    for any lattice ``n``-polytope, so higher layers carry no information.
    """
    kmax = default_layer_bound(p.ambient_rank) if layers_up_to is None else layers_up_to
    return all(layer_equality(p, k) for k in range(1, kmax + 1))


def is_pyramid(p: LatticePolytope) -> Optional[tuple[int, int]]:
    """First ``(facet index, apex vertex index)`` with the facet holding all other vertices."""
    nv = len(p.vertices)
    for i in range(len(p.facets)):
        on = p.vertices_on(i)
        if len(on) == nv - 1:
            apex = next(j for j in range(nv) if j not in on)
            return i, apex
    return None


def pyramid_decompositions(p: LatticePolytope) -> list[tuple[int, int]]:
    nv = len(p.vertices)
    out = []
    for i in range(len(p.facets)):
        on = set(p.vertices_on(i))
        if len(on) == nv - 1:
            out.append((i, next(j for j in range(nv) if j not in on)))
    return out


def is_simplex(p: LatticePolytope) -> bool:
    return len(p.vertices) == p.ambient_rank + 1


def edge_matrix(p: LatticePolytope, base: int = 0) -> list[list[int]]:
    v0 = p.vertices[base]
    return [[a - b for a, b in zip(v, v0)] for i, v in enumerate(p.vertices) if i != base]


def normalized_volume(p: LatticePolytope) -> int:
    """Normalized volume of a simplex, ``|det|`` of its edge matrix."""
    if not is_simplex(p):
        raise ValueError("normalized_volume is only implemented for simplices")
    return abs(det(edge_matrix(p)))


def is_basic_simplex(p: LatticePolytope) -> bool:
    return is_simplex(p) and normalized_volume(p) == 1


def ehrhart_counts(p: LatticePolytope, kmax: int) -> list[int]:
    if kmax < p.ambient_rank:
        raise ValueError(f"kmax must be at least the dimension {p.ambient_rank}")
    return [count_points(p, k) for k in range(kmax + 1)]


def facet_polytope(p: LatticePolytope, facet_index: int) -> LatticePolytope:
    """The facet as a full-dimensional polytope in the lattice of its affine span."""
    verts = [p.vertices[i] for i in p.vertices_on(facet_index)]
    _, coords = affine_lattice_coordinates(verts)
    return convex_hull(coords)


def pyramid(base: LatticePolytope) -> LatticePolytope:
    """Lattice pyramid of height one: ``Conv(base x {0}, e_{n+1})``."""
    n = base.ambient_rank
    return convex_hull([v + (0,) for v in base.vertices] + [(0,) * n + (1,)])


# ---------------------------------------------------------------- text format

def parse_polytope(text: str) -> LatticePolytope:
    """Parse the ``dim n`` text format (one point per line, ``#`` comments)."""
    n = None
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            head = line.split()
            if len(head) != 2 or head[0] != "dim":
                raise ParseError(f"line {lineno}: expected 'dim n', got {line!r}")
            try:
                n = int(head[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad dimension {head[1]!r}") from None
            if n < 1:
                raise ParseError(f"line {lineno}: dimension must be positive")
            continue
        try:
            pt = tuple(int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer coordinate in {line!r}") from None
        if len(pt) != n:
            raise ParseError(f"line {lineno}: expected {n} coordinates, got {len(pt)}")
        pts.append(pt)
    if n is None:
        raise ParseError("empty input")
    if not pts:
        raise DimensionError(-1, n)
    return convex_hull(pts)


def format_points(points: Iterable[Sequence[int]], n: int, header: Optional[str] = None) -> str:
    lines = []
    if header:
        lines.extend(h if h.startswith("#") else "# " + h for h in header.splitlines())
    lines.append(f"dim {n}")
    lines.extend(" ".join(str(x) for x in pt) for pt in points)
    return "\n".join(lines) + "\n"


def format_polytope(p: LatticePolytope, header: Optional[str] = None) -> str:
    return format_points(p.vertices, p.ambient_rank, header)


def read_polytope(path: Union[str, os.PathLike]) -> LatticePolytope:
    with open(path) as fh:
        return parse_polytope(fh.read())


def write_polytope(p: LatticePolytope, path: Union[str, os.PathLike], header: Optional[str] = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_polytope(p, header))

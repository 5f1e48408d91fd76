"""Gorenstein vertices, reflexivity, the Gorenstein index and analysis reports."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from .cones import vertex_cone
from .linalg import is_unimodular, reduce_mod_lattice, solve_integer
from .polytope import (
    LatticePolytope,
    Point,
    count_points,
    dilate_points,
    interior_count,
    interior_lattice_points,
    is_basic_simplex,
    is_normal,
    is_pyramid,
    is_simplex,
)

GORENSTEIN = "gorenstein"
NONSINGULAR = "nonsingular"
NOT_GORENSTEIN = "not_gorenstein"


@dataclass(frozen=True)
class GorensteinCertificate:
    """Outcome of the vertex test.

    ``m0`` is in absolute coordinates, so ``<u_j, m0 - vertex> == 1`` for
    every dual generator.  For ``not_gorenstein`` the ``witness`` holds the
    system ``matrix @ x == rhs`` that has no integer solution.
    """

    status: str
    vertex: Point
    m0: Optional[Point] = None
    witness: Optional[dict] = None

    @property
    def is_gorenstein(self) -> bool:
        return self.status in (GORENSTEIN, NONSINGULAR)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "vertex": list(self.vertex),
            "m0": list(self.m0) if self.m0 is not None else None,
            "witness": self.witness,
        }


def gorenstein_at_vertex(p: LatticePolytope, v) -> GorensteinCertificate:
    cone = vertex_cone(p, v)
    a = [list(u) for u in cone.dual_generators]
    rhs = [1] * len(a)
    sol = solve_integer(a, rhs)
    if sol is None:
        return GorensteinCertificate(
            NOT_GORENSTEIN, cone.apex, witness={"matrix": a, "rhs": rhs}
        )
    x, kernel = sol
    x = reduce_mod_lattice(x, kernel)
    m0 = tuple(a_ + b for a_, b in zip(cone.apex, x))
    n = p.ambient_rank
    status = NONSINGULAR if len(a) == n and is_unimodular(a) else GORENSTEIN
    return GorensteinCertificate(status, cone.apex, m0=m0)


def vertex_certificates(p: LatticePolytope) -> list[GorensteinCertificate]:
    if "certs" not in p._cache:
        p._cache["certs"] = [gorenstein_at_vertex(p, v) for v in p.vertices]
    return p._cache["certs"]


def is_gorenstein(p: LatticePolytope) -> bool:
    return all(c.is_gorenstein for c in vertex_certificates(p))


def is_reflexive(p: LatticePolytope) -> bool:
    """One interior lattice point, and every facet at lattice distance 1 from it.

    In the stored inward form ``<u, x> + c >= 0`` this means ``<u, m> + c == 1``
    at the interior point ``m``; after centring at ``m`` every facet reads
    ``<u, x> >= -1``.
    """
    return _reflexive_dilate(p, 1)


def _reflexive_dilate(p: LatticePolytope, r: int) -> bool:
    if interior_count(p, r) != 1:
        return False
    (m,) = dilate_points(p, r, True)
    return all(sum(a * b for a, b in zip(u, m)) + r * c == 1 for u, c in p.facets)


def gorenstein_index(p: LatticePolytope) -> Optional[int]:
    """Smallest ``r`` with an interior point in ``rP``, if ``rP`` is a reflexive
    translate; ``None`` otherwise.  ``(n+1)P`` always has an interior point."""
    n = p.ambient_rank
    for r in range(1, n + 2):
        if interior_count(p, r) > 0:
            return r if _reflexive_dilate(p, r) else None
    raise AssertionError("no interior point in (n+1)P")  # pragma: no cover


def del_pezzo_check(p: LatticePolytope) -> bool:
    """Whether ``|Int((n-1)P) ∩ M| == 1`` (the hypothesis of the Del Pezzo criterion)."""
    n = p.ambient_rank
    if n < 3:
        raise ValueError("the Del Pezzo hypothesis needs dimension >= 3")
    return interior_count(p, n - 1) == 1


def prop11_hypothesis(p: LatticePolytope) -> Optional[int]:
    """``g = |Int((n-1)P)|`` when ``Int((n-2)P)`` is empty and ``|P ∩ M| >= n+g+1``."""
    n = p.ambient_rank
    if n < 3:
        raise ValueError("needs dimension >= 3")
    if interior_count(p, n - 2) != 0:
        return None
    g = interior_count(p, n - 1)
    if count_points(p) >= n + g + 1:
        return g
    return None


@dataclass
class AnalysisReport:
    dimension: int
    vertices: list
    vertex_count: int
    lattice_point_count: int
    interior_counts: list
    interior_points: list
    vertex_certificates: list
    is_gorenstein: bool
    gorenstein_index: Optional[int]
    is_reflexive: bool
    is_normal: bool
    is_pyramid: Optional[list]
    is_simplex: bool
    is_basic: bool
    is_dn: bool
    layers_checked: int = field(default=0)

    def to_json(self) -> dict:
        d = asdict(self)
        d["vertex_certificates"] = [c.to_json() for c in self.vertex_certificates]
        return d


def analyze(p: LatticePolytope, layers_up_to: Optional[int] = None) -> AnalysisReport:
    from .equivalence import is_dn
    from .polytope import default_layer_bound

    n = p.ambient_rank
    certs = vertex_certificates(p)
    pyr = is_pyramid(p)
    k = default_layer_bound(n) if layers_up_to is None else layers_up_to
    return AnalysisReport(
        dimension=n,
        vertices=[list(v) for v in p.vertices],
        vertex_count=len(p.vertices),
        lattice_point_count=count_points(p),
        interior_counts=[interior_count(p, r) for r in range(1, n + 1)],
        interior_points=sorted(list(x) for x in interior_lattice_points(p)),
        vertex_certificates=certs,
        is_gorenstein=all(c.is_gorenstein for c in certs),
        gorenstein_index=gorenstein_index(p),
        is_reflexive=is_reflexive(p),
        is_normal=is_normal(p, k),
        is_pyramid=list(pyr) if pyr is not None else None,
        is_simplex=is_simplex(p),
        is_basic=is_basic_simplex(p),
        is_dn=is_dn(p),
        layers_checked=k,
    )

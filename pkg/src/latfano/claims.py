"""Falsifiable checks of the Gorenstein/normality statements over corpora.

Each claim is a function returning ``None`` when its hypothesis does not apply
to a polytope, else whether the conclusion holds.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Optional

from .census import CensusSpec, enumerate_polytopes
from .cones import cone_base_polytope, vertex_cone
from .equivalence import is_dn, make_dn, normal_form, random_unimodular
from .gorenstein import is_gorenstein, prop11_hypothesis
from .polytope import (
    LatticePolytope,
    convex_hull,
    count_points,
    dilate,
    dilate_points,
    facet_polytope,
    format_polytope,
    interior_count,
    is_basic_simplex,
    is_normal,
    is_pyramid,
    is_simplex,
    layer_equality,
    pyramid,
    pyramid_decompositions,
    read_polytope,
    transform,
)


# ------------------------------------------------------------------ claims

def _thm01(p):
    if p.dim != 2 or interior_count(p, 1) != 1:
        return None
    return is_gorenstein(p)


def _thm02_3d(p):
    if p.dim != 3 or interior_count(p, 2) != 1:
        return None
    return is_gorenstein(p)


def _thm02_nd(p):
    n = p.dim
    if n < 4 or interior_count(p, n - 1) != 1:
        return None
    return is_gorenstein(p)


def _lemma1(p):
    n = p.dim
    empty = [r for r in range(1, n) if interior_count(p, r) == 0]
    if not empty:
        return None
    r = max(empty)
    return all(layer_equality(p, k) for k in range(n - r, n + 1))


def _lemma2(p):
    n = p.dim
    if not is_simplex(p) or count_points(p) != n + 1 or interior_count(p, n - 1) != 0:
        return None
    return is_basic_simplex(p)


def _lemma3(p):
    if interior_count(p, p.dim) != 0:
        return None
    return is_basic_simplex(p)


def _prop11(p):
    if p.dim < 3 or prop11_hypothesis(p) is None:
        return None
    return is_normal(p)


def _prop31(p):
    n = p.dim
    if n < 3 or is_pyramid(p) is None:
        return None
    if count_points(p) != n + 1 or interior_count(p, n - 1) != 1:
        return None
    return is_dn(p)


def _facet_point_count(p: LatticePolytope, i: int) -> int:
    u, c = p.facets[i]
    return sum(1 for x in dilate_points(p, 1, False) if sum(a * b for a, b in zip(u, x)) + c == 0)


def _pyramid_hypothesis(p, need_gorenstein_facet: bool) -> bool:
    total = count_points(p)
    for fi, _ in pyramid_decompositions(p):
        if _facet_point_count(p, fi) + 1 != total:
            continue
        if need_gorenstein_facet and not is_gorenstein(facet_polytope(p, fi)):
            continue
        return True
    return False


def _lemma32(p):
    n = p.dim
    if n < 3 or interior_count(p, n - 1) != 1:
        return None
    if not _pyramid_hypothesis(p, True):
        return None
    return is_gorenstein(p)


def _cor33(p):
    if p.dim != 3 or interior_count(p, 2) != 1:
        return None
    if not _pyramid_hypothesis(p, False):
        return None
    return is_gorenstein(p)


def vertex_cone_bases(p: LatticePolytope) -> list[LatticePolytope]:
    return [cone_base_polytope(vertex_cone(p, v)) for v in p.vertices]


def _lemma41(p):
    n = p.dim
    if n < 4 or interior_count(p, n - 1) != 1:
        return None
    return all(is_pyramid(q) is not None for q in vertex_cone_bases(p))


CLAIMS: dict[str, Callable[[LatticePolytope], Optional[bool]]] = {
    "thm01": _thm01,
    "thm02_3d": _thm02_3d,
    "thm02_nd": _thm02_nd,
    "lemma1": _lemma1,
    "lemma2": _lemma2,
    "lemma3": _lemma3,
    "prop11": _prop11,
    "prop31": _prop31,
    "lemma32": _lemma32,
    "cor33": _cor33,
    "lemma41": _lemma41,
}


@dataclass
class VerificationResult:
    claim: str
    corpus_size: int
    passes: int
    applicable: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "corpus_size": self.corpus_size,
            "passes": self.passes,
            "applicable": self.applicable,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 3),
        }


def verify_claim(claim: str, corpus: Iterable[LatticePolytope]) -> VerificationResult:
    """Evaluate ``claim`` on every polytope; hypotheses that do not apply count as passes."""
    try:
        check = CLAIMS[claim]
    except KeyError:
        raise ValueError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS)}") from None
    start = time.perf_counter()
    size = passes = applicable = 0
    failures = []
    for p in corpus:
        size += 1
        verdict = check(p)
        if verdict is None:
            passes += 1
            continue
        applicable += 1
        if verdict:
            passes += 1
        else:
            failures.append(normal_form(p).to_text())
    return VerificationResult(claim, size, passes, applicable, failures, time.perf_counter() - start)


# ------------------------------------------------------------------ families

def family_generators(kind: str, n: int, **params) -> LatticePolytope:
    if n > 8:
        raise ValueError("families are limited to n <= 8")
    if n < 1:
        raise ValueError("n must be positive")

    def e(i):
        return tuple(int(j == i) for j in range(n))

    if kind == "dn":
        return make_dn(n)
    if kind == "basic_simplex":
        return convex_hull([(0,) * n] + [e(i) for i in range(n)])
    if kind == "dilated_simplex":
        k = int(params.get("k", 2))
        return dilate(family_generators("basic_simplex", n), k)
    if kind == "cross_polytope":
        return convex_hull([e(i) for i in range(n)] + [tuple(-x for x in e(i)) for i in range(n)])
    raise ValueError(f"unknown family {kind!r}")


# ------------------------------------------------------------------ corpora

CORPORA: dict[str, CensusSpec] = {
    "2d_one_interior": CensusSpec.cube(2, -3, 3, {1: 1}),
    "2d_box3": CensusSpec.cube(2, 0, 3),
    "2d_box3_int2_empty": CensusSpec.cube(2, 0, 3, {2: 0}),
    "3d_unit": CensusSpec.cube(3, 0, 1),
    "3d_delpezzo": CensusSpec.cube(3, 0, 2, {2: 1}),
    "3d_no_interior": CensusSpec.cube(3, 0, 2, {1: 0}),
    "3d_delpezzo_spot": CensusSpec.cube(3, -1, 2, {2: 1}),
    "4d_unit_delpezzo": CensusSpec.cube(4, 0, 1, {3: 1}),
}


@lru_cache(maxsize=None)
def census_corpus(name: str) -> tuple[LatticePolytope, ...]:
    return tuple(enumerate_polytopes(CORPORA[name]))


@lru_cache(maxsize=None)
def family_corpus(seed: int = 2024) -> tuple[LatticePolytope, ...]:
    """Instances for ``n = 4, 5``: D_n and unimodular images of it, lattice
    pyramids over the 3D Del Pezzo census (and pyramids over those), plus
    basic, dilated and cross-polytope members as off-hypothesis controls."""
    rng = random.Random(seed)
    out = []
    for n in (4, 5):
        dn = make_dn(n)
        out.append(dn)
        for _ in range(3):
            u = random_unimodular(n, rng)
            t = [rng.randint(-3, 3) for _ in range(n)]
            out.append(transform(dn, u, t))
        out.append(family_generators("basic_simplex", n))
        out.append(family_generators("dilated_simplex", n, k=2))
        out.append(family_generators("cross_polytope", n))
    for g in census_corpus("3d_delpezzo"):
        q = pyramid(g)
        out.append(q)
        out.append(pyramid(q))
    return tuple(out)


# which corpora feed each claim under --auto
AUTO: dict[str, tuple[str, ...]] = {
    "thm01": ("2d_one_interior",),
    "thm02_3d": ("3d_delpezzo",),
    "thm02_nd": ("families", "4d_unit_delpezzo"),
    "lemma1": ("2d_box3", "3d_unit", "3d_delpezzo", "3d_no_interior"),
    "lemma2": ("2d_box3", "3d_unit", "3d_delpezzo", "3d_no_interior"),
    "lemma3": ("2d_box3_int2_empty", "2d_box3", "3d_unit", "3d_no_interior"),
    "prop11": ("3d_no_interior", "3d_delpezzo"),
    "prop31": ("3d_delpezzo", "families"),
    "lemma32": ("3d_delpezzo", "3d_no_interior", "families"),
    "cor33": ("3d_delpezzo", "3d_no_interior"),
    "lemma41": ("families", "4d_unit_delpezzo"),
}


def corpus(name: str) -> tuple[LatticePolytope, ...]:
    if name == "families":
        return family_corpus()
    return census_corpus(name)


def auto_corpus(claim: str) -> list[LatticePolytope]:
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}")
    return [p for name in AUTO[claim] for p in corpus(name)]


# ------------------------------------------------------------------ census I/O

def write_census(spec: CensusSpec, classes: list[LatticePolytope], out: os.PathLike) -> dict:
    """Write one text file per class plus a ``census.json`` index."""
    from .gorenstein import analyze

    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    entries = []
    for p in classes:
        nf = normal_form(p)
        fname = f"{nf.key}.txt"
        header = "normal-form " + "; ".join(" ".join(map(str, r)) for r in nf.matrix)
        (out / fname).write_text(format_polytope(p, header))
        entries.append({"file": fname, "normal_form": [list(r) for r in nf.matrix],
                        "report": analyze(p).to_json()})
    index = {"spec": spec.to_json(), "class_count": len(classes), "classes": entries}
    (out / "census.json").write_text(json.dumps(index, indent=2) + "\n")
    return index


def read_corpus(path: os.PathLike) -> list[LatticePolytope]:
    """Polytopes of a census directory (via ``census.json`` when present) or a single file."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"no such corpus: {path}")
    if path.is_file():
        return [read_polytope(path)]
    index = path / "census.json"
    if index.exists():
        data = json.loads(index.read_text())
        return [read_polytope(path / c["file"]) for c in data["classes"]]
    return [read_polytope(f) for f in sorted(path.glob("*.txt"))]

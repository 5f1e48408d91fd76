import random

import pytest

from conftest import basic_simplex, fixtures_small
from latfano.cones import (
    cone_base_polytope,
    definitional_gorenstein,
    truncated_cone_points,
    vertex_cone,
)
from latfano.equivalence import make_dn, normal_form, random_unimodular
from latfano.linalg import content, rank
from latfano.polytope import convex_hull, transform


def test_square_corner_is_self_dual():
    sq = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    c = vertex_cone(sq, (1, 1))
    assert set(c.edge_generators) == {(-1, 0), (0, -1)}
    assert set(c.dual_generators) == {(-1, 0), (0, -1)}


def test_counterexample_cone(tetra):
    c = vertex_cone(tetra, (0, 0, 0))
    assert set(c.edge_generators) == {(1, 0, 0), (0, 1, 0), (2, 2, 5)}
    assert set(c.dual_generators) == {(0, 0, 1), (0, 5, -2), (5, 0, -2)}


def test_planar_cone_duals():
    t = convex_hull([(0, 0), (1, 0), (3, 4)])
    assert set(vertex_cone(t, (0, 0)).dual_generators) == {(0, 1), (4, -3)}


def test_not_a_vertex():
    with pytest.raises(ValueError):
        vertex_cone(basic_simplex(2), (5, 5))


def test_base_polytope_examples(d3):
    assert cone_base_polytope(vertex_cone(basic_simplex(3), (0, 0, 0))) == basic_simplex(3)
    assert cone_base_polytope(vertex_cone(d3, (0, 0, 0))) == d3
    # (2,2,4) primitivizes to (1,1,2)
    big = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (2, 2, 4)])
    assert cone_base_polytope(vertex_cone(big, (0, 0, 0))) == d3


def test_truncation_examples(tetra):
    orth = vertex_cone(basic_simplex(2), (0, 0))
    pts, inner = truncated_cone_points(orth, 1)
    assert pts == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert inner == {(1, 1)}

    # cone over (1,0), (1,2); frozen from the scan
    c = vertex_cone(convex_hull([(0, 0), (1, 0), (1, 2)]), (0, 0))
    pts, inner = truncated_cone_points(c, 2)
    assert (1, 1) in inner
    assert pts == {(0, 0), (1, 0), (1, 1), (1, 2), (2, 2)}
    assert inner == {(1, 1), (2, 2)}

    _, inner = truncated_cone_points(vertex_cone(tetra, (0, 0, 0)), 1)
    assert inner == frozenset()
    with pytest.raises(ValueError):
        truncated_cone_points(orth, 0)


@pytest.mark.parametrize("p", fixtures_small(), ids=lambda p: f"{p.dim}d-{len(p.vertices)}v")
def test_generator_invariants(p):
    for v in p.vertices:
        c = vertex_cone(p, v)
        for m in c.edge_generators:
            assert content(m) == 1
            zeros = [u for u in c.dual_generators if sum(a * b for a, b in zip(u, m)) == 0]
            assert rank(zeros) == p.dim - 1
            assert all(sum(a * b for a, b in zip(u, m)) >= 0 for u in c.dual_generators)
        assert all(content(u) == 1 for u in c.dual_generators)
        # each edge generator points at a vertex along an actual edge
        others = [tuple(a - b for a, b in zip(w, v)) for w in p.vertices if w != v]
        for m in c.edge_generators:
            assert any(content(d) and tuple(x // content(d) for x in d) == m for d in others)


@pytest.mark.parametrize("p", fixtures_small(), ids=lambda p: f"{p.dim}d-{len(p.vertices)}v")
def test_cones_are_covariant(p):
    rng = random.Random(7)
    u = random_unimodular(p.dim, rng)
    t = [rng.randint(-3, 3) for _ in range(p.dim)]
    q = transform(p, u, t)
    for v in p.vertices:
        w = tuple(sum(u[i][j] * v[j] for j in range(p.dim)) + t[i] for i in range(p.dim))
        a, b = vertex_cone(p, v), vertex_cone(q, w)
        img = {tuple(sum(u[i][j] * m[j] for j in range(p.dim)) for i in range(p.dim)) for m in a.edge_generators}
        assert img == set(b.edge_generators)
        assert normal_form(cone_base_polytope(a)) == normal_form(cone_base_polytope(b))


def test_definitional_oracle_examples(tetra, d3):
    assert definitional_gorenstein(vertex_cone(tetra, (0, 0, 0))) is None
    assert definitional_gorenstein(vertex_cone(d3, (0, 0, 0))) == (1, 1, 1)
    assert definitional_gorenstein(vertex_cone(basic_simplex(4), (0,) * 4)) == (1, 1, 1, 1)


def test_dn_cones_are_dn():
    for n in (3, 4, 5):
        c = vertex_cone(make_dn(n), (0,) * n)
        assert cone_base_polytope(c) == make_dn(n)

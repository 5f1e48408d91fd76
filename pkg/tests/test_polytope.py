import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import TETRA, basic_simplex, fixtures_small, full_dim_points, unit_cube
from latfano.equivalence import make_dn, random_unimodular
from latfano.polytope import (
    DimensionError,
    ParseError,
    convex_hull,
    count_points,
    dilate,
    ehrhart_counts,
    facet_polytope,
    format_polytope,
    interior_count,
    interior_lattice_points,
    is_basic_simplex,
    is_normal,
    is_pyramid,
    is_simplex,
    lattice_points,
    layer_equality,
    parse_polytope,
    pyramid,
    pyramid_decompositions,
    read_polytope,
    transform,
    translate,
    write_polytope,
)


# ---------------------------------------------------------------- hull

def test_hull_square_with_duplicate():
    p = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1), (0, 0)])
    assert p.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_hull_tetrahedron(tetra):
    assert set(tetra.vertices) == set(TETRA)


def test_hull_point_outside_d3_is_a_vertex():
    # (1,1,1) violates -2x-2y+z+2 >= 0 of D_3, so it is extreme
    p = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2), (1, 1, 1)])
    assert p.vertices == ((0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 1, 2))
    assert len(p.facets) == 6


def test_hull_rejects_flat_input():
    with pytest.raises(DimensionError) as e:
        convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert e.value.affine_rank == 2 and e.value.ambient_rank == 3


def test_facets_unit_square():
    p = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert p.facets == (((-1, 0), 1), ((0, -1), 1), ((0, 1), 0), ((1, 0), 0))


def test_facets_octahedron(octahedron):
    assert len(octahedron.facets) == 8
    assert {u for u, _ in octahedron.facets} == set(itertools.product((1, -1), repeat=3))
    assert all(c == 1 for _, c in octahedron.facets)


def test_facets_d3(d3):
    assert ((0, 0, 1), 0) in d3.facets
    assert len(d3.facets) == 4


@given(st.integers(2, 3).flatmap(lambda n: full_dim_points(n)))
@settings(max_examples=40)
def test_hull_vertices_match_caratheodory(pts):
    p = convex_hull(pts)
    assert set(p.vertices) == set(oracles.vertices(pts))
    for u, c in p.facets:
        assert len(u) == p.dim
        from math import gcd

        g = 0
        for x in u:
            g = gcd(g, x)
        assert g == 1
        on = [v for v in p.vertices if sum(a * b for a, b in zip(u, v)) + c == 0]
        assert len(on) >= p.dim
        assert all(sum(a * b for a, b in zip(u, v)) + c >= 0 for v in p.vertices)


# ---------------------------------------------------------------- counting

def test_dilate_examples():
    tri = basic_simplex(2)
    assert dilate(tri, 1) == tri
    assert dilate(tri, 2).vertices == ((0, 0), (0, 2), (2, 0))
    assert set(dilate(make_dn(3), 2).vertices) == {(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 4)}
    with pytest.raises(ValueError):
        dilate(tri, 0)


def test_lattice_point_examples(d3, cube):
    assert lattice_points(basic_simplex(2)) == {(0, 0), (1, 0), (0, 1)}
    assert lattice_points(d3) == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)}
    assert count_points(cube) == 8


def test_interior_examples(tetra, d3):
    assert interior_lattice_points(tetra) == {(1, 1, 2)}
    assert interior_lattice_points(basic_simplex(2)) == frozenset()
    assert interior_lattice_points(dilate(d3, 2)) == {(1, 1, 1)}


@given(st.integers(2, 3).flatmap(lambda n: full_dim_points(n, -1, 2, 6)), st.integers(1, 2))
@settings(max_examples=25)
def test_counts_match_caratheodory_oracle(pts, k):
    p = convex_hull(pts)
    verts = list(p.vertices)
    assert lattice_points(dilate(p, k)) == oracles.lattice_points(verts, k)
    assert interior_count(p, k) == len(oracles.lattice_points(verts, k, strict=True))


def test_membership_sample_agrees(rng):
    # V/H round trip on random box points
    for p in fixtures_small():
        simp = oracles.simplices(p.vertices)
        lo, hi = p.bounding_box()
        for _ in range(60):
            x = tuple(rng.randint(a - 1, b + 1) for a, b in zip(lo, hi))
            assert p.contains(x) == oracles.in_hull(x, simp)


def test_ehrhart_examples(cube, d3):
    assert ehrhart_counts(cube, 3) == [1, 8, 27, 64]
    assert ehrhart_counts(basic_simplex(2), 3) == [1, 3, 6, 10]
    # frozen from the scan oracle below
    assert ehrhart_counts(d3, 3) == [1, 4, 11, 24]
    assert [len(oracles.lattice_points(d3.vertices, k)) for k in (1, 2, 3)] == [4, 11, 24]
    with pytest.raises(ValueError):
        ehrhart_counts(d3, 2)


def _interpolate(values):
    """Evaluate the Lagrange polynomial through ``(k, values[k])`` as a closure."""
    xs = list(range(len(values)))

    def f(x):
        total = Fraction(0)
        for i, yi in enumerate(values):
            term = Fraction(yi)
            for j in xs:
                if j != i:
                    term *= Fraction(x - j, i - j)
            total += term
        return total

    return f


def ehrhart_reciprocity_holds(p):
    n = p.dim
    f = _interpolate(ehrhart_counts(p, n))
    return all((-1) ** n * f(-k) == interior_count(p, k) for k in range(1, n + 1))


@pytest.mark.parametrize("p", fixtures_small(), ids=lambda p: f"{p.dim}d-{len(p.vertices)}v")
def test_ehrhart_reciprocity(p):
    assert ehrhart_reciprocity_holds(p)


@given(st.integers(1, 3), st.integers(1, 3))
def test_dilate_composes(a, b):
    p = make_dn(3)
    assert dilate(p, a * b) == dilate(dilate(p, a), b)


def test_translate_moves_facets(d3):
    q = translate(d3, (1, -2, 3))
    assert q == convex_hull([tuple(x + t for x, t in zip(v, (1, -2, 3))) for v in d3.vertices])


# ---------------------------------------------------------------- normality

def test_layer_equality_examples(d3):
    assert layer_equality(unit_cube(2), 1)
    assert not layer_equality(d3, 1)


def _sumset(points, k):
    cur = {tuple(0 for _ in next(iter(points)))}
    for _ in range(k):
        cur = {tuple(a + b for a, b in zip(x, y)) for x in cur for y in points}
    return cur


@pytest.mark.parametrize("p", fixtures_small(), ids=lambda p: f"{p.dim}d-{len(p.vertices)}v")
def test_sumset_inclusion_and_high_layers(p):
    pts = lattice_points(p)
    for k in (2, 3):
        big = lattice_points(dilate(p, k))
        sums = _sumset(pts, k)
        assert sums <= big
    n = p.dim
    assert layer_equality(p, n - 1) and layer_equality(p, n)
    # normality witnessed directly by sumsets up to k = n
    direct = all(_sumset(pts, k) == lattice_points(dilate(p, k)) for k in range(2, n + 1))
    assert is_normal(p) == direct


def test_is_normal_examples(cube, d3):
    assert is_normal(cube)
    assert not is_normal(d3)
    assert is_normal(basic_simplex(4))


# ---------------------------------------------------------------- pyramids, simplices

def test_pyramid_examples(cube, octahedron, tetra):
    assert is_pyramid(tetra) == (0, 0)
    assert is_pyramid(cube) is None
    assert is_pyramid(octahedron) is None
    assert len(pyramid_decompositions(tetra)) == 4


def test_simplex_examples(d3):
    assert is_basic_simplex(basic_simplex(3))
    assert is_simplex(d3) and not is_basic_simplex(d3)
    assert not is_simplex(unit_cube(2))


def test_pyramid_constructor():
    q = pyramid(unit_cube(2))
    assert q.dim == 3 and len(q.vertices) == 5
    fi, apex = is_pyramid(q)
    assert q.vertices[apex] == (0, 0, 1)


def test_facet_polytope_lattice(d3):
    # facet through e1, e2, (1,1,2): a triangle of normalized area 2 in its own lattice
    idx = next(i for i, (u, c) in enumerate(d3.facets) if u == (-2, -2, 1))
    f = facet_polytope(d3, idx)
    assert f.dim == 2 and len(f.vertices) == 3
    assert count_points(f) == 3


# ---------------------------------------------------------------- invariance

PREDICATES = [
    ("points", lambda p: count_points(p)),
    ("interior", lambda p: [interior_count(p, k) for k in range(1, p.dim + 1)]),
    ("normal", is_normal),
    ("pyramid", lambda p: is_pyramid(p) is not None),
    ("simplex", is_simplex),
    ("basic", is_basic_simplex),
    ("facets", lambda p: len(p.facets)),
]


@pytest.mark.parametrize("p", fixtures_small(), ids=lambda p: f"{p.dim}d-{len(p.vertices)}v")
def test_unimodular_invariance(p):
    rng = random.Random(p.dim * 100 + len(p.vertices))
    base = [f(p) for _, f in PREDICATES]
    for _ in range(10):
        u = random_unimodular(p.dim, rng)
        t = [rng.randint(-4, 4) for _ in range(p.dim)]
        assert [f(transform(p, u, t)) for _, f in PREDICATES] == base


# ---------------------------------------------------------------- text format

def test_text_round_trip(tmp_path, d3):
    path = tmp_path / "d3.txt"
    write_polytope(d3, path, header="D_3")
    text = path.read_text()
    assert text.startswith("# D_3\ndim 3\n")
    assert read_polytope(path) == d3


def test_parse_comments_and_blank_lines():
    p = parse_polytope("# a square\n\ndim 2\n0 0\n1 0  # corner\n0 1\n1 1\n")
    assert len(p.vertices) == 4


@pytest.mark.parametrize(
    "text",
    ["", "dim x\n0 0\n", "dim 2\n0 0 0\n", "dim 2\n0 a\n", "size 2\n0 0\n", "dim 0\n"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_polytope(text)


def test_parse_flat_is_dimension_error():
    with pytest.raises(DimensionError):
        parse_polytope("dim 2\n0 0\n1 1\n2 2\n")


def test_format_is_deterministic(d3):
    assert format_polytope(d3) == format_polytope(convex_hull(reversed(d3.vertices)))

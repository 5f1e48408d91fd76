import json
import random

import pytest

from conftest import basic_simplex, cross, fixtures_small, unit_cube
from latfano.cones import definitional_gorenstein, vertex_cone
from latfano.equivalence import make_dn, random_unimodular
from latfano.gorenstein import (
    GORENSTEIN,
    NONSINGULAR,
    NOT_GORENSTEIN,
    analyze,
    del_pezzo_check,
    gorenstein_at_vertex,
    gorenstein_index,
    is_gorenstein,
    is_reflexive,
    prop11_hypothesis,
    vertex_certificates,
)
from latfano.linalg import solve_integer
from latfano.polytope import convex_hull, dilate, interior_count, transform, translate


# ---------------------------------------------------------------- vertex test

def test_counterexample_vertex(tetra):
    cert = gorenstein_at_vertex(tetra, (0, 0, 0))
    assert cert.status == NOT_GORENSTEIN
    assert not cert.is_gorenstein
    assert solve_integer(cert.witness["matrix"], cert.witness["rhs"]) is None
    assert sorted(map(tuple, cert.witness["matrix"])) == [(0, 0, 1), (0, 5, -2), (5, 0, -2)]


def test_basic_simplex_corner_nonsingular():
    for n in (2, 3, 4):
        cert = gorenstein_at_vertex(basic_simplex(n), (0,) * n)
        assert cert.status == NONSINGULAR and cert.m0 == (1,) * n


def test_d3_vertex(d3):
    cert = gorenstein_at_vertex(d3, (0, 0, 0))
    assert cert.status == GORENSTEIN and cert.m0 == (1, 1, 1)


def test_certificate_identity_holds(d3, octahedron):
    for p in (d3, octahedron, make_dn(5), unit_cube(3)):
        for cert, v in zip(vertex_certificates(p), p.vertices):
            assert cert.vertex == v
            c = vertex_cone(p, v)
            assert all(sum(a * (m - w) for a, m, w in zip(u, cert.m0, v)) == 1 for u in c.dual_generators)


def test_certificates_are_deterministic():
    # vertex cones are pointed, so the dual generators have full rank and m0 is unique
    prism = convex_hull([(x, y, z) for x, y in ((0, 0), (1, 0), (0, 1)) for z in (0, 1)])
    for v in prism.vertices:
        a = gorenstein_at_vertex(prism, v)
        b = gorenstein_at_vertex(prism, v)
        assert a == b and a.status == NONSINGULAR


# ---------------------------------------------------------------- polytope predicates

def test_is_gorenstein_examples(octahedron, tetra):
    assert is_gorenstein(octahedron)
    assert not is_gorenstein(tetra)


def test_reflexive_examples(d3):
    assert is_reflexive(cross(2))
    assert not is_reflexive(unit_cube(2))
    assert is_reflexive(translate(dilate(d3, 2), (-1, -1, -1)))


def test_index_examples(octahedron, cube):
    for n in range(3, 7):
        assert gorenstein_index(make_dn(n)) == n - 1
    for n in (2, 3, 4):
        assert gorenstein_index(basic_simplex(n)) == n + 1
    assert gorenstein_index(octahedron) == 1
    # 2*cube is the reflexive [-1,1]^3 up to translation
    assert gorenstein_index(cube) == 2
    # Int(P) is a single point but P is not reflexive
    assert gorenstein_index(convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (2, 2, 5)])) is None


def test_del_pezzo_check(d3, octahedron):
    assert del_pezzo_check(d3)
    assert not del_pezzo_check(basic_simplex(3))
    assert not del_pezzo_check(octahedron)
    assert interior_count(octahedron, 2) == 7
    with pytest.raises(ValueError):
        del_pezzo_check(cross(2))


def test_prop11_hypothesis_examples(d3, cube):
    assert prop11_hypothesis(d3) is None
    assert interior_count(cube, 2) == 1
    assert prop11_hypothesis(cube) == 1
    assert prop11_hypothesis(basic_simplex(3)) == 0


def test_cube_is_gorenstein_and_normal(cube):
    rep = analyze(cube)
    assert rep.is_gorenstein and rep.is_normal
    assert {c.status for c in rep.vertex_certificates} == {NONSINGULAR}
    assert rep.interior_points == [] and rep.gorenstein_index == 2


# ---------------------------------------------------------------- cross checks

def _corpus_vertices():
    for p in fixtures_small() + [make_dn(5), cross(4)]:
        for v in p.vertices:
            yield p, v


@pytest.mark.parametrize("pv", list(_corpus_vertices()), ids=lambda pv: f"{pv[0].dim}d{pv[1]}")
def test_algebraic_matches_definitional(pv):
    p, v = pv
    cert = gorenstein_at_vertex(p, v)
    m0 = definitional_gorenstein(vertex_cone(p, v))
    if cert.is_gorenstein:
        assert m0 is not None
        assert tuple(a + b for a, b in zip(m0, v)) == cert.m0
    else:
        assert m0 is None
    if cert.status == NONSINGULAR:
        assert len(vertex_cone(p, v).dual_generators) == p.dim


@pytest.mark.parametrize("p", fixtures_small(), ids=lambda p: f"{p.dim}d-{len(p.vertices)}v")
def test_reflexive_iff_gorenstein_with_one_interior_point(p):
    assert is_reflexive(p) == (is_gorenstein(p) and interior_count(p, 1) == 1)


@pytest.mark.parametrize("p", fixtures_small(), ids=lambda p: f"{p.dim}d-{len(p.vertices)}v")
def test_predicates_invariant(p):
    rng = random.Random(len(p.vertices))

    def sig(q):
        return (is_gorenstein(q), gorenstein_index(q), is_reflexive(q),
                sorted(c.status for c in vertex_certificates(q)))

    base = sig(p)
    for _ in range(8):
        u = random_unimodular(p.dim, rng)
        t = [rng.randint(-3, 3) for _ in range(p.dim)]
        assert sig(transform(p, u, t)) == base


# ---------------------------------------------------------------- reports

def test_analyze_counterexample_report(tetra):
    rep = analyze(tetra)
    assert rep.interior_points == [[1, 1, 2]]
    assert not rep.is_gorenstein
    first = rep.vertex_certificates[0]
    assert first.vertex == (0, 0, 0) and first.status == NOT_GORENSTEIN


def test_analyze_d3_report(d3):
    rep = analyze(d3)
    assert rep.is_gorenstein and not rep.is_normal and rep.gorenstein_index == 2
    assert rep.is_dn and rep.is_simplex and not rep.is_basic
    assert rep.interior_counts == [0, 1, 4]


def test_report_json_fields(d3):
    d = analyze(d3).to_json()
    json.dumps(d)
    assert set(d) == {
        "dimension", "vertices", "vertex_count", "lattice_point_count", "interior_counts",
        "interior_points", "vertex_certificates", "is_gorenstein", "gorenstein_index",
        "is_reflexive", "is_normal", "is_pyramid", "is_simplex", "is_basic", "is_dn",
        "layers_checked",
    }
    assert d["vertex_certificates"][0]["status"] == GORENSTEIN


def test_layers_flag_is_recorded(d3):
    assert analyze(d3, layers_up_to=3).layers_checked == 3

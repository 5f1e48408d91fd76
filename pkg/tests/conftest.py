from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from latfano.equivalence import make_dn, random_unimodular
from latfano.polytope import affine_rank, convex_hull

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def unit_cube(n=3):
    return convex_hull(list(itertools.product((0, 1), repeat=n)))


def cross(n=3):
    pts = []
    for i in range(n):
        for s in (1, -1):
            pts.append(tuple(s * int(j == i) for j in range(n)))
    return convex_hull(pts)


def basic_simplex(n):
    return convex_hull([(0,) * n] + [tuple(int(j == i) for j in range(n)) for i in range(n)])


TETRA = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (2, 2, 5)]


@pytest.fixture
def tetra():
    return convex_hull(TETRA)


@pytest.fixture
def d3():
    return make_dn(3)


@pytest.fixture
def cube():
    return unit_cube(3)


@pytest.fixture
def octahedron():
    return cross(3)


@pytest.fixture
def rng():
    return random.Random(12345)


def fixtures_small():
    """A spread of 2D-4D polytopes used for invariance sweeps."""
    return [
        convex_hull(TETRA),
        make_dn(3),
        make_dn(4),
        unit_cube(3),
        cross(3),
        basic_simplex(3),
        convex_hull([(0, 0), (3, 0), (0, 2), (1, 3)]),
        convex_hull([(1, 0), (0, 1), (-1, -1)]),
        convex_hull([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)]),
    ]


@st.composite
def full_dim_points(draw, n, lo=-2, hi=2, max_pts=7):
    pts = draw(st.lists(st.tuples(*[st.integers(lo, hi)] * n), min_size=n + 1, max_size=max_pts))
    if affine_rank(pts) != n:
        # pad with a simplex corner so the set is full-dimensional
        base = pts[0]
        pts = pts + [base] + [tuple(b + int(j == i) for j, b in enumerate(base)) for i in range(n)]
    return pts


@st.composite
def unimodular(draw, n):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_unimodular(n, random.Random(seed))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

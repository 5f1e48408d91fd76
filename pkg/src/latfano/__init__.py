"""Exact lattice polytope toolkit: Gorenstein and normality predicates,
unimodular normal forms and exhaustive small-box censuses."""

from .census import CensusSpec, enumerate_polytopes, parse_profile
from .claims import CLAIMS, VerificationResult, family_generators, verify_claim
from .cones import VertexCone, cone_base_polytope, truncated_cone_points, vertex_cone
from .equivalence import NormalForm, is_dn, is_equivalent, make_dn, normal_form
from .gorenstein import (
    AnalysisReport,
    GorensteinCertificate,
    analyze,
    del_pezzo_check,
    gorenstein_at_vertex,
    gorenstein_index,
    is_gorenstein,
    is_reflexive,
    prop11_hypothesis,
)
from .kernels import BACKEND
from .polytope import (
    DimensionError,
    LatticePolytope,
    ParseError,
    convex_hull,
    dilate,
    ehrhart_counts,
    interior_lattice_points,
    is_basic_simplex,
    is_normal,
    is_pyramid,
    is_simplex,
    lattice_points,
    layer_equality,
    parse_polytope,
    read_polytope,
    write_polytope,
)

__version__ = "0.1.0"

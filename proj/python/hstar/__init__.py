"""Exact lattice-polytope toolkit.

Constructs the self-dual reflexive simplices Q_n and the lecture hall
simplices R_n, computes Ehrhart and delta-polynomials exactly, decides
reflexivity / self-duality / unimodular equivalence, and checks
triangulation certificates (covering, unimodularity, flagness,
regularity via height witnesses).
"""

from ._hstar import (
    CapabilityError,
    DegeneracyError,
    HstarError,
    InputError,
    Polytope,
    check_triangulation,
    count_points,
    delta_polynomial,
    dual_polytope,
    ehrhart_polynomial,
    eulerian,
    find_equivalence,
    is_reflexive,
    is_self_dual,
    make_qn,
    make_rn,
    make_rn_tilde,
    make_un,
    qn_to_rntilde,
    search_rfu,
    validate_delta,
)

__all__ = [
    "CapabilityError",
    "DegeneracyError",
    "HstarError",
    "InputError",
    "Polytope",
    "check_triangulation",
    "count_points",
    "delta_polynomial",
    "dual_polytope",
    "ehrhart_polynomial",
    "eulerian",
    "find_equivalence",
    "is_reflexive",
    "is_self_dual",
    "make_qn",
    "make_rn",
    "make_rn_tilde",
    "make_un",
    "qn_to_rntilde",
    "search_rfu",
    "validate_delta",
]

__version__ = "0.1.0"

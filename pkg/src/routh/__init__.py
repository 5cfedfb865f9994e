"""Exact-arithmetic cevian sections of triangles and tetrahedra.

Closed-form section areas and volumes, an independent coordinate oracle,
concurrency/coplanarity predicates, and symbolic verification of the
decomposition identities -- all over arbitrary-precision rationals.
"""

from .formulas import (
    RatioTuple,
    ceva_tetra,
    ceva_tri,
    cevian_foot_ratio,
    corner_volumes_klmn,
    cut_corner_volumes_pqrs,
    dual_parameters,
    lemma1_ratio,
    menelaus_tetra,
    routh_tri_central_area,
    routh_tri_cevian_area,
    v_klmn_closed,
    v_pqrs_closed,
)
from .geometry import (
    Plane,
    Point2,
    Point3,
    Tetra,
    affine_apply,
    collinear,
    coplanar,
    divide_segment,
    intersect_three_planes,
    line_intersection_2d,
    line_intersection_3d,
    matrix_det,
    plane_residual,
    plane_through,
    signed_area,
    signed_volume,
)
from .identities import (
    IdentityReport,
    eq3_target,
    eq3_terms,
    eq4_target,
    eq4_terms,
    verify_identity_eq3,
    verify_identity_eq4,
    verify_identity_triangle,
)
from .oracle import (
    canonical_base,
    oracle_decomposition,
    oracle_section_volumes,
    oracle_triangle_areas,
    sample_bases,
    sample_ratios,
    sample_unit_product,
)
from .poly import ONE, ZERO, Poly, RatFunc, T, X, Y, Z, ratfunc_combine
from .rational import (
    Rational,
    format_rational,
    make_rational,
    parse_rational,
    to_decimal,
)
from .section import TetraSection, build_tetra_section

__version__ = "0.1.0"

__all__ = [
    "IdentityReport",
    "ONE",
    "Plane",
    "Point2",
    "Point3",
    "Poly",
    "RatFunc",
    "Rational",
    "RatioTuple",
    "T",
    "Tetra",
    "TetraSection",
    "X",
    "Y",
    "Z",
    "ZERO",
    "affine_apply",
    "build_tetra_section",
    "canonical_base",
    "ceva_tetra",
    "ceva_tri",
    "cevian_foot_ratio",
    "collinear",
    "coplanar",
    "corner_volumes_klmn",
    "cut_corner_volumes_pqrs",
    "divide_segment",
    "dual_parameters",
    "eq3_target",
    "eq3_terms",
    "eq4_target",
    "eq4_terms",
    "format_rational",
    "intersect_three_planes",
    "lemma1_ratio",
    "line_intersection_2d",
    "line_intersection_3d",
    "make_rational",
    "matrix_det",
    "menelaus_tetra",
    "oracle_decomposition",
    "oracle_section_volumes",
    "oracle_triangle_areas",
    "parse_rational",
    "plane_residual",
    "plane_through",
    "ratfunc_combine",
    "routh_tri_central_area",
    "routh_tri_cevian_area",
    "sample_bases",
    "sample_ratios",
    "sample_unit_product",
    "signed_area",
    "signed_volume",
    "to_decimal",
    "v_klmn_closed",
    "v_pqrs_closed",
    "verify_identity_eq3",
    "verify_identity_eq4",
    "verify_identity_triangle",
]

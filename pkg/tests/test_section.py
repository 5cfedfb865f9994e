"""Full geometric section construction: points, volumes, invariants."""

from fractions import Fraction

import pytest

from routh import (
    Point3,
    RatioTuple,
    Tetra,
    affine_apply,
    build_tetra_section,
    canonical_base,
    collinear,
    coplanar,
    corner_volumes_klmn,
    cut_corner_volumes_pqrs,
    sample_bases,
    sample_ratios,
    sample_unit_product,
    v_klmn_closed,
    v_pqrs_closed,
)

HALVES = RatioTuple.of(*(Fraction(1, 2),) * 4)
ONES = RatioTuple.of(1, 1, 1, 1)


def test_midpoint_section_is_fully_degenerate():
    base = canonical_base()
    section = build_tetra_section(base, ONES)
    a, b, c, d = base
    half = Fraction(1, 2)
    assert section.k == Point3(0, half, half)  # midpoint of CD
    assert section.l == Point3(0, 0, half)
    assert section.m == Point3(half, 0, 0)
    assert section.n == Point3(half, half, 0)
    assert coplanar(section.k, section.l, section.m, section.n)
    assert section.p == section.q == section.r == section.s
    assert section.v_klmn == 0 and section.v_pqrs == 0
    assert section.is_menelaus and section.is_ceva


def test_section_volumes_match_closed_forms_at_halves():
    section = build_tetra_section(canonical_base(), HALVES)
    assert section.v_klmn == Fraction(5, 27)
    assert section.v_pqrs == Fraction(1, 15)
    assert not section.is_menelaus and not section.is_ceva


def test_sub_volumes_match_their_closed_forms():
    base = canonical_base()
    for ratios in sample_ratios(61, 30, "mixed"):
        section = build_tetra_section(base, ratios)
        expected = corner_volumes_klmn(ratios) | cut_corner_volumes_pqrs(ratios)
        assert section.sub_volumes == expected
        assert section.v_klmn == v_klmn_closed(ratios)
        assert section.v_pqrs == v_pqrs_closed(ratios)


def test_inner_vertices_lie_on_carrier_lines():
    base = canonical_base()
    for ratios in sample_ratios(62, 40, "mixed"):
        s = build_tetra_section(base, ratios)
        assert collinear(s.p, s.k, s.m) and collinear(s.r, s.k, s.m)
        assert collinear(s.q, s.l, s.n) and collinear(s.s, s.l, s.n)


def test_auxiliary_feet_live_on_their_cevians():
    base = canonical_base()
    a, b, c, d = base
    for ratios in sample_ratios(63, 20, "mixed"):
        s = build_tetra_section(base, ratios)
        assert collinear(c, s.f, s.m) and collinear(a, s.f, s.n)
        assert collinear(c, s.g, s.l) and collinear(a, s.g, s.k)
        assert collinear(b, s.h, s.l) and collinear(d, s.h, s.m)
        assert collinear(d, s.j, s.n) and collinear(b, s.j, s.k)


def test_plane_concurrency_on_unit_product_tuples():
    base = canonical_base()
    for ratios in sample_unit_product(64, 20):
        s = build_tetra_section(base, ratios)
        assert s.p == s.q == s.r == s.s
        assert s.v_pqrs == 0 and s.v_klmn == 0
        assert s.is_menelaus and s.is_ceva
        assert coplanar(s.k, s.l, s.m, s.n)


def test_volume_ratios_are_affine_invariant():
    ratios = RatioTuple.of(Fraction(2, 3), Fraction(5, 4), 3, Fraction(1, 6))
    reference = build_tetra_section(canonical_base(), ratios)
    for base in sample_bases(65, 10):
        section = build_tetra_section(base, ratios)
        assert section.v_klmn == reference.v_klmn
        assert section.v_pqrs == reference.v_pqrs
        assert section.sub_volumes == reference.sub_volumes


def test_section_points_transform_with_the_base():
    ratios = RatioTuple.of(Fraction(1, 3), 2, Fraction(3, 5), 4)
    base = canonical_base()
    reference = build_tetra_section(base, ratios)
    matrix = ((1, 2, 0), (0, 1, 1), (Fraction(1, 2), 0, 1))
    shift = Point3(1, -2, Fraction(1, 3))
    image_base = Tetra(*(affine_apply(matrix, shift, v) for v in base))
    image = build_tetra_section(image_base, ratios)
    for name in "klmnpqrsfghj":
        mapped = affine_apply(matrix, shift, getattr(reference, name))
        assert getattr(image, name) == mapped


def test_degenerate_base_is_rejected():
    flat = Tetra(
        Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0), Point3(1, 1, 0)
    )
    with pytest.raises(ValueError, match="degenerate base"):
        build_tetra_section(flat, HALVES)


def test_nonpositive_ratio_is_rejected():
    with pytest.raises(ValueError, match="positive"):
        build_tetra_section(canonical_base(), (1, 1, 1, 0))

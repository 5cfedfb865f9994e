"""The coordinate oracle itself, and its deterministic samplers."""

from fractions import Fraction

import pytest

from routh import (
    Point3,
    RatioTuple,
    affine_apply,
    canonical_base,
    divide_segment,
    oracle_decomposition,
    oracle_section_volumes,
    sample_bases,
    sample_ratios,
    sample_unit_product,
    signed_volume,
    v_klmn_closed,
    v_pqrs_closed,
)

HALVES = RatioTuple.of(*(Fraction(1, 2),) * 4)
ONES = RatioTuple.of(1, 1, 1, 1)


def test_canonical_base():
    base = canonical_base()
    assert signed_volume(base) == Fraction(1, 6)
    assert divide_segment(base.c, base.d, 1) == Point3(0, Fraction(1, 2), Fraction(1, 2))
    identity = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert all(
        affine_apply(identity, Point3(0, 0, 0), v) == v for v in base
    )


def test_oracle_section_volumes_examples():
    base = canonical_base()
    assert oracle_section_volumes(base, ONES) == (0, 0)
    assert oracle_section_volumes(base, HALVES) == (Fraction(5, 27), Fraction(1, 15))
    assert oracle_section_volumes(base, RatioTuple.of(2, 1, 1, 1))[1] == Fraction(1, 840)


def test_oracle_decomposition_examples():
    base = canonical_base()
    assert oracle_decomposition(base, HALVES, "eq3") == 1
    assert oracle_decomposition(base, HALVES, "eq4") == 1


def test_oracle_decomposition_rejects_product_at_least_one():
    base = canonical_base()
    with pytest.raises(ValueError, match="xyzt<1"):
        oracle_decomposition(base, ONES, "eq3")
    with pytest.raises(ValueError, match="xyzt<1"):
        oracle_decomposition(base, RatioTuple.of(2, 2, 2, 2), "eq4")
    with pytest.raises(ValueError, match="unknown decomposition"):
        oracle_decomposition(base, HALVES, "eq5")


def test_oracle_decomposition_on_random_bases():
    bases = sample_bases(404, 5)
    for i, ratios in enumerate(sample_ratios(405, 25, "below_one")):
        base = bases[i % len(bases)]
        assert oracle_decomposition(base, ratios, "eq3") == 1
        assert oracle_decomposition(base, ratios, "eq4") == 1


def test_sample_ratios_is_deterministic():
    assert sample_ratios(42, 10) == sample_ratios(42, 10)
    assert sample_ratios(42, 10) != sample_ratios(43, 10)


def test_sample_ratios_regimes_and_bounds():
    for ratios in sample_ratios(1, 40, "below_one"):
        assert ratios.product < 1
    for ratios in sample_ratios(2, 40, "above_one"):
        assert ratios.product > 1
    for ratios in sample_ratios(3, 40, "mixed"):
        for component in ratios:
            assert component > 0
            assert component.numerator <= 50 and component.denominator <= 50


def test_sample_ratios_validates_arguments():
    with pytest.raises(ValueError):
        sample_ratios(1, 0)
    with pytest.raises(ValueError):
        sample_ratios(1, 5, "sideways")


def test_sample_unit_product():
    tuples = sample_unit_product(9, 25)
    assert len(tuples) == 25
    assert all(r.product == 1 for r in tuples)
    assert tuples == sample_unit_product(9, 25)


def test_sample_bases_nondegenerate_and_deterministic():
    bases = sample_bases(21, 10)
    assert all(signed_volume(b) != 0 for b in bases)
    assert bases == sample_bases(21, 10)


def test_oracle_equals_closed_forms_on_random_bases():
    bases = sample_bases(100, 5)
    for i, ratios in enumerate(sample_ratios(101, 100, "mixed")):
        base = bases[i % len(bases)]
        assert oracle_section_volumes(base, ratios) == (
            v_klmn_closed(ratios),
            v_pqrs_closed(ratios),
        )


def test_oracle_volumes_invariant_under_affine_maps():
    ratios = RatioTuple.of(Fraction(1, 3), 2, Fraction(3, 4), Fraction(5, 7))
    expected = oracle_section_volumes(canonical_base(), ratios)
    for base in sample_bases(55, 8):
        assert oracle_section_volumes(base, ratios) == expected

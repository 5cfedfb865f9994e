"""Exact affine primitives: segment division, determinants, intersections."""

import itertools
import random
from fractions import Fraction

import pytest

from routh import (
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

ORIGIN = Point3(0, 0, 0)
EX = Point3(1, 0, 0)
EY = Point3(0, 1, 0)
EZ = Point3(0, 0, 1)
UNIT = Tetra(ORIGIN, EX, EY, EZ)


def _random_point(rng):
    return Point3(*(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)))


def _random_tetra(rng):
    while True:
        tet = Tetra(*(_random_point(rng) for _ in range(4)))
        if signed_volume(tet) != 0:
            return tet


def test_divide_segment_examples():
    assert divide_segment(ORIGIN, EX, 1) == Point3(Fraction(1, 2), 0, 0)
    assert divide_segment(ORIGIN, EX, 2) == Point3(Fraction(2, 3), 0, 0)
    assert divide_segment(ORIGIN, Point3(3, 3, 0), Fraction(1, 2)) == Point3(1, 1, 0)


def test_divide_segment_works_in_2d():
    assert divide_segment(Point2(0, 0), Point2(2, 0), 1) == Point2(1, 0)


def test_divide_segment_rejects_nonpositive_ratio():
    for bad in (0, -1, Fraction(-1, 2)):
        with pytest.raises(ValueError, match="ratio must be positive"):
            divide_segment(ORIGIN, EX, bad)


def test_divide_segment_ratio_recovers_exactly():
    rng = random.Random(41)
    for _ in range(100):
        a, b = _random_point(rng), _random_point(rng)
        if a == b:
            continue
        ratio = Fraction(rng.randint(1, 40), rng.randint(1, 40))
        p = divide_segment(a, b, ratio)
        axis = next(i for i in range(3) if b[i] != a[i])
        lam = (p[axis] - a[axis]) / (b[axis] - a[axis])
        assert lam / (1 - lam) == ratio
        assert collinear(a, p, b)


def test_signed_volume_examples():
    assert signed_volume(UNIT) == Fraction(1, 6)
    assert signed_volume(Tetra(ORIGIN, EY, EX, EZ)) == Fraction(-1, 6)
    doubled = Tetra(ORIGIN, Point3(2, 0, 0), Point3(0, 2, 0), Point3(0, 0, 2))
    assert signed_volume(doubled) == Fraction(4, 3)


def test_signed_volume_alternates_under_transpositions():
    rng = random.Random(7)
    for _ in range(20):
        tet = _random_tetra(rng)
        vol = signed_volume(tet)
        for i, j in itertools.combinations(range(4), 2):
            vertices = list(tet)
            vertices[i], vertices[j] = vertices[j], vertices[i]
            assert signed_volume(Tetra(*vertices)) == -vol


def test_signed_area_examples():
    assert signed_area(Point2(0, 0), Point2(1, 0), Point2(0, 1)) == Fraction(1, 2)
    assert signed_area(Point2(0, 0), Point2(1, 1), Point2(2, 2)) == 0
    assert signed_area(Point2(0, 0), Point2(0, 1), Point2(1, 0)) == Fraction(-1, 2)


def test_plane_through_examples():
    plane = plane_through(ORIGIN, EX, EY)
    assert (plane.a, plane.b) == (0, 0) and plane.c != 0 and plane.d == 0
    plane = plane_through(EX, EY, EZ)
    assert plane.a == plane.b == plane.c != 0
    assert plane.d == plane.a  # X+Y+Z=1 up to scale


def test_plane_through_rejects_collinear_points():
    with pytest.raises(ValueError, match="degenerate plane"):
        plane_through(ORIGIN, Point3(1, 1, 1), Point3(2, 2, 2))


def test_intersect_three_planes_examples():
    x0 = Plane(1, 0, 0, 0)
    y0 = Plane(0, 1, 0, 0)
    z0 = Plane(0, 0, 1, 0)
    assert intersect_three_planes(x0, y0, z0) == ORIGIN
    assert intersect_three_planes(
        Plane(1, 0, 0, 1), Plane(0, 1, 0, 2), Plane(0, 0, 1, 3)
    ) == Point3(1, 2, 3)
    with pytest.raises(ValueError, match="general position"):
        intersect_three_planes(x0, Plane(1, 0, 0, 1), y0)


def test_intersection_satisfies_all_three_planes():
    rng = random.Random(11)
    for _ in range(50):
        planes = []
        while len(planes) < 3:
            pts = [_random_point(rng) for _ in range(3)]
            try:
                planes.append(plane_through(*pts))
            except ValueError:
                continue
        try:
            point = intersect_three_planes(*planes)
        except ValueError:
            continue
        assert all(plane_residual(p, point) == 0 for p in planes)


def test_line_intersection_2d():
    assert line_intersection_2d(
        Point2(0, 0), Point2(1, 0), Point2(0, 0), Point2(0, 1)
    ) == Point2(0, 0)
    assert line_intersection_2d(
        Point2(0, 0), Point2(1, 1), Point2(1, 0), Point2(1, 5)
    ) == Point2(1, 1)
    with pytest.raises(ValueError, match="parallel"):
        line_intersection_2d(Point2(0, 0), Point2(1, 0), Point2(0, 1), Point2(1, 1))


def test_line_intersection_3d():
    p = line_intersection_3d(ORIGIN, Point3(1, 1, 1), Point3(1, 0, 0), Point3(0, 1, 1))
    assert p == Point3(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError, match="do not intersect"):
        line_intersection_3d(ORIGIN, EX, Point3(0, 0, 1), Point3(0, 1, 2))
    with pytest.raises(ValueError, match="parallel"):
        line_intersection_3d(ORIGIN, EX, Point3(0, 1, 0), Point3(1, 1, 0))


def test_collinear_and_coplanar():
    assert collinear(ORIGIN, Point3(1, 1, 1), Point3(2, 2, 2))
    assert not collinear(ORIGIN, EX, EY)
    assert not coplanar(*UNIT)
    assert coplanar(ORIGIN, EX, EY, Point3(1, 1, 0))


IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_affine_apply_examples():
    p = Point3(Fraction(1, 3), 2, -1)
    assert affine_apply(IDENTITY, ORIGIN, p) == p
    doubling = ((2, 0, 0), (0, 2, 0), (0, 0, 2))
    image = Tetra(*(affine_apply(doubling, ORIGIN, v) for v in UNIT))
    assert signed_volume(image) == Fraction(8, 6)
    shear = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    rng = random.Random(3)
    tet = _random_tetra(rng)
    sheared = Tetra(*(affine_apply(shear, ORIGIN, v) for v in tet))
    assert signed_volume(sheared) == signed_volume(tet)


def test_affine_apply_rejects_singular_matrix():
    singular = ((1, 0, 0), (2, 0, 0), (0, 0, 1))
    with pytest.raises(ValueError, match="singular"):
        affine_apply(singular, ORIGIN, EX)


def test_affine_volume_scales_by_determinant():
    rng = random.Random(13)
    for _ in range(25):
        matrix = tuple(
            tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3))
            for _ in range(3)
        )
        det = matrix_det(matrix)
        if det == 0:
            continue
        shift = _random_point(rng)
        tet = _random_tetra(rng)
        image = Tetra(*(affine_apply(matrix, shift, v) for v in tet))
        assert signed_volume(image) == det * signed_volume(tet)

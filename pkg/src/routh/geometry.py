"""Exact affine geometry over rational scalars.

Points, planes, segment division, determinant areas/volumes, and the exact
linear solves used to intersect planes and lines.  Coordinates may be given
as ``Fraction`` or ``int``; every computed value is an exact ``Fraction``.
No epsilon appears anywhere in this module: all predicates are determinant
tests over exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

Scalar = Fraction | int


class Point2(NamedTuple):
    x: Scalar
    y: Scalar


class Point3(NamedTuple):
    x: Scalar
    y: Scalar
    z: Scalar


class Plane(NamedTuple):
    """Coefficients of a*X + b*Y + c*Z = d; (a, b, c) never all zero.

    Stored unnormalized: planes produced by `plane_through` carry whatever
    scale the cross product yields, and nothing ever compares planes directly.
    """

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar


class Tetra(NamedTuple):
    """Ordered vertices (A, B, C, D); meaningful only when non-degenerate."""

    a: Point3
    b: Point3
    c: Point3
    d: Point3


Matrix3 = Sequence[Sequence[Scalar]]


def _sub(p: Sequence[Scalar], q: Sequence[Scalar]) -> tuple:
    return tuple(pi - qi for pi, qi in zip(p, q))


def _dot(u: Sequence[Scalar], v: Sequence[Scalar]):
    return sum(ui * vi for ui, vi in zip(u, v))


def _cross3(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _det3(r0: Sequence[Scalar], r1: Sequence[Scalar], r2: Sequence[Scalar]):
    return (
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


def divide_segment(a, b, ratio: Scalar):
    """Point p strictly inside segment ab with |ap|/|pb| = ratio.

    Works for both Point2 and Point3.  Endpoint degenerations (ratio 0 or
    infinity) are rejected, matching the open-edge convention used
    throughout: section points live strictly between the edge's vertices.
    """
    ratio = Fraction(ratio)
    if ratio <= 0:
        raise ValueError("ratio must be positive")
    weight = 1 + ratio
    return type(a)._make((ai + ratio * bi) / weight for ai, bi in zip(a, b))


def signed_area(a: Point2, b: Point2, c: Point2) -> Fraction:
    """Signed area det[b-a, c-a]/2; positive for counterclockwise a, b, c."""
    u = _sub(b, a)
    v = _sub(c, a)
    return Fraction(u[0] * v[1] - u[1] * v[0]) / 2


def signed_volume(tet: Tetra) -> Fraction:
    """Signed volume det[B-A, C-A, D-A]/6; zero iff the vertices are coplanar."""
    a, b, c, d = tet
    return Fraction(_det3(_sub(b, a), _sub(c, a), _sub(d, a))) / 6


def collinear(p: Point3, q: Point3, r: Point3) -> bool:
    return _cross3(_sub(q, p), _sub(r, p)) == (0, 0, 0)


def coplanar(p: Point3, q: Point3, r: Point3, s: Point3) -> bool:
    return signed_volume(Tetra(p, q, r, s)) == 0


def plane_through(p1: Point3, p2: Point3, p3: Point3) -> Plane:
    """Plane containing three non-collinear points (cross-product normal)."""
    normal = _cross3(_sub(p2, p1), _sub(p3, p1))
    if normal == (0, 0, 0):
        raise ValueError("degenerate plane")
    return Plane(normal[0], normal[1], normal[2], _dot(normal, p1))


def plane_residual(plane: Plane, p: Point3):
    """a*x + b*y + c*z - d; zero iff p lies on the plane."""
    return plane.a * p.x + plane.b * p.y + plane.c * p.z - plane.d


def intersect_three_planes(p1: Plane, p2: Plane, p3: Plane) -> Point3:
    """Unique common point of three planes, solved exactly by Cramer's rule."""
    rows = ((p1.a, p1.b, p1.c), (p2.a, p2.b, p2.c), (p3.a, p3.b, p3.c))
    rhs = (p1.d, p2.d, p3.d)
    det = _det3(*rows)
    if det == 0:
        raise ValueError("planes not in general position")
    coords = []
    for col in range(3):
        replaced = tuple(
            tuple(rhs[i] if j == col else rows[i][j] for j in range(3))
            for i in range(3)
        )
        coords.append(Fraction(_det3(*replaced)) / det)
    return Point3(*coords)


def line_intersection_2d(a1: Point2, a2: Point2, b1: Point2, b2: Point2) -> Point2:
    """Exact intersection of lines a1a2 and b1b2; parallel lines are an error."""
    d1 = _sub(a2, a1)
    d2 = _sub(b2, b1)
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if denom == 0:
        raise ValueError("parallel lines")
    w = _sub(b1, a1)
    s = Fraction(w[0] * d2[1] - w[1] * d2[0]) / denom
    return Point2(a1.x + s * d1[0], a1.y + s * d1[1])


def line_intersection_3d(a1: Point3, a2: Point3, b1: Point3, b2: Point3) -> Point3:
    """Exact intersection of two concurrent lines in space.

    Solves s*d1 - u*d2 = b1 - a1 on an invertible coordinate pair, then
    checks the remaining coordinate; skew or parallel lines are an error.
    """
    d1 = _sub(a2, a1)
    d2 = _sub(b2, b1)
    w = _sub(b1, a1)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        det = d1[i] * (-d2[j]) - (-d2[i]) * d1[j]
        if det == 0:
            continue
        s = Fraction(w[i] * (-d2[j]) - (-d2[i]) * w[j]) / det
        u = Fraction(d1[i] * w[j] - w[i] * d1[j]) / det
        k = 3 - i - j
        if s * d1[k] - u * d2[k] != w[k]:
            raise ValueError("lines do not intersect")
        return Point3(a1.x + s * d1[0], a1.y + s * d1[1], a1.z + s * d1[2])
    raise ValueError("parallel or degenerate lines")


def matrix_det(matrix: Matrix3):
    return _det3(*matrix)


def affine_apply(matrix: Matrix3, shift: Point3, p: Point3) -> Point3:
    """M*p + shift for an invertible 3x3 rational matrix M."""
    if _det3(*matrix) == 0:
        raise ValueError("singular matrix")
    return Point3(*(_dot(row, p) + si for row, si in zip(matrix, shift)))

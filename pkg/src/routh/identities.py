"""Symbolic verification of the section-volume identities.

The decomposition identities are statements about rational functions in
x, y, z, t: one minus the six complement-piece volumes equals the section
volume's closed form.  Each check builds the signed combination with
`ratfunc_combine` and decides equality by cross-multiplication, so a True
result is a proof of polynomial identity, not a numeric spot check.

The triangle checks additionally rebuild the central triangle from symbolic
coordinates (rational-function points on a reference triangle, cevian
intersections solved in rational-function arithmetic) and compare the
signed-area determinant against the closed form, which verifies the area
formulas themselves rather than just a bookkeeping identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import ONE, Poly, RatFunc, T, X, Y, Z, ratfunc_combine

_OX = ONE + X
_OY = ONE + Y
_OZ = ONE + Z
_OT = ONE + T

_QX = ONE + X + X * Y + X * Y * Z
_QY = ONE + Y + Y * Z + Y * Z * T
_QZ = ONE + Z + Z * T + Z * T * X
_QT = ONE + T + T * X + T * X * Y


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one symbolic check; lhs and rhs are the compared quotients."""

    name: str
    verified: bool
    lhs: RatFunc
    rhs: RatFunc

    @property
    def lhs_numerator_text(self) -> str:
        return str(self.lhs.num)

    @property
    def rhs_numerator_text(self) -> str:
        return str(self.rhs.num)

    def __str__(self) -> str:
        status = "verified" if self.verified else "FAILED"
        return f"{self.name}: {status}"


def eq3_terms() -> list[tuple[int, RatFunc]]:
    """One minus the six pieces complementary to the edge-point tetrahedron."""
    return [
        (1, RatFunc(ONE)),
        (-1, RatFunc(X, _OX * _OZ * _OT)),  # corner at C
        (-1, RatFunc(Y, _OX * _OY * _OT)),  # corner at D
        (-1, RatFunc(Z, _OX * _OY * _OZ)),  # corner at A
        (-1, RatFunc(T, _OY * _OZ * _OT)),  # corner at B
        (-1, RatFunc(X * Z, _OX * _OZ)),  # edge pair ACKM
        (-1, RatFunc(Y * T, _OY * _OT)),  # edge pair BDLN
    ]


def eq3_target() -> RatFunc:
    return RatFunc(ONE - X * Y * Z * T, _OX * _OY * _OZ * _OT)


def eq4_terms() -> list[tuple[int, RatFunc]]:
    """One minus the six pieces complementary to the inner tetrahedron."""
    return [
        (1, RatFunc(ONE)),
        (-1, RatFunc(X * Z, _OX * _OZ)),  # edge pair AMCK
        (-1, RatFunc(Y * T, _OY * _OT)),  # edge pair BNDL
        (-1, RatFunc(X, _OZ * _QX)),  # cut corner CRMB
        (-1, RatFunc(Y, _OT * _QY)),  # cut corner DSNC
        (-1, RatFunc(Z, _OX * _QZ)),  # cut corner APKD
        (-1, RatFunc(T, _OY * _QT)),  # cut corner BQLA
    ]


def eq4_target() -> RatFunc:
    return RatFunc((ONE - X * Y * Z * T) ** 3, _QX * _QY * _QZ * _QT)


def verify_identity_eq3() -> IdentityReport:
    lhs = ratfunc_combine(eq3_terms())
    rhs = eq3_target()
    return IdentityReport("edge-point tetrahedron volume", lhs == rhs, lhs, rhs)


def verify_identity_eq4() -> IdentityReport:
    lhs = ratfunc_combine(eq4_terms())
    rhs = eq4_target()
    return IdentityReport("inner tetrahedron volume", lhs == rhs, lhs, rhs)


# Symbolic 2D geometry: points are pairs of rational functions on the
# reference triangle A=(0,0), B=(1,0), C=(0,1).

_RFPoint = tuple[RatFunc, RatFunc]


def _rf_divide_segment(p1: _RFPoint, p2: _RFPoint, rho: RatFunc) -> _RFPoint:
    weight = rho / (rho + 1)
    return tuple(c1 + weight * (c2 - c1) for c1, c2 in zip(p1, p2))


def _rf_line_intersection(
    p1: _RFPoint, p2: _RFPoint, q1: _RFPoint, q2: _RFPoint
) -> _RFPoint:
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (q2[0] - q1[0], q2[1] - q1[1])
    w = (q1[0] - p1[0], q1[1] - p1[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    s = (w[0] * d2[1] - w[1] * d2[0]) / denom
    return (p1[0] + s * d1[0], p1[1] + s * d1[1])


def _rf_signed_area(a: _RFPoint, b: _RFPoint, c: _RFPoint) -> RatFunc:
    return ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])) / 2


def triangle_symbolic_points() -> dict[str, _RFPoint]:
    """Section points of the reference triangle as rational-function pairs."""
    zero = RatFunc(Poly())
    one = RatFunc(ONE)
    a: _RFPoint = (zero, zero)
    b: _RFPoint = (one, zero)
    c: _RFPoint = (zero, one)
    m = _rf_divide_segment(a, b, RatFunc(X))
    k = _rf_divide_segment(b, c, RatFunc(Y))
    l = _rf_divide_segment(c, a, RatFunc(Z))
    return {
        "A": a,
        "B": b,
        "C": c,
        "K": k,
        "L": l,
        "M": m,
        "P": _rf_line_intersection(a, k, c, m),
        "Q": _rf_line_intersection(b, l, a, k),
        "R": _rf_line_intersection(c, m, b, l),
    }


def verify_identity_triangle() -> list[IdentityReport]:
    """Both triangle formulas: corner decomposition plus symbolic determinants.

    Returns one report for the edge-point triangle KLM and one for the
    central triangle; each is verified only if the decomposition identity
    and the direct symbolic-coordinate determinant both match the closed
    form.
    """
    pts = triangle_symbolic_points()
    base_area = _rf_signed_area(pts["A"], pts["B"], pts["C"])

    cevian_target = RatFunc(ONE + X * Y * Z, _OX * _OY * _OZ)
    corner_combination = ratfunc_combine(
        [
            (1, RatFunc(ONE)),
            (-1, RatFunc(X, _OX * _OZ)),  # corner at A
            (-1, RatFunc(Y, _OY * _OX)),  # corner at B
            (-1, RatFunc(Z, _OZ * _OY)),  # corner at C
        ]
    )
    cevian_det = _rf_signed_area(pts["K"], pts["L"], pts["M"]) / base_area
    cevian_ok = corner_combination == cevian_target and cevian_det == cevian_target

    central_target = RatFunc(
        (ONE - X * Y * Z) ** 2,
        (ONE + X + X * Y) * (ONE + Y + Y * Z) * (ONE + Z + Z * X),
    )
    cut_combination = ratfunc_combine(
        [
            (1, RatFunc(ONE)),
            (-1, _rf_signed_area(pts["A"], pts["B"], pts["Q"]) / base_area),
            (-1, _rf_signed_area(pts["B"], pts["C"], pts["R"]) / base_area),
            (-1, _rf_signed_area(pts["C"], pts["A"], pts["P"]) / base_area),
        ]
    )
    central_det = _rf_signed_area(pts["P"], pts["Q"], pts["R"]) / base_area
    central_ok = cut_combination == central_target and central_det == central_target

    return [
        IdentityReport(
            "edge-point triangle area", cevian_ok, corner_combination, cevian_target
        ),
        IdentityReport(
            "central triangle area", central_ok, cut_combination, central_target
        ),
    ]

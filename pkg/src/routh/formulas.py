"""Closed-form cevian-section areas and volumes, and the ratio lemmas.

Conventions for the tetrahedron ABCD (all division ratios strictly positive):
K on edge CD with |CK|/|KD| = x, L on DA with |DL|/|LA| = y, M on AB with
|AM|/|MB| = z, N on BC with |BN|/|NC| = t.  The cutting planes are ABK, BCL,
CDM, DAN; KLMN is the edge-point tetrahedron and PQRS the inner tetrahedron
enclosed by the four planes.  All volumes are reported as nonnegative ratios
to the base volume.

For the triangle ABC: M on AB with |AM|/|MB| = x, K on BC with |BK|/|KC| = y,
L on CA with |CL|/|LA| = z; cevians AK, BL, CM bound the central triangle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple


class RatioTuple(NamedTuple):
    """Edge-division ratios (x, y, z, t), each strictly positive.

    The triangle operations take their three ratios as plain arguments; the
    four-slot tuple is the 3D parameter vector and doubles as the evaluation
    point for `routh.poly` polynomials.
    """

    x: Fraction
    y: Fraction
    z: Fraction
    t: Fraction

    @classmethod
    def of(cls, x, y, z, t) -> "RatioTuple":
        values = tuple(Fraction(v) for v in (x, y, z, t))
        if any(v <= 0 for v in values):
            raise ValueError("ratio must be positive")
        return cls(*values)

    @property
    def product(self) -> Fraction:
        return self.x * self.y * self.z * self.t


def _positive(*values) -> tuple[Fraction, ...]:
    coerced = tuple(Fraction(v) for v in values)
    if any(v <= 0 for v in coerced):
        raise ValueError("ratio must be positive")
    return coerced


def routh_tri_cevian_area(x, y, z) -> Fraction:
    """Area of the triangle KLM of edge points, as a ratio to the base area."""
    x, y, z = _positive(x, y, z)
    return (1 + x * y * z) / ((1 + x) * (1 + y) * (1 + z))


def routh_tri_central_area(x, y, z) -> Fraction:
    """Area of the central triangle bounded by the three cevians.

    (1 - xyz)^2 / ((1+x+xy)(1+y+yz)(1+z+zx)); zero exactly when xyz = 1,
    the concurrency case.
    """
    x, y, z = _positive(x, y, z)
    return (1 - x * y * z) ** 2 / (
        (1 + x + x * y) * (1 + y + y * z) * (1 + z + z * x)
    )


def v_klmn_closed(ratios: RatioTuple) -> Fraction:
    """|1 - xyzt| / ((1+x)(1+y)(1+z)(1+t))."""
    x, y, z, t = _positive(*ratios)
    return abs(1 - x * y * z * t) / ((1 + x) * (1 + y) * (1 + z) * (1 + t))


def v_pqrs_closed(ratios: RatioTuple) -> Fraction:
    """|1 - xyzt|^3 over the product of the four quartic factors."""
    x, y, z, t = _positive(*ratios)
    return abs(1 - x * y * z * t) ** 3 / (
        (1 + x + x * y + x * y * z)
        * (1 + y + y * z + y * z * t)
        * (1 + z + z * t + z * t * x)
        * (1 + t + t * x + t * x * y)
    )


def ceva_tri(x, y, z) -> bool:
    """True iff the three cevians are concurrent (xyz = 1)."""
    x, y, z = _positive(x, y, z)
    return x * y * z == 1


def menelaus_tetra(ratios: RatioTuple) -> bool:
    """True iff the four edge points K, L, M, N are coplanar (xyzt = 1)."""
    x, y, z, t = _positive(*ratios)
    return x * y * z * t == 1


def ceva_tetra(ratios: RatioTuple) -> bool:
    """True iff the four cutting planes meet in a single point (xyzt = 1)."""
    x, y, z, t = _positive(*ratios)
    return x * y * z * t == 1


def dual_parameters(ratios: RatioTuple) -> RatioTuple:
    """Parameters after relabeling the vertices along the reversed cycle.

    (x, y, z, t) -> (1/z, 1/y, 1/x, 1/t).  Both closed-form volumes are
    invariant under this substitution, which is what reduces the product>1
    case to the product<1 case.
    """
    x, y, z, t = _positive(*ratios)
    return RatioTuple(1 / z, 1 / y, 1 / x, 1 / t)


def cevian_foot_ratio(u, v) -> Fraction:
    """Division ratio v*(1+u) produced by two crossing cevians.

    In a triangle ABC with |AM|/|MB| = v on AB and |BK|/|KC| = u on BC, the
    cevians AK and CM cross at a point P with |AP|/|PK| = v*(1+u).
    """
    (u, v) = _positive(u, v)
    return v * (1 + u)


def lemma1_ratio(v_base, fraction) -> Fraction:
    """Volume of the wedge cut by a plane through an opposite edge.

    Slicing tetrahedron ABCD with the plane CDM, M on AB, keeps the fraction
    |AM|/|AB| of the volume on A's side: the result is v_base * fraction.
    Compose twice for a cut through two edges.
    """
    v_base = Fraction(v_base)
    fraction = Fraction(fraction)
    if not 0 < fraction < 1:
        raise ValueError("fraction must lie strictly between 0 and 1")
    return v_base * fraction


def corner_volumes_klmn(ratios: RatioTuple) -> dict[str, Fraction]:
    """The six pieces that, with KLMN, tile the base when xyzt < 1.

    Four corner tetrahedra (one per base vertex) and the two edge-pair
    tetrahedra ACKM and BDLN; each value is a ratio to the base volume.
    """
    x, y, z, t = _positive(*ratios)
    return {
        "AKLM": z / ((1 + z) * (1 + x) * (1 + y)),
        "BLMN": t / ((1 + y) * (1 + t) * (1 + z)),
        "CKMN": x / ((1 + z) * (1 + x) * (1 + t)),
        "DKLN": y / ((1 + t) * (1 + y) * (1 + x)),
        "ACKM": (z / (1 + z)) * (x / (1 + x)),
        "BDLN": (t / (1 + t)) * (y / (1 + y)),
    }


def cut_corner_volumes_pqrs(ratios: RatioTuple) -> dict[str, Fraction]:
    """The six pieces that, with PQRS, tile the base when xyzt < 1.

    Four cut-corner tetrahedra, each spanning a base vertex, an inner vertex
    and two section points, plus the edge-pair tetrahedra AMCK and BNDL.
    The individual formulas hold for every positive tuple; only the
    seven-piece tiling is restricted to xyzt < 1.
    """
    x, y, z, t = _positive(*ratios)
    return {
        "APKD": z / ((1 + x) * (1 + z + z * t + z * t * x)),
        "BQLA": t / ((1 + y) * (1 + t + t * x + t * x * y)),
        "CRMB": x / ((1 + z) * (1 + x + x * y + x * y * z)),
        "DSNC": y / ((1 + t) * (1 + y + y * z + y * z * t)),
        "AMCK": (z / (1 + z)) * (x / (1 + x)),
        "BNDL": (y / (1 + y)) * (t / (1 + t)),
    }

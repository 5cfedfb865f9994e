"""Geometric construction of the full cevian section of a tetrahedron."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .formulas import RatioTuple
from .geometry import (
    Point3,
    Tetra,
    divide_segment,
    intersect_three_planes,
    line_intersection_3d,
    plane_through,
    signed_volume,
)


@dataclass(frozen=True)
class TetraSection:
    """Everything the four cutting planes carve out of a base tetrahedron.

    Edge points k, l, m, n; inner vertices p, q, r, s (each the intersection
    of three of the four cutting planes); auxiliary cevian feet f, g, h, j
    (intersections of face cevians, used by the ratio-chain checks).  All
    volumes are nonnegative ratios to the base volume.
    """

    base: Tetra
    ratios: RatioTuple
    k: Point3
    l: Point3
    m: Point3
    n: Point3
    p: Point3
    q: Point3
    r: Point3
    s: Point3
    f: Point3
    g: Point3
    h: Point3
    j: Point3
    v_klmn: Fraction
    v_pqrs: Fraction
    sub_volumes: dict[str, Fraction]
    is_menelaus: bool
    is_ceva: bool


def build_tetra_section(base: Tetra, ratios: RatioTuple) -> TetraSection:
    """Construct the section of `base` cut at the given edge ratios.

    Vertex-to-plane assignment: p omits plane BCL, q omits CDM, r omits DAN,
    s omits ABK.  This puts p and r on the line KM (the intersection of
    planes ABK and CDM) and q and s on the line LN, and makes each cut-corner
    volume match its closed form.  At xyzt = 1 the four planes are concurrent
    and p = q = r = s with both section volumes zero; that boundary is
    returned, not rejected.
    """
    ratios = RatioTuple.of(*ratios)
    a, b, c, d = base
    base_volume = signed_volume(base)
    if base_volume == 0:
        raise ValueError("degenerate base tetrahedron")

    k = divide_segment(c, d, ratios.x)
    l = divide_segment(d, a, ratios.y)
    m = divide_segment(a, b, ratios.z)
    n = divide_segment(b, c, ratios.t)

    plane_abk = plane_through(a, b, k)
    plane_bcl = plane_through(b, c, l)
    plane_cdm = plane_through(c, d, m)
    plane_dan = plane_through(d, a, n)

    p = intersect_three_planes(plane_abk, plane_cdm, plane_dan)
    q = intersect_three_planes(plane_abk, plane_bcl, plane_dan)
    r = intersect_three_planes(plane_abk, plane_bcl, plane_cdm)
    s = intersect_three_planes(plane_bcl, plane_cdm, plane_dan)

    f = line_intersection_3d(c, m, a, n)
    g = line_intersection_3d(c, l, a, k)
    h = line_intersection_3d(b, l, d, m)
    j = line_intersection_3d(d, n, b, k)

    scale = abs(base_volume)

    def ratio_volume(*points: Point3) -> Fraction:
        return abs(signed_volume(Tetra(*points))) / scale

    sub_volumes = {
        "AKLM": ratio_volume(a, k, l, m),
        "BLMN": ratio_volume(b, l, m, n),
        "CKMN": ratio_volume(c, k, m, n),
        "DKLN": ratio_volume(d, k, l, n),
        "ACKM": ratio_volume(a, c, k, m),
        "BDLN": ratio_volume(b, d, l, n),
        "APKD": ratio_volume(a, p, k, d),
        "BQLA": ratio_volume(b, q, l, a),
        "CRMB": ratio_volume(c, r, m, b),
        "DSNC": ratio_volume(d, s, n, c),
        "AMCK": ratio_volume(a, m, c, k),
        "BNDL": ratio_volume(b, n, d, l),
    }

    concurrent = ratios.product == 1
    return TetraSection(
        base=base,
        ratios=ratios,
        k=k,
        l=l,
        m=m,
        n=n,
        p=p,
        q=q,
        r=r,
        s=s,
        f=f,
        g=g,
        h=h,
        j=j,
        v_klmn=ratio_volume(k, l, m, n),
        v_pqrs=ratio_volume(p, q, r, s),
        sub_volumes=sub_volumes,
        is_menelaus=concurrent,
        is_ceva=concurrent,
    )

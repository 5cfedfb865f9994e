"""Independent coordinate oracle and deterministic sampling harness.

Every volume here is recomputed from raw coordinates -- segment division,
plane construction, exact plane intersection, signed-volume determinants --
with no reference to any closed form.  Agreement between this module and
`routh.formulas` is the point of the whole test suite, so nothing in this
file may import from `routh.formulas` beyond the ratio-tuple container, and
nothing may call the closed-form operations.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .formulas import RatioTuple
from .geometry import (
    Point2,
    Point3,
    Tetra,
    affine_apply,
    divide_segment,
    intersect_three_planes,
    line_intersection_2d,
    matrix_det,
    plane_through,
    signed_area,
    signed_volume,
)

RATIO_BOUND = 50  # numerator/denominator cap keeps exact solves fast


def canonical_base() -> Tetra:
    """Unit corner simplex A=(0,0,0), B=(1,0,0), C=(0,1,0), D=(0,0,1)."""
    return Tetra(
        Point3(Fraction(0), Fraction(0), Fraction(0)),
        Point3(Fraction(1), Fraction(0), Fraction(0)),
        Point3(Fraction(0), Fraction(1), Fraction(0)),
        Point3(Fraction(0), Fraction(0), Fraction(1)),
    )


def _section_points(base: Tetra, ratios: RatioTuple):
    """Edge points and inner vertices, from coordinates alone."""
    a, b, c, d = base
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
    return k, l, m, n, p, q, r, s


def oracle_section_volumes(base: Tetra, ratios: RatioTuple) -> tuple[Fraction, Fraction]:
    """(|V_KLMN|, |V_PQRS|) as ratios to the base volume, from coordinates."""
    ratios = RatioTuple.of(*ratios)
    scale = abs(signed_volume(base))
    if scale == 0:
        raise ValueError("degenerate base tetrahedron")
    k, l, m, n, p, q, r, s = _section_points(base, ratios)
    return (
        abs(signed_volume(Tetra(k, l, m, n))) / scale,
        abs(signed_volume(Tetra(p, q, r, s))) / scale,
    )


def oracle_decomposition(base: Tetra, ratios: RatioTuple, which: str) -> Fraction:
    """Sum of the seven piece volumes of a tiling, as a ratio to the base.

    ``which`` selects the tiling: "eq3" sums KLMN plus its six complements,
    "eq4" sums PQRS plus its six.  Both tilings are geometric facts only for
    xyzt < 1, so other parameter tuples are rejected; on the valid range the
    sum must be exactly 1.
    """
    ratios = RatioTuple.of(*ratios)
    if ratios.product >= 1:
        raise ValueError("decomposition asserted only for xyzt<1")
    a, b, c, d = base
    scale = abs(signed_volume(base))
    if scale == 0:
        raise ValueError("degenerate base tetrahedron")
    k, l, m, n, p, q, r, s = _section_points(base, ratios)
    if which == "eq3":
        pieces = [
            (k, l, m, n),
            (a, k, l, m),
            (b, l, m, n),
            (c, k, m, n),
            (d, k, l, n),
            (a, c, k, m),
            (b, d, l, n),
        ]
    elif which == "eq4":
        pieces = [
            (p, q, r, s),
            (a, p, k, d),
            (b, q, l, a),
            (c, r, m, b),
            (d, s, n, c),
            (a, m, c, k),
            (b, n, d, l),
        ]
    else:
        raise ValueError(f"unknown decomposition {which!r}")
    total = Fraction(0)
    for piece in pieces:
        total += abs(signed_volume(Tetra(*piece)))
    return total / scale


def oracle_triangle_areas(x, y, z) -> tuple[Fraction, Fraction]:
    """(|KLM|, |PQR|) area ratios, from 2D coordinates on a reference triangle.

    M on AB with |AM|/|MB| = x, K on BC with |BK|/|KC| = y, L on CA with
    |CL|/|LA| = z; the central triangle's vertices come from pairwise cevian
    intersections, so concurrency collapses it to a point and area 0.
    """
    a = Point2(Fraction(0), Fraction(0))
    b = Point2(Fraction(1), Fraction(0))
    c = Point2(Fraction(0), Fraction(1))
    m = divide_segment(a, b, x)
    k = divide_segment(b, c, y)
    l = divide_segment(c, a, z)
    p = line_intersection_2d(a, k, c, m)
    q = line_intersection_2d(b, l, a, k)
    r = line_intersection_2d(c, m, b, l)
    scale = abs(signed_area(a, b, c))
    return (
        abs(signed_area(k, l, m)) / scale,
        abs(signed_area(p, q, r)) / scale,
    )


def _random_ratio(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, RATIO_BOUND), rng.randint(1, RATIO_BOUND))


def sample_ratios(seed: int, count: int, regime: str = "mixed") -> list[RatioTuple]:
    """Deterministic positive ratio tuples, filtered by the xyzt regime.

    regime "below_one" keeps only xyzt < 1, "above_one" only xyzt > 1,
    "mixed" keeps everything.  Same seed, same list.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if regime not in ("below_one", "above_one", "mixed"):
        raise ValueError(f"unknown regime {regime!r}")
    rng = random.Random(seed)
    out: list[RatioTuple] = []
    while len(out) < count:
        candidate = RatioTuple(*(_random_ratio(rng) for _ in range(4)))
        product = candidate.product
        if regime == "below_one" and not product < 1:
            continue
        if regime == "above_one" and not product > 1:
            continue
        out.append(candidate)
    return out


def sample_unit_product(seed: int, count: int) -> list[RatioTuple]:
    """Deterministic tuples pinned to the concurrency boundary xyzt = 1."""
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)
    out: list[RatioTuple] = []
    while len(out) < count:
        x, y, z = (_random_ratio(rng) for _ in range(3))
        out.append(RatioTuple(x, y, z, 1 / (x * y * z)))
    return out


def sample_bases(seed: int, count: int) -> list[Tetra]:
    """Deterministic non-degenerate tetrahedra: affine images of the simplex.

    Matrix and shift entries are small rationals; singular draws are
    rejected, so every returned base has nonzero volume.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)
    base = canonical_base()
    out: list[Tetra] = []
    while len(out) < count:
        matrix = tuple(
            tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(3))
            for _ in range(3)
        )
        if matrix_det(matrix) == 0:
            continue
        shift = Point3(
            *(Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(3))
        )
        out.append(Tetra(*(affine_apply(matrix, shift, v) for v in base)))
    return out

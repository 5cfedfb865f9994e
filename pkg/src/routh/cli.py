"""Command-line front end: evaluate sections, verify, export geometry.

Subcommands: ``tri`` (triangle areas), ``tet`` (tetrahedron section report,
optionally as JSON and/or an OBJ mesh), ``verify`` (symbolic and numeric
check suites), ``sweep`` (CSV table of the closed-form volumes along one
parameter).  Rationals are read and written in the "n/d" text form; decimal
columns are fixed-point renderings, 12 digits by default.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .formulas import (
    RatioTuple,
    ceva_tri,
    dual_parameters,
    routh_tri_central_area,
    routh_tri_cevian_area,
    v_klmn_closed,
    v_pqrs_closed,
)
from .geometry import Point3, Tetra, collinear, coplanar, signed_volume
from .identities import verify_identity_eq3, verify_identity_eq4, verify_identity_triangle
from .oracle import (
    canonical_base,
    oracle_decomposition,
    oracle_section_volumes,
    sample_bases,
    sample_ratios,
    sample_unit_product,
)
from .rational import format_rational, parse_rational, to_decimal
from .section import TetraSection, build_tetra_section

DIGITS = 12


def _point_json(point: Point3) -> list[str]:
    return [format_rational(c) for c in point]


def _tet_report(section: TetraSection, digits: int) -> dict:
    ratios = section.ratios
    points = {
        name: _point_json(getattr(section, name.lower()))
        for name in ("K", "L", "M", "N", "P", "Q", "R", "S", "F", "G", "H", "J")
    }
    return {
        "x": format_rational(ratios.x),
        "y": format_rational(ratios.y),
        "z": format_rational(ratios.z),
        "t": format_rational(ratios.t),
        "base": {
            name: _point_json(vertex)
            for name, vertex in zip("ABCD", section.base)
        },
        "points": points,
        "v_klmn": format_rational(section.v_klmn),
        "v_klmn_decimal": to_decimal(section.v_klmn, digits),
        "v_pqrs": format_rational(section.v_pqrs),
        "v_pqrs_decimal": to_decimal(section.v_pqrs, digits),
        "sub_volumes": {
            name: format_rational(v) for name, v in section.sub_volumes.items()
        },
        "sub_volumes_decimal": {
            name: to_decimal(v, digits) for name, v in section.sub_volumes.items()
        },
        "menelaus": section.is_menelaus,
        "ceva": section.is_ceva,
    }


def _write_obj(path: str, section: TetraSection, digits: int) -> None:
    """Vertices A..D, K..N, P..S; base edges and carrier lines as ``l``,
    both section tetrahedra as triangle faces."""
    lines = ["# cevian section of a tetrahedron"]
    vertices = list(section.base) + [
        section.k, section.l, section.m, section.n,
        section.p, section.q, section.r, section.s,
    ]
    for v in vertices:
        coords = " ".join(to_decimal(c, digits) for c in v)
        lines.append(f"v {coords}")
    for i, j in ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)):
        lines.append(f"l {i} {j}")
    for base_index in (5, 9):  # KLMN then PQRS
        quad = range(base_index, base_index + 4)
        for omit in quad:
            face = [str(i) for i in quad if i != omit]
            lines.append("f " + " ".join(face))
    lines.append("l 5 7")  # carrier K-M, holds P and R
    lines.append("l 6 8")  # carrier L-N, holds Q and S
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def _parse_positive(text: str) -> Fraction:
    value = parse_rational(text)
    if value <= 0:
        raise ValueError(f"ratio must be positive: {text!r}")
    return value


def _cmd_tri(args: argparse.Namespace) -> int:
    x, y, z = (_parse_positive(v) for v in (args.x, args.y, args.z))
    area_klm = routh_tri_cevian_area(x, y, z)
    area_pqr = routh_tri_central_area(x, y, z)
    report = {
        "x": format_rational(x),
        "y": format_rational(y),
        "z": format_rational(z),
        "area_klm": format_rational(area_klm),
        "area_klm_decimal": to_decimal(area_klm, args.digits),
        "area_pqr": format_rational(area_pqr),
        "area_pqr_decimal": to_decimal(area_pqr, args.digits),
        "ceva": ceva_tri(x, y, z),
    }
    print(json.dumps(report, indent=2))
    return 0


def _base_from_args(values: list[str] | None) -> Tetra:
    if values is None:
        return canonical_base()
    coords = [parse_rational(v) for v in values]
    vertices = [Point3(*coords[i : i + 3]) for i in range(0, 12, 3)]
    base = Tetra(*vertices)
    if signed_volume(base) == 0:
        raise ValueError("base vertices are coplanar")
    return base


def _cmd_tet(args: argparse.Namespace) -> int:
    ratios = RatioTuple.of(*(_parse_positive(v) for v in (args.x, args.y, args.z, args.t)))
    base = _base_from_args(args.base)
    section = build_tetra_section(base, ratios)
    if args.mesh:
        _write_obj(args.mesh, section, args.digits)
    if args.json:
        print(json.dumps(_tet_report(section, args.digits), indent=2))
    else:
        d = args.digits
        print(f"ratios: x={args.x} y={args.y} z={args.z} t={args.t}"
              f"  (xyzt = {format_rational(ratios.product)})")
        for name in ("K", "L", "M", "N", "P", "Q", "R", "S"):
            point = getattr(section, name.lower())
            coords = ", ".join(format_rational(c) for c in point)
            print(f"{name} = ({coords})")
        print(f"v_klmn = {format_rational(section.v_klmn)}"
              f" ({to_decimal(section.v_klmn, d)})")
        print(f"v_pqrs = {format_rational(section.v_pqrs)}"
              f" ({to_decimal(section.v_pqrs, d)})")
        print(f"menelaus: {section.is_menelaus}  ceva: {section.is_ceva}")
        if args.mesh:
            print(f"mesh written to {args.mesh}")
    return 0


def _check(name: str, passed: bool, detail: str = "") -> bool:
    suffix = f"  {detail}" if detail else ""
    print(f"{'PASS' if passed else 'FAIL'}  {name}{suffix}")
    return passed


def _run_symbolic() -> list[bool]:
    results = []
    for verify in (verify_identity_eq3, verify_identity_eq4):
        start = time.perf_counter()
        report = verify()
        elapsed = time.perf_counter() - start
        results.append(_check(report.name, report.verified, f"({elapsed:.2f}s)"))
    start = time.perf_counter()
    for report in verify_identity_triangle():
        elapsed = time.perf_counter() - start
        results.append(_check(report.name, report.verified, f"({elapsed:.2f}s)"))
    return results


def _run_numeric(seed: int, count: int) -> list[bool]:
    results = []

    tuples = sample_ratios(seed, count, "mixed")
    bases = [canonical_base()] + sample_bases(seed + 1, max(1, count // 50))
    ok = all(
        oracle_section_volumes(bases[i % len(bases)], r)
        == (v_klmn_closed(r), v_pqrs_closed(r))
        for i, r in enumerate(tuples)
    )
    results.append(_check(
        "closed forms equal coordinate oracle", ok,
        f"({count} tuples, {len(bases)} bases)"))

    small = max(5, count // 5)
    below = sample_ratios(seed + 2, small, "below_one")
    base = canonical_base()
    ok = all(
        oracle_decomposition(base, r, "eq3") == 1
        and oracle_decomposition(base, r, "eq4") == 1
        for r in below
    )
    results.append(_check(
        "seven-piece decompositions sum to the base volume", ok,
        f"({small} tuples, xyzt<1)"))

    sections = [build_tetra_section(base, r) for r in sample_ratios(seed + 3, small)]
    ok = all(
        collinear(s.p, s.k, s.m)
        and collinear(s.r, s.k, s.m)
        and collinear(s.q, s.l, s.n)
        and collinear(s.s, s.l, s.n)
        for s in sections
    )
    results.append(_check("inner vertices lie on the carrier lines", ok,
                          f"({small} sections)"))

    boundary = sample_unit_product(seed + 4, max(5, count // 10))
    ok = True
    for r in boundary:
        section = build_tetra_section(base, r)
        ok = ok and v_klmn_closed(r) == 0 and v_pqrs_closed(r) == 0
        ok = ok and coplanar(section.k, section.l, section.m, section.n)
        ok = ok and section.p == section.q == section.r == section.s
    results.append(_check("xyzt=1 boundary: coplanar points, concurrent planes",
                          ok, f"({len(boundary)} tuples)"))

    duals = sample_ratios(seed + 5, small)
    ok = all(
        v_klmn_closed(dual_parameters(r)) == v_klmn_closed(r)
        and v_pqrs_closed(dual_parameters(r)) == v_pqrs_closed(r)
        for r in duals
    )
    results.append(_check("closed forms invariant under parameter duality", ok,
                          f"({small} tuples)"))

    return results


def _cmd_verify(args: argparse.Namespace) -> int:
    if not (args.symbolic or args.numeric or args.all):
        raise ValueError("choose --symbolic, --numeric SEED COUNT, or --all")
    results: list[bool] = []
    if args.symbolic or args.all:
        results.extend(_run_symbolic())
    if args.numeric or args.all:
        seed, count = (int(v) for v in args.numeric) if args.numeric else (42, 100)
        if count < 1:
            raise ValueError("count must be >= 1")
        results.extend(_run_numeric(seed, count))
    failed = results.count(False)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    start = _parse_positive(args.start)
    stop = _parse_positive(args.stop)
    if not start < stop:
        raise ValueError("--from must be less than --to")
    if args.steps < 2:
        raise ValueError("steps must be >= 2")
    fixed = {name: _parse_positive(getattr(args, name)) for name in "xyzt"}
    if args.vary in args.explicit_fixed:
        raise ValueError(f"cannot fix the varied parameter {args.vary!r}")
    step = (stop - start) / (args.steps - 1)
    print("param,v_klmn,v_pqrs")
    for i in range(args.steps):
        value = start + i * step
        fixed[args.vary] = value
        ratios = RatioTuple.of(fixed["x"], fixed["y"], fixed["z"], fixed["t"])
        row = (value, v_klmn_closed(ratios), v_pqrs_closed(ratios))
        print(",".join(to_decimal(v, DIGITS) for v in row))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="routh",
        description="Exact cevian sections of triangles and tetrahedra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("tri", help="triangle areas for ratios x y z")
    tri.add_argument("x")
    tri.add_argument("y")
    tri.add_argument("z")
    tri.add_argument("--digits", type=int, default=DIGITS)
    tri.set_defaults(func=_cmd_tri)

    tet = sub.add_parser("tet", help="tetrahedron section for ratios x y z t")
    tet.add_argument("x")
    tet.add_argument("y")
    tet.add_argument("z")
    tet.add_argument("t")
    tet.add_argument("--base", nargs=12, metavar="COORD",
                     help="vertices A B C D as 12 rationals (default: unit corner simplex)")
    tet.add_argument("--json", action="store_true", help="emit the full JSON report")
    tet.add_argument("--mesh", metavar="PATH", help="write an OBJ mesh of the section")
    tet.add_argument("--digits", type=int, default=DIGITS)
    tet.set_defaults(func=_cmd_tet)

    verify = sub.add_parser("verify", help="run the verification suites")
    verify.add_argument("--symbolic", action="store_true",
                        help="prove the volume identities symbolically")
    verify.add_argument("--numeric", nargs=2, metavar=("SEED", "COUNT"),
                        help="run the sampled oracle suites")
    verify.add_argument("--all", action="store_true",
                        help="symbolic plus numeric with default seed/count")
    verify.set_defaults(func=_cmd_verify)

    sweep = sub.add_parser("sweep", help="CSV of closed-form volumes along one parameter")
    sweep.add_argument("--vary", choices=("x", "y", "z", "t"), required=True)
    sweep.add_argument("--from", dest="start", required=True)
    sweep.add_argument("--to", dest="stop", required=True)
    sweep.add_argument("--steps", type=int, required=True)
    for name in "xyzt":
        sweep.add_argument(f"--{name}", default="1", help=f"fixed value of {name}")
    sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep":
        raw = argv if argv is not None else sys.argv[1:]
        args.explicit_fixed = {
            n for n in "xyzt"
            if any(tok == f"--{n}" or tok.startswith(f"--{n}=") for tok in raw)
        }
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end.

Subcommands wrap the library one-to-one: ``invert``, ``coordinatize``,
``profile``, ``intersect``, ``render`` and ``selftest``.  Coordinates come
from a positional argument in the canonical text format or from a JSON
file (``--file``).  Output is a human-readable table by default, JSON with
``--json``.

Exit codes: 0 success, 1 parse or validation failure, 2 internal
inconsistency (a selftest divergence).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .components import profile, reconstruct
from .coords import (
    DynnikovCoordinates,
    TriangleCoordinates,
    format_coords,
    format_triangle,
    parse_coords,
    parse_triangle,
)
from .errors import CrosscapError, DimensionMismatchError
from .intersect import catalog, elementary_values, parse_curve
from .inversion import coordinatize, invert
from .large import RegionRange, counts_for_range
from .oracle import run_selftest
from .render import RenderSpec, render_svg

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """argparse, but flag errors exit 1 (2 is reserved for divergences)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_coords_input(sub: argparse.ArgumentParser, triangle: bool = False):
    what = "triangle" if triangle else "multicurve"
    sub.add_argument(
        "coords",
        nargs="?",
        help=f"{what} coordinates, e.g. "
        + ('"(1,5; 6,4,4; 4; 2,0)"' if triangle else '"(2; 1,0; -2; 2,0)"'),
    )
    sub.add_argument("--file", help="read the coordinates from a JSON file")
    sub.add_argument("--n", type=int, help="puncture count (cross-checked)")
    sub.add_argument("--json", action="store_true", help="machine-readable output")


def _read_vector(args) -> DynnikovCoordinates:
    if args.file:
        with open(args.file) as fh:
            coords = DynnikovCoordinates.from_dict(json.load(fh))
    elif args.coords is not None:
        coords = parse_coords(args.coords)
    else:
        raise CrosscapError("no coordinates given (positional argument or --file)")
    if args.n is not None and coords.n != args.n:
        raise DimensionMismatchError(f"coordinates have n={coords.n}, not n={args.n}")
    return coords


def _read_triangle(args) -> TriangleCoordinates:
    if args.file:
        with open(args.file) as fh:
            tri = TriangleCoordinates.from_dict(json.load(fh))
    elif args.coords is not None:
        tri = parse_triangle(args.coords)
    else:
        raise CrosscapError("no coordinates given (positional argument or --file)")
    if args.n is not None and tri.n != args.n:
        raise DimensionMismatchError(f"coordinates have n={tri.n}, not n={args.n}")
    return tri


def _emit(data, human: str, as_json: bool):
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        print(human)


def _cmd_invert(args) -> int:
    tri = invert(_read_vector(args))
    human = "\n".join(
        [
            f"alpha  {' '.join(map(str, tri.alpha))}",
            f"beta   {' '.join(map(str, tri.beta))}",
            f"gamma  {tri.gamma}",
            f"c      {tri.c1} {tri.c2}",
        ]
    )
    _emit(tri.to_dict(), human, args.json)
    return 0


def _cmd_coordinatize(args) -> int:
    coords = coordinatize(_read_triangle(args))
    _emit(coords.to_dict(), format_coords(coords), args.json)
    return 0


def _cmd_profile(args) -> int:
    prof = profile(invert(_read_vector(args)))
    data = prof.to_dict()
    lines = [f"S0     loops={prof.s0_loops}"]
    for k in range(prof.n - 1):
        lines.append(
            f"S{k + 1}     above={prof.above[k]} below={prof.below[k]} "
            f"loops={prof.loops[k]} side={prof.sides[k]}"
        )
    lines.append(
        f"cross1 above={prof.cross1_above} below={prof.cross1_below} "
        f"straight={prof.straight_cores} core_loops={prof.cross1_core_loops} "
        f"noncore_loops={prof.cross1_noncore_loops} side={prof.cross1_side}"
    )
    lines.append(
        f"cross2 core_loops={prof.cross2_core_loops} "
        f"noncore_loops={prof.cross2_noncore_loops}"
    )
    if prof.nonprimitive.any():
        np_ = prof.nonprimitive
        lines.append(
            f"nonprimitive core1={np_.core1} bounding1={np_.bounding1} "
            f"core2={np_.core2} bounding2={np_.bounding2}"
        )
    if args.large:
        l, m = args.large
        data["large"] = {}
        ranges = []
        if l <= m <= prof.n - 1:
            ranges.append((f"S_({l},{m})", RegionRange.punctures(l, m)))
        if l <= prof.n:
            ranges.append((f"S'_({l},1)", RegionRange.through_first(l)))
            ranges.append((f"S'_({l},2)", RegionRange.through_second(l)))
        for name, rng in ranges:
            counts = counts_for_range(prof, rng)
            data["large"][name] = {
                "over": counts.over,
                "under": counts.under,
                "right_loops": counts.right_loops,
                "left_loops": counts.left_loops,
            }
            lines.append(
                f"large {name}: over={counts.over} under={counts.under} "
                f"right={counts.right_loops} left={counts.left_loops}"
            )
    _emit(data, "\n".join(lines), args.json)
    return 0


def _cmd_intersect(args) -> int:
    coords = _read_vector(args)
    if args.curve:
        curves = tuple(parse_curve(c) for c in args.curve)
    elif args.all:
        curves = catalog(coords.n)
    else:
        raise CrosscapError("pick curves with --curve or use --all")
    values = elementary_values(coords, curves)
    data = [{"curve": c.spec(), "value": v} for c, v in values]
    human = "\n".join(f"{c.label():12s} {v}" for c, v in values)
    _emit(data if len(data) > 1 else data[0], human, args.json)
    return 0


def _cmd_render(args) -> int:
    gl = reconstruct(profile(invert(_read_vector(args))))
    spec = RenderSpec(
        width=args.width, height=args.height, spacing=args.spacing
    )
    svg = render_svg(gl, spec)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(svg)
    return 0


def _cmd_selftest(args) -> int:
    jobs = args.jobs or min(os.cpu_count() or 1, 8)
    report = run_selftest(n=args.n, bound=args.bound, cmax=args.cmax, jobs=jobs)
    summary = {
        "n": report.n,
        "bound": report.bound,
        "cmax": report.cmax,
        "points_total": report.points_total,
        "points_checked": report.points_checked,
        "divergences": len(report.divergences),
        "elapsed_seconds": round(report.elapsed, 3),
    }
    if args.json:
        summary["first_divergences"] = [vars(d) for d in report.divergences]
        print(json.dumps(summary, indent=2))
    else:
        print(
            f"checked {report.points_checked} of {report.points_total} grid points "
            f"(n={report.n}, bound={report.bound}, c in [0,{report.cmax}]) "
            f"in {report.elapsed:.1f}s"
        )
        for d in report.divergences:
            print(
                f"DIVERGENCE at {d.coords} on {d.curve}: "
                f"formula={d.formula} traced={d.traced}",
                file=sys.stderr,
            )
            print(f"  triangle: {d.triangle}", file=sys.stderr)
            print(f"  profile:  {d.profile}", file=sys.stderr)
    if report.divergences:
        return 2
    if not args.json:
        print("formulas and strand tracing agree")
    return 0


def main(argv=None) -> int:
    parser = _Parser(
        prog="crosscap",
        description="Multicurve coordinates and intersection numbers on a "
        "punctured non-orientable genus-2 surface.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invert", help="vector -> crossing counts")
    _add_coords_input(p)
    p.set_defaults(fn=_cmd_invert)

    p = sub.add_parser(
        "coordinatize", help="crossing counts -> vector"
    )
    _add_coords_input(p, triangle=True)
    p.set_defaults(fn=_cmd_coordinatize)

    p = sub.add_parser(
        "profile", help="per-region component counts"
    )
    _add_coords_input(p)
    p.add_argument(
        "--large",
        nargs=2,
        type=int,
        metavar=("L", "M"),
        help="also show large component counts for the range (L, M)",
    )
    p.set_defaults(fn=_cmd_profile)

    p = sub.add_parser(
        "intersect", help="intersection numbers with elementary curves"
    )
    _add_coords_input(p)
    p.add_argument(
        "--curve",
        action="append",
        help="curve spec: Cij:I,J | Cprime1:I | Cprime2:I | C | D (repeatable)",
    )
    p.add_argument("--all", action="store_true", help="evaluate the whole catalog")
    p.set_defaults(fn=_cmd_intersect)

    p = sub.add_parser("render", help="draw the multicurve as SVG")
    _add_coords_input(p)
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.add_argument("--width", type=int, default=0)
    p.add_argument("--height", type=int, default=0)
    p.add_argument("--spacing", type=int, default=90)
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser(
        "selftest", help="sweep a grid comparing formulas vs tracing"
    )
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--cmax", type=int, default=None)
    p.add_argument("--jobs", type=int, default=0, help="worker processes (0 = auto)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_selftest)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse help/usage paths
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except CrosscapError as exc:
        print(f"crosscap: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"crosscap: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 geometric violations found by ``verify``, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import RingfillError
from .inverse import inverse_ratio
from .layout import LayoutOptions, PhasePolicy, generate_layout, layout_for_ratio
from .metrics import compare, gap_reports_csv, load_references, seed_references, sweep
from .render import SvgStyle, curve_csv, placements_from_json, to_json, to_svg
from .ring_math import CaseKind, CountBreakdown, PackingSpec, count_total
from .verify import verify_layout

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _geometry_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--radius-ratio", type=float, metavar="X", help="filler radius over container radius")
    p.add_argument("--outer", type=float, metavar="R", help="container radius (use with --filler)")
    p.add_argument("--filler", type=float, metavar="r", help="filler radius (use with --outer)")


def _spec(parser: argparse.ArgumentParser, args) -> PackingSpec:
    dimensional = args.outer is not None or args.filler is not None
    if (args.radius_ratio is None) == (not dimensional):
        parser.error("give either --radius-ratio or both --outer and --filler")
    if dimensional and (args.outer is None or args.filler is None):
        parser.error("--outer and --filler must be given together")
    if args.radius_ratio is not None:
        return PackingSpec.from_ratio(args.radius_ratio)
    return PackingSpec(args.outer, args.filler)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def breakdown_dict(b: CountBreakdown, ratio: float) -> dict:
    return {
        "ratio": ratio,
        "case": b.case.kind.value,
        "terminal_index": b.case.terminal_index,
        "ring_counts": list(b.ring_counts),
        "central_circle": b.central_circle,
        "total": b.total,
        "density": b.total * (ratio * ratio),
    }


def format_breakdown(b: CountBreakdown, ratio: float) -> str:
    if b.case.kind is CaseKind.INFEASIBLE:
        return "case infeasible, filler larger than container, total 0, density 0"
    rings = "+".join(str(n) for n in b.ring_counts) or "none"
    if b.central_circle:
        rings += " + central"
    density = b.total * (ratio * ratio)
    return f"case {b.case.kind.value}, rings {rings}, total {b.total}, density {density:.10g}"


def cmd_count(args, parser) -> int:
    spec = _spec(parser, args)
    b = count_total(spec.ratio)
    if args.json:
        print(json.dumps(breakdown_dict(b, spec.ratio)))
    else:
        print(format_breakdown(b, spec.ratio))
    return EXIT_OK


def _layout_options(args) -> LayoutOptions:
    return LayoutOptions(PhasePolicy.ALTERNATE_HALF_STEP if args.alternate else PhasePolicy.ALL_ZERO)


def cmd_layout(args, parser) -> int:
    result = generate_layout(_spec(parser, args), _layout_options(args))
    _emit(to_json(result), args.out)
    return EXIT_OK


def cmd_render(args, parser) -> int:
    result = generate_layout(_spec(parser, args), _layout_options(args))
    svg = to_svg(result, SvgStyle(canvas_size=args.size, show_ring_guides=args.guides))
    _emit(svg, args.out)
    if args.json and args.out:
        print(json.dumps({"out": args.out, "circles": result.total}))
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    text = Path(args.layout).read_text(encoding="utf-8")
    outer, placements = placements_from_json(text)
    report = verify_layout(placements, outer, args.tolerance)
    if args.json:
        print(json.dumps({
            "valid": report.valid,
            "circles": len(placements),
            "violations": [{"kind": v.kind, "i": v.i, "j": v.j, "magnitude": v.magnitude}
                           for v in report.violations],
        }))
    else:
        print(f"{len(placements)} circles, {'valid' if report.valid else 'INVALID'}")
        for v in report.violations:
            who = f"{v.i},{v.j}" if v.j is not None else f"{v.i}"
            print(f"  {v.kind} {who}: {v.magnitude:.6g}")
    return EXIT_OK if report.valid else EXIT_VIOLATION


def cmd_curve(args, parser) -> int:
    text = curve_csv(args.max_n)
    _emit(text, args.out)
    if args.json and args.out:
        print(json.dumps({"out": args.out, "rows": args.max_n - 1}))
    return EXIT_OK


def _references(args):
    if args.references:
        with open(args.references, encoding="utf-8") as fh:
            return load_references(fh)
    return seed_references()


def cmd_compare(args, parser) -> int:
    spec = _spec(parser, args)
    rep = compare(generate_layout(spec), _references(args))
    if args.json:
        print(json.dumps({"ratio": rep.ratio, "count": rep.analytical_count,
                          "density": rep.analytical_density,
                          "reference_density": rep.reference_density, "gap": rep.gap}))
    elif rep.reference_density is None:
        print(f"N = {rep.analytical_count}, density {rep.analytical_density:.10g}, no reference")
    else:
        print(f"N = {rep.analytical_count}, density {rep.analytical_density:.10g}, "
              f"best known {rep.reference_density:.10g}, gap {rep.gap:.6f}")
    return EXIT_OK


def _grid(args, parser) -> list[float]:
    if args.ratios:
        try:
            return [float(v) for v in args.ratios.split(",") if v.strip()]
        except ValueError:
            parser.error(f"--ratios must be comma-separated numbers: {args.ratios!r}")
    if args.start is None or args.stop is None:
        parser.error("give --ratios or --start/--stop/--num")
    if args.num < 1:
        parser.error("--num must be >= 1")
    if args.num == 1:
        return [args.start]
    step = (args.stop - args.start) / (args.num - 1)
    return [args.start + i * step for i in range(args.num)]


def cmd_sweep(args, parser) -> int:
    reports = sweep(_grid(args, parser), _references(args))
    if args.json:
        text = json.dumps([{"ratio": r.ratio, "count": r.analytical_count, "density": r.analytical_density,
                            "reference_density": r.reference_density, "gap": r.gap, "error": r.error}
                           for r in reports]) + "\n"
    else:
        text = gap_reports_csv(reports)
    _emit(text, args.out)
    return EXIT_OK


def cmd_inverse(args, parser) -> int:
    res = inverse_ratio(args.count, args.tolerance)
    result = layout_for_ratio(res.ratio)
    report = verify_layout(result.placements, 1.0)
    if args.json:
        print(json.dumps({"count": res.target, "ratio": res.ratio, "method": res.method,
                          "achieved": result.total, "verified": report.valid}))
    else:
        print(f"N >= {res.target} up to x = {res.ratio:.17g} ({res.method}); "
              f"layout has {result.total} circles, {'verified' if report.valid else 'NOT verified'}")
    return EXIT_OK if report.valid else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringfill", description="Concentric-ring packing of equal circles in a circle.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, geometry=False):
        p = sub.add_parser(name, help=help_text)
        if geometry:
            _geometry_args(p)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func, parser=p)
        return p

    add("count", cmd_count, "ring counts, case and total", geometry=True)

    p = add("layout", cmd_layout, "circle centres as JSON", geometry=True)
    p.add_argument("--alternate", action="store_true", help="rotate even rings by half a slot")
    p.add_argument("--out", help="output file (default stdout)")

    p = add("render", cmd_render, "SVG drawing", geometry=True)
    p.add_argument("--alternate", action="store_true", help="rotate even rings by half a slot")
    p.add_argument("--size", type=int, default=512, help="canvas size in pixels")
    p.add_argument("--guides", action="store_true", help="draw dotted ring guide circles")
    p.add_argument("--out", help="output file (default stdout)")

    p = add("verify", cmd_verify, "check a JSON layout for overlaps and escapes")
    p.add_argument("layout", help="layout JSON file")
    p.add_argument("--tolerance", type=float, default=None, help="absolute slack (default 1e-9 * R)")

    p = add("curve", cmd_curve, "largest sector-inscribed circle vs number of sectors")
    p.add_argument("--max-n", type=int, default=180)
    p.add_argument("--out", help="output file (default stdout)")

    p = add("compare", cmd_compare, "density against the best known packing", geometry=True)
    p.add_argument("--references", help="reference CSV (default: bundled seed table)")

    p = add("sweep", cmd_sweep, "compare over a grid of ratios")
    p.add_argument("--ratios", help="comma-separated ratios")
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--num", type=int, default=100)
    p.add_argument("--references", help="reference CSV (default: bundled seed table)")
    p.add_argument("--out", help="output file (default stdout)")

    p = add("inverse", cmd_inverse, "largest ratio giving at least N circles")
    p.add_argument("count", type=int)
    p.add_argument("--tolerance", type=float, default=1e-12, help="relative bisection tolerance")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, args.parser)
    except (RingfillError, OSError) as exc:
        print(f"ringfill {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""JSON, SVG and CSV output for packing results."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .errors import ParseError, ValidationError
from .layout import Placement, PackingResult
from .ring_math import CaseKind, CaseTag, CountBreakdown, PackingSpec, RingPlan, sector_inscribed_radius

DENSITY_CHECK_TOL = 1e-12


def _num(value: float) -> str:
    if isinstance(value, bool):
        raise TypeError("bool is not a number here")
    if isinstance(value, int):
        return str(value)
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite value {value!r}")
    text = format(value, ".17g")
    # keep floats recognisable as floats for readers that care
    if all(c not in text for c in ".en"):
        text += ".0"
    return text


def _source(p: Placement) -> str:
    if p.is_central:
        return '{"kind": "central"}'
    return f'{{"kind": "ring", "ring": {p.ring}, "slot": {p.slot}}}'


def to_json(result: PackingResult) -> str:
    """Serialize with a fixed key order and 17 significant digits."""
    spec = result.spec
    lines = [
        "{",
        f'  "outer_radius": {_num(spec.outer_radius)},',
        f'  "filler_radius": {_num(spec.filler_radius)},',
        f'  "ratio": {_num(spec.ratio)},',
        f'  "case": {json.dumps(result.breakdown.case.kind.value)},',
    ]
    rings = [
        f'    {{"index": {r.index}, "center_circle_radius": {_num(r.center_circle_radius)}, '
        f'"count": {r.count}, "phase": {_num(r.phase)}}}'
        for r in result.rings
    ]
    lines.append('  "rings": [' + ("\n" + ",\n".join(rings) + "\n  ]," if rings else "],"))
    places = [
        f'    {{"x": {_num(p.center_x)}, "y": {_num(p.center_y)}, '
        f'"radius": {_num(p.radius)}, "source": {_source(p)}}}'
        for p in result.placements
    ]
    lines.append('  "placements": [' + ("\n" + ",\n".join(places) + "\n  ]," if places else "],"))
    lines.append(f'  "total": {result.total},')
    lines.append(f'  "density": {_num(result.density)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _get(obj: Any, key: str, path: str, kind) -> Any:
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected an object")
    if key not in obj:
        raise ParseError(f"{path}.{key}: missing")
    value = obj[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError(f"{path}.{key}: expected a number, got {value!r}")
        return float(value)
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError(f"{path}.{key}: expected an integer, got {value!r}")
        return value
    if not isinstance(value, kind):
        raise ParseError(f"{path}.{key}: expected {kind.__name__}, got {value!r}")
    return value


def _placement(obj: Any, path: str) -> Placement:
    x = _get(obj, "x", path, float)
    y = _get(obj, "y", path, float)
    r = _get(obj, "radius", path, float)
    src = _get(obj, "source", path, dict)
    kind = _get(src, "kind", f"{path}.source", str)
    if kind == "central":
        return Placement(x, y, r)
    if kind == "ring":
        return Placement(x, y, r, _get(src, "ring", f"{path}.source", int),
                         _get(src, "slot", f"{path}.source", int))
    raise ParseError(f"{path}.source.kind: unknown source {kind!r}")


def placements_from_json(text: str) -> tuple[float, list[Placement]]:
    """Container radius and circles from a layout document, without invariant checks.

    Used to audit layouts that did not come from this package.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"$: invalid JSON: {exc}") from None
    outer = _get(doc, "outer_radius", "$", float)
    raw = _get(doc, "placements", "$", list)
    return outer, [_placement(p, f"$.placements[{i}]") for i, p in enumerate(raw)]


def from_json(text: str) -> PackingResult:
    """Inverse of :func:`to_json`; rechecks the result invariants."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"$: invalid JSON: {exc}") from None
    outer = _get(doc, "outer_radius", "$", float)
    filler = _get(doc, "filler_radius", "$", float)
    ratio = _get(doc, "ratio", "$", float)
    case_text = _get(doc, "case", "$", str)
    try:
        kind = CaseKind(case_text)
    except ValueError:
        raise ParseError(f"$.case: expected one of a, b, c, infeasible; got {case_text!r}") from None
    rings = []
    for i, r in enumerate(_get(doc, "rings", "$", list)):
        path = f"$.rings[{i}]"
        rings.append(RingPlan(_get(r, "index", path, int), _get(r, "center_circle_radius", path, float),
                              _get(r, "count", path, int), _get(r, "phase", path, float)))
    placements = [_placement(p, f"$.placements[{i}]")
                  for i, p in enumerate(_get(doc, "placements", "$", list))]
    total = _get(doc, "total", "$", int)
    density = _get(doc, "density", "$", float)

    try:
        spec = PackingSpec(outer, filler)
    except ValueError as exc:
        raise ValidationError(f"$: {exc}") from None
    if spec.ratio != ratio:
        raise ValidationError(f"$.ratio: {ratio!r} != filler_radius / outer_radius = {spec.ratio!r}")
    if [r.index for r in rings] != list(range(1, len(rings) + 1)):
        raise ValidationError("$.rings: indices must run 1, 2, ... in order")
    if kind is CaseKind.INFEASIBLE:
        terminal = 0
    elif kind is CaseKind.A:
        terminal = len(rings)
    else:
        terminal = len(rings) + 1
    breakdown = CountBreakdown(CaseTag(kind, terminal), tuple(r.count for r in rings),
                               kind is CaseKind.B)
    if breakdown.total != total:
        raise ValidationError(f"$.total: {total} disagrees with ring counts and case ({breakdown.total})")
    if len(placements) != total:
        raise ValidationError(f"$.placements: {len(placements)} entries but total is {total}")
    expected = total * (spec.ratio * spec.ratio)
    if abs(density - expected) > DENSITY_CHECK_TOL:
        raise ValidationError(f"$.density: {density!r} != N * x**2 = {expected!r}")
    return PackingResult(spec, breakdown, tuple(rings), tuple(placements))


@dataclass(frozen=True)
class SvgStyle:
    canvas_size: int = 512
    container_stroke: str = "#000000"
    filler_stroke: str = "#1f4e79"
    filler_fill: str = "#9dc3e6"
    show_ring_guides: bool = False

    def __post_init__(self) -> None:
        if self.canvas_size < 64:
            raise ValueError(f"canvas_size must be >= 64, got {self.canvas_size}")


def _px(value: float) -> str:
    text = f"{value:.4f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def to_svg(result: PackingResult, style: SvgStyle = SvgStyle()) -> str:
    """Draw the container, the fillers and optionally dotted ring guides.

    The container is centred with a 5% margin on each side and the y axis
    points up, so counterclockwise angles stay counterclockwise on screen.
    """
    size = style.canvas_size
    mid = size / 2.0
    scale = 0.45 * size / result.spec.outer_radius
    stroke = max(1.0, size / 512.0)

    def circle(x: float, y: float, r: float, attrs: str) -> str:
        return (f'  <circle cx="{_px(mid + x * scale)}" cy="{_px(mid - y * scale)}" '
                f'r="{_px(r * scale)}" {attrs}/>')

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        circle(0.0, 0.0, result.spec.outer_radius,
               f'fill="none" stroke="{style.container_stroke}" stroke-width="{_px(stroke)}"'),
    ]
    if style.show_ring_guides:
        # guide circle k passes through the outer edges of ring k
        for ring in result.rings:
            out.append(circle(0.0, 0.0, ring.center_circle_radius + result.spec.filler_radius,
                              f'fill="none" stroke="{style.container_stroke}" '
                              f'stroke-width="{_px(stroke / 2)}" stroke-dasharray="4 4"'))
    for p in result.placements:
        out.append(circle(p.center_x, p.center_y, p.radius,
                          f'fill="{style.filler_fill}" stroke="{style.filler_stroke}" '
                          f'stroke-width="{_px(stroke)}"'))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def curve_csv(max_divisions: int) -> str:
    """``n,ratio`` rows of the largest sector-inscribed circle for n = 2..max."""
    if max_divisions < 2:
        sector_inscribed_radius(1.0, max_divisions)  # raises the domain error
    rows = ["n,ratio"]
    for n in range(2, max_divisions + 1):
        rows.append(f"{n},{format(sector_inscribed_radius(1.0, n), '.17g')}")
    return "\n".join(rows) + "\n"

"""Density bookkeeping and comparison with best-known packings."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from importlib import resources
from typing import Iterable, Optional, Sequence, TextIO

from .errors import ParseError, RingfillError, ValidationError
from .layout import PackingResult, layout_for_ratio

REFERENCE_HEADER = ("count", "best_ratio", "best_density")
GAP_HEADER = ("ratio", "count", "density", "reference_density", "gap")
DENSITY_CONSISTENCY_TOL = 1e-6
#: Negative gaps down to this size are float noise and are reported as 0.
GAP_SLACK = 1e-12


@dataclass(frozen=True)
class ReferenceRecord:
    count: int
    best_ratio: Optional[float]
    best_density: float


@dataclass(frozen=True)
class GapReport:
    ratio: float
    analytical_count: Optional[int] = None
    analytical_density: Optional[float] = None
    reference_density: Optional[float] = None
    gap: Optional[float] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def _half_ulp(text: str) -> float:
    """Half a unit in the last printed decimal place, at most 5e-7.

    Short literals such as ``0.5`` are taken as exact to six decimals.
    """
    exponent = Decimal(text).as_tuple().exponent
    return min(0.5 * 10.0 ** exponent, 5e-7) if isinstance(exponent, int) else 0.0


def _check_record(rec: ReferenceRecord, ratio_text: str, density_text: str, where: str) -> None:
    if rec.count < 1:
        raise ValidationError(f"{where}: count must be >= 1, got {rec.count}")
    if not 0 < rec.best_density <= 1:
        raise ValidationError(f"{where}: best_density must lie in (0, 1], got {rec.best_density}")
    if rec.best_ratio is None:
        return
    if not 0 < rec.best_ratio <= 1:
        raise ValidationError(f"{where}: best_ratio must lie in (0, 1], got {rec.best_ratio}")
    # printed values are rounded, so widen the check by the rounding they carry
    dr = _half_ulp(ratio_text)
    slack = (DENSITY_CONSISTENCY_TOL + _half_ulp(density_text)
             + rec.count * (2 * rec.best_ratio * dr + dr * dr))
    implied = rec.count * rec.best_ratio ** 2
    if abs(implied - rec.best_density) > slack:
        raise ValidationError(
            f"{where}: count * best_ratio**2 = {implied:.9g} disagrees with "
            f"best_density {rec.best_density:.9g}"
        )


def _number(text: str, name: str, where: str) -> float:
    try:
        Decimal(text)
        value = float(text)
    except (InvalidOperation, ValueError):
        raise ParseError(f"{where}: {name} is not a number: {text!r}") from None
    if not math.isfinite(value):
        raise ParseError(f"{where}: {name} is not finite: {text!r}")
    return value


def load_references(source: TextIO | str) -> list[ReferenceRecord]:
    """Parse a ``count,best_ratio,best_density`` CSV into sorted records.

    Blank lines and lines starting with ``#`` are skipped; the header row is
    optional.  ``best_ratio`` may be left empty.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    records: dict[int, ReferenceRecord] = {}
    for lineno, line in enumerate(source, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cells = [c.strip() for c in next(csv.reader([stripped]))]
        if tuple(cells) == REFERENCE_HEADER:
            continue
        where = f"line {lineno}"
        if len(cells) != 3:
            raise ParseError(f"{where}: expected 3 fields, got {len(cells)}")
        count_text, ratio_text, density_text = cells
        try:
            count = int(count_text)
        except ValueError:
            raise ParseError(f"{where}: count is not an integer: {count_text!r}") from None
        ratio = _number(ratio_text, "best_ratio", where) if ratio_text else None
        if not density_text:
            raise ParseError(f"{where}: best_density is required")
        density = _number(density_text, "best_density", where)
        rec = ReferenceRecord(count, ratio, density)
        _check_record(rec, ratio_text or "0", density_text, where)
        if count in records:
            raise ValidationError(f"{where}: duplicate count {count}")
        records[count] = rec
    return [records[n] for n in sorted(records)]


def seed_references() -> list[ReferenceRecord]:
    """The bundled reference table (N = 1, 2, 7, 47)."""
    text = resources.files("ringfill").joinpath("data/seed_references.csv").read_text("utf-8")
    return load_references(text)


def compare(result: PackingResult, references: Sequence[ReferenceRecord]) -> GapReport:
    """Density of ``result`` against the best known packing with the same N."""
    count = result.total
    density = result.density
    by_count = {rec.count: rec for rec in references}
    ref = by_count.get(count)
    if ref is None:
        return GapReport(result.spec.ratio, count, density)
    gap = ref.best_density - density
    if gap < -GAP_SLACK:
        raise ValidationError(
            f"N = {count}: construction density {density!r} beats the reference "
            f"{ref.best_density!r}; the reference data or the count is wrong"
        )
    return GapReport(result.spec.ratio, count, density, ref.best_density, max(gap, 0.0))


def sweep(ratios: Iterable[float], references: Sequence[ReferenceRecord]) -> list[GapReport]:
    """One report per ratio, in input order.  Bad points become error entries."""
    ratios = list(ratios)
    if not ratios:
        raise RingfillError("sweep needs at least one ratio")
    reports = []
    for x in ratios:
        try:
            reports.append(compare(layout_for_ratio(x), references))
        except RingfillError as exc:
            reports.append(GapReport(float(x), error=str(exc)))
    return reports


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def gap_reports_csv(reports: Iterable[GapReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(GAP_HEADER)
    for rep in reports:
        writer.writerow([_cell(rep.ratio), _cell(rep.analytical_count), _cell(rep.analytical_density),
                         _cell(rep.reference_density), _cell(rep.gap)])
    return buf.getvalue()

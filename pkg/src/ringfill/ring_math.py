"""Closed-form ring arithmetic for packing congruent circles in a circle.

The container of radius R is split into concentric guide circles of radius
R, R - 2r, R - 4r, ...  Filler circles of radius r are placed tangent to the
inside of each guide circle, so their centres lie on radius R - (2k - 1)r for
ring k.  Everything here works on the normalized ratio x = r / R; the
dimensional entry points normalize first so both forms share one code path.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError

#: Added before flooring so analytically integral counts survive round-off.
FLOOR_EPS = 1e-9
#: Slack on the ring-feasibility and case-boundary comparisons (unit radius).
CASE_EPS = 1e-9


@dataclass(frozen=True)
class PackingSpec:
    """A problem instance: container radius and filler radius."""

    outer_radius: float
    filler_radius: float

    def __post_init__(self) -> None:
        if not (self.outer_radius > 0 and math.isfinite(self.outer_radius)):
            raise DomainError(f"outer_radius must be positive, got {self.outer_radius!r}")
        if not (self.filler_radius > 0 and math.isfinite(self.filler_radius)):
            raise DomainError(f"filler_radius must be positive, got {self.filler_radius!r}")

    @property
    def ratio(self) -> float:
        return self.filler_radius / self.outer_radius

    @classmethod
    def from_ratio(cls, ratio: float) -> PackingSpec:
        """Unit container holding fillers of radius ``ratio``."""
        return cls(1.0, float(ratio))


class CaseKind(enum.Enum):
    A = "a"  # innermost guide circle still takes a full ring
    B = "b"  # room for exactly one central circle
    C = "c"  # nothing fits inside the last ring
    INFEASIBLE = "infeasible"  # filler larger than the container


@dataclass(frozen=True)
class CaseTag:
    kind: CaseKind
    terminal_index: int


@dataclass(frozen=True)
class RingPlan:
    index: int
    center_circle_radius: float
    count: int
    phase: float = 0.0


@dataclass(frozen=True)
class CountBreakdown:
    case: CaseTag
    ring_counts: tuple[int, ...] = field(default_factory=tuple)
    central_circle: bool = False

    @property
    def total(self) -> int:
        return sum(self.ring_counts) + (1 if self.central_circle else 0)

    @property
    def ring_count(self) -> int:
        """Number of rings (not circles)."""
        return len(self.ring_counts)


def sector_inscribed_radius(outer_radius: float, divisions: int) -> float:
    """Radius of the largest circle inside one of ``divisions`` equal sectors.

    The circle touches both straight edges and the arc of the sector, which
    gives ``R / (1 + 1/sin(pi/n))``.  A single undivided disc (n = 1) has no
    straight edges, so n must be at least 2.
    """
    if int(divisions) != divisions or divisions < 2:
        raise DomainError(f"divisions must be an integer >= 2 (n = 1 is excluded), got {divisions!r}")
    if not outer_radius > 0:
        raise DomainError(f"outer_radius must be positive, got {outer_radius!r}")
    return outer_radius / (1.0 + 1.0 / math.sin(math.pi / divisions))


def _check_ratio(ratio: float) -> float:
    ratio = float(ratio)
    if not (ratio > 0 and math.isfinite(ratio)):
        raise DomainError(f"ratio must be a positive finite number, got {ratio!r}")
    return ratio


def guide_radius(ratio: float, index: int) -> float:
    """Polar radius of ring ``index`` centres in a unit container."""
    return 1.0 - (2 * index - 1) * ratio


def ring_is_feasible(ratio: float, index: int) -> bool:
    return guide_radius(ratio, index) >= ratio - CASE_EPS


def _snapped_floor(value: float) -> int:
    return math.floor(value + FLOOR_EPS)


def ring_count(ratio: float, ring_index: int) -> int:
    """Number of fillers that fit side by side around ring ``ring_index``."""
    ratio = _check_ratio(ratio)
    if ring_index < 1:
        raise DomainError(f"ring_index must be >= 1, got {ring_index!r}")
    rho = guide_radius(ratio, ring_index)
    if not rho >= ratio - CASE_EPS:
        raise DomainError(
            f"ring {ring_index} is infeasible at ratio {ratio!r}: "
            f"1 - (2k - 1)x = {rho!r} < x"
        )
    # within CASE_EPS of tangency the sine argument may creep past 1
    half_angle = math.asin(min(ratio / rho, 1.0))
    return _snapped_floor(math.pi / half_angle)


def classify_case(ratio: float) -> CaseTag:
    """Termination case and terminal index m for a unit container."""
    ratio = _check_ratio(ratio)
    if ratio > 1.0 + CASE_EPS:
        return CaseTag(CaseKind.INFEASIBLE, 0)
    # first index whose ring no longer fits
    m = 1
    while ring_is_feasible(ratio, m):
        m += 1
    if m > 1 and abs(guide_radius(ratio, m - 1) - ratio) <= CASE_EPS:
        return CaseTag(CaseKind.A, m - 1)
    if guide_radius(ratio, m) >= -CASE_EPS:
        return CaseTag(CaseKind.B, m)
    return CaseTag(CaseKind.C, m)


def count_total(ratio: float) -> CountBreakdown:
    """Three-branch total count N for a unit container.

    Case a sums rings 1..m, case b sums rings 1..m-1 and adds one central
    circle, case c sums rings 1..m-1.
    """
    tag = classify_case(ratio)
    if tag.kind is CaseKind.INFEASIBLE:
        return CountBreakdown(tag)
    last = tag.terminal_index if tag.kind is CaseKind.A else tag.terminal_index - 1
    counts = tuple(ring_count(ratio, k) for k in range(1, last + 1))
    return CountBreakdown(tag, counts, tag.kind is CaseKind.B)


def count_total_iterative(ratio: float) -> CountBreakdown:
    """Same result as :func:`count_total`, phrased as fill-rings-then-hole.

    Rings are filled while they fit; a central circle is added when the hole
    left inside the last ring, of radius 1 - 2Kx, can hold one more filler.
    """
    x = _check_ratio(ratio)
    if x > 1.0 + CASE_EPS:
        return CountBreakdown(CaseTag(CaseKind.INFEASIBLE, 0))
    counts: list[int] = []
    k = 1
    while 1.0 - (2 * k - 1) * x >= x - CASE_EPS:
        counts.append(ring_count(x, k))
        k += 1
    rings = len(counts)
    hole = 1.0 - 2 * rings * x
    if hole >= x - CASE_EPS:
        return CountBreakdown(CaseTag(CaseKind.B, rings + 1), tuple(counts), True)
    if rings and abs(hole) <= CASE_EPS:
        return CountBreakdown(CaseTag(CaseKind.A, rings), tuple(counts), False)
    return CountBreakdown(CaseTag(CaseKind.C, rings + 1), tuple(counts), False)


def count_total_dimensional(outer_radius: float, filler_radius: float) -> CountBreakdown:
    """Total count for container ``outer_radius`` and fillers ``filler_radius``."""
    return count_total(PackingSpec(outer_radius, filler_radius).ratio)


def ring_plans(spec: PackingSpec, breakdown: CountBreakdown, phases=None) -> list[RingPlan]:
    """Per-ring plans in the spec's own length unit."""
    if phases is None:
        phases = [0.0] * breakdown.ring_count
    plans = []
    for k, (n, phase) in enumerate(zip(breakdown.ring_counts, phases), start=1):
        # rings admitted within CASE_EPS of tangency sit at rho = r, not below it
        rho = max(spec.outer_radius - (2 * k - 1) * spec.filler_radius, spec.filler_radius)
        plans.append(RingPlan(k, rho, n, float(phase)))
    return plans

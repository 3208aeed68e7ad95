"""Explicit centre coordinates for the concentric-ring construction."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DomainError
from .ring_math import CountBreakdown, PackingSpec, RingPlan, count_total, ring_plans

#: Relative slack for containment and overlap; multiply by R.
GEOM_EPS = 1e-9


@dataclass(frozen=True)
class Placement:
    """One filler circle.  ``ring`` is None for the central circle."""

    center_x: float
    center_y: float
    radius: float
    ring: Optional[int] = None
    slot: Optional[int] = None

    @property
    def is_central(self) -> bool:
        return self.ring is None


class PhasePolicy(enum.Enum):
    ALL_ZERO = "zero"
    ALTERNATE_HALF_STEP = "alternate"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class LayoutOptions:
    phase_policy: PhasePolicy = PhasePolicy.ALL_ZERO
    phases: tuple[float, ...] = field(default_factory=tuple)

    def ring_phases(self, breakdown: CountBreakdown) -> list[float]:
        if self.phase_policy is PhasePolicy.ALL_ZERO:
            return [0.0] * breakdown.ring_count
        if self.phase_policy is PhasePolicy.ALTERNATE_HALF_STEP:
            # even rings are rotated by half their own slot angle
            return [math.pi / n if k % 2 == 0 else 0.0
                    for k, n in enumerate(breakdown.ring_counts, start=1)]
        if len(self.phases) != breakdown.ring_count:
            raise DomainError(
                f"explicit phases need one angle per ring: got {len(self.phases)}, "
                f"layout has {breakdown.ring_count} rings"
            )
        return [float(p) for p in self.phases]


@dataclass(frozen=True)
class PackingResult:
    spec: PackingSpec
    breakdown: CountBreakdown
    rings: tuple[RingPlan, ...]
    placements: tuple[Placement, ...]

    @property
    def total(self) -> int:
        return self.breakdown.total

    @property
    def density(self) -> float:
        return packing_density(self)


def ring_placements(spec: PackingSpec, plan: RingPlan) -> list[Placement]:
    step = 2.0 * math.pi / plan.count
    return [
        Placement(
            plan.center_circle_radius * math.cos(plan.phase + j * step),
            plan.center_circle_radius * math.sin(plan.phase + j * step),
            spec.filler_radius,
            plan.index,
            j,
        )
        for j in range(plan.count)
    ]


def generate_layout(spec: PackingSpec, options: Optional[LayoutOptions] = None) -> PackingResult:
    """Place every counted filler: rings ascending, slots ascending, central last."""
    options = options or LayoutOptions()
    breakdown = count_total(spec.ratio)
    plans = tuple(ring_plans(spec, breakdown, options.ring_phases(breakdown)))
    placements: list[Placement] = []
    for plan in plans:
        placements.extend(ring_placements(spec, plan))
    if breakdown.central_circle:
        placements.append(Placement(0.0, 0.0, spec.filler_radius))
    return PackingResult(spec, breakdown, plans, tuple(placements))


def packing_density(result: PackingResult) -> float:
    """Filler area over container area, N * x**2."""
    x = result.spec.ratio
    return result.breakdown.total * (x * x)


def layout_for_ratio(ratio: float, options: Optional[LayoutOptions] = None) -> PackingResult:
    return generate_layout(PackingSpec.from_ratio(ratio), options)


def explicit_phases(phases: Sequence[float]) -> LayoutOptions:
    return LayoutOptions(PhasePolicy.EXPLICIT, tuple(float(p) for p in phases))

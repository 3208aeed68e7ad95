"""Brute-force geometric checks for circle layouts.

Nothing in this module relies on the ring formulas: it sees only centres and
radii, so it can be used to audit generated layouts as well as ones loaded
from disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .errors import DomainError

DEFAULT_REL_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Violation:
    kind: str  # "overlap" or "escape"
    i: int
    j: Optional[int]
    magnitude: float


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def _as_arrays(placements) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rows = []
    for p in placements:
        if hasattr(p, "center_x"):
            rows.append((p.center_x, p.center_y, p.radius))
        else:
            x, y, r = p
            rows.append((x, y, r))
    data = np.array(rows, dtype=float).reshape(-1, 3)
    return data[:, 0], data[:, 1], data[:, 2]


def verify_layout(placements: Iterable, outer_radius: float,
                  tolerance: Optional[float] = None) -> VerificationReport:
    """Check all pairs for overlap and every circle for containment.

    ``placements`` holds objects with ``center_x``, ``center_y`` and
    ``radius`` attributes, or plain ``(x, y, r)`` triples.  Tangent circles
    are accepted; a pair overlaps only when its centre distance is short of
    the radius sum by more than ``tolerance`` (default ``1e-9 * R``).
    """
    if not outer_radius > 0:
        raise DomainError(f"outer_radius must be positive, got {outer_radius!r}")
    if tolerance is None:
        tolerance = DEFAULT_REL_TOLERANCE * outer_radius
    if tolerance < 0:
        raise DomainError(f"tolerance must be >= 0, got {tolerance!r}")

    xs, ys, rs = _as_arrays(placements)
    violations: list[Violation] = []

    iu, ju = np.triu_indices(len(xs), k=1)
    if len(iu):
        dist = np.hypot(xs[iu] - xs[ju], ys[iu] - ys[ju])
        depth = rs[iu] + rs[ju] - dist
        for n in np.flatnonzero(depth > tolerance):
            violations.append(Violation("overlap", int(iu[n]), int(ju[n]), float(depth[n])))

    escape = np.hypot(xs, ys) - (outer_radius - rs)
    for n in np.flatnonzero(escape > tolerance):
        violations.append(Violation("escape", int(n), None, float(escape[n])))

    violations.sort(key=lambda v: (v.i, -1 if v.j is None else v.j, v.kind))
    return VerificationReport(tuple(violations))


def _ring(radius: float, count: int, filler: float) -> list[tuple[float, float, float]]:
    step = 2.0 * math.pi / count
    return [(radius * math.cos(j * step), radius * math.sin(j * step), filler)
            for j in range(count)]


def greedy_ring_total(ratio: float, tolerance: float = DEFAULT_REL_TOLERANCE) -> int:
    """Circles the ring construction achieves when each step is checked by trial.

    Walks guide radii 1 - x, 1 - 3x, ... in a unit container.  For each
    guide radius the largest evenly spaced count that passes
    :func:`verify_layout` is kept; a ring needs at least two circles.  A
    central circle is then tried against everything placed so far.
    """
    if not 0 < ratio <= 1:
        raise DomainError(f"ratio must lie in (0, 1], got {ratio!r}")
    placed: list[tuple[float, float, float]] = []
    k = 1
    while True:
        rho = 1.0 - (2 * k - 1) * ratio
        if rho <= 0:
            break
        # chord < arc bounds the count by the guide circumference
        best = 0
        for n in range(int(math.pi * rho / ratio) + 1, 1, -1):
            trial = _ring(rho, n, ratio)
            if verify_layout(placed + trial, 1.0, tolerance).valid:
                best = n
                placed.extend(trial)
                break
        if best == 0:
            break
        k += 1
    central = placed + [(0.0, 0.0, ratio)]
    if verify_layout(central, 1.0, tolerance).valid:
        placed = central
    return len(placed)


def max_verified_count(ratio: float, candidate_counts: Iterable[int]) -> int:
    """Largest candidate N that the trial-checked ring construction reaches.

    This confirms a count is achievable; it says nothing about optimality.
    Only small instances (ratio in (0.2, 1]) are accepted.
    """
    candidates = sorted(set(int(c) for c in candidate_counts))
    if not candidates:
        raise DomainError("candidate_counts is empty")
    if not 0.2 < ratio <= 1:
        raise DomainError(f"brute-force check is limited to ratio in (0.2, 1], got {ratio!r}")
    reached = greedy_ring_total(ratio)
    feasible = [c for c in candidates if c <= reached]
    if not feasible:
        raise DomainError(f"no candidate count is achievable; construction reaches {reached}")
    return feasible[-1]

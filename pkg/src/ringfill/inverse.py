"""Largest filler ratio that still yields at least N circles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .ring_math import count_total

GUARD_POINTS = 65
SCAN_POINTS = 20001


@dataclass(frozen=True)
class InverseResult:
    ratio: float
    target: int
    method: str  # "bisection" or "grid-scan"
    evaluations: int


def _total(x: float) -> int:
    return count_total(x).total


def inverse_ratio(target: int, tolerance: float = 1e-12,
                  count: Callable[[float], int] = _total) -> InverseResult:
    """Largest x in (0, 1] with ``count(x) >= target``.

    The count is a nonincreasing step function of x, so bisection applies.
    That assumption is checked on a guard grid across the final bracket; if
    the grid disagrees the answer comes from a fine scan instead.
    ``tolerance`` is relative: the returned x is within ``tolerance * x`` of
    the step edge.
    """
    if int(target) != target or target < 1:
        raise DomainError(f"target count must be an integer >= 1, got {target!r}")
    if not tolerance > 0:
        raise DomainError(f"tolerance must be positive, got {tolerance!r}")
    evals = 0

    def n_at(x: float) -> int:
        nonlocal evals
        evals += 1
        return count(x)

    if n_at(1.0) >= target:
        return InverseResult(1.0, target, "bisection", evals)
    lo = 0.5
    while n_at(lo) < target:
        lo /= 2.0
        if lo < 1e-6:
            raise DomainError(f"no ratio above 1e-6 reaches {target} circles")
    hi = min(1.0, 2.0 * lo)

    guard = np.linspace(hi, lo, GUARD_POINTS)
    counts = [n_at(float(x)) for x in guard]
    if any(b < a for a, b in zip(counts, counts[1:])):
        return _grid_scan(target, lo, n_at, lambda: evals)

    while hi - lo > tolerance * lo:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if n_at(mid) >= target:
            lo = mid
        else:
            hi = mid
    return InverseResult(lo, target, "bisection", evals)


def _grid_scan(target, lo, n_at, evals) -> InverseResult:
    # without monotonicity the answer may sit anywhere above lo
    for x in np.linspace(1.0, lo, SCAN_POINTS):
        if n_at(float(x)) >= target:
            return InverseResult(float(x), target, "grid-scan", evals())
    return InverseResult(lo, target, "grid-scan", evals())

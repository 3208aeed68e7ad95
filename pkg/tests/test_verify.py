import math

import numpy as np
import pytest

from ringfill import DomainError, Placement, layout_for_ratio, max_verified_count, verify_layout
from ringfill.verify import greedy_ring_total


def test_single_circle_filling_container():
    assert verify_layout([(0.0, 0.0, 2.0)], 2.0).valid


def test_exact_tangency_is_valid():
    R = 3.0
    rep = verify_layout([(R / 2, 0.0, R / 2), (-R / 2, 0.0, R / 2)], R)
    assert rep.valid and rep.violations == ()


def test_forced_overlap_is_reported():
    R = 3.0
    rep = verify_layout([(R / 4, 0.0, R / 2), (-R / 4, 0.0, R / 2)], R)
    assert not rep.valid
    (v,) = rep.violations
    assert (v.kind, v.i, v.j) == ("overlap", 0, 1)
    assert v.magnitude == pytest.approx(R / 2)


def test_escape_is_reported():
    rep = verify_layout([(0.0, 0.0, 0.2), (0.9, 0.0, 0.2)], 1.0)
    (v,) = rep.violations
    assert (v.kind, v.i, v.j) == ("escape", 1, None)
    assert v.magnitude == pytest.approx(0.1)


def test_accepts_placement_objects_and_orders_violations():
    ps = [Placement(0, 0, 0.5), Placement(0.1, 0, 0.5), Placement(0.2, 0, 0.5)]
    rep = verify_layout(ps, 1.0)
    assert [(v.i, v.j) for v in rep.violations] == [(0, 1), (0, 2), (1, 2)]


def test_tolerance_governs_near_touch():
    pair = [(0.5 - 1e-10, 0.0, 0.5), (-0.5, 0.0, 0.5)]
    assert verify_layout(pair, 1.0).valid
    assert not verify_layout(pair, 1.0, tolerance=0.0).valid


def test_bad_arguments():
    with pytest.raises(DomainError):
        verify_layout([], 0.0)
    with pytest.raises(DomainError):
        verify_layout([], 1.0, tolerance=-1.0)
    assert verify_layout([], 1.0).valid


def test_generated_layouts_pass_oracle():
    rng = np.random.default_rng(1234)
    for x in rng.uniform(0.05, 1.2, size=1000):
        res = layout_for_ratio(float(x))
        assert verify_layout(res.placements, 1.0).valid, x


@pytest.mark.parametrize("x", [0.125, 1 / 3, 0.5, 0.2])
def test_shrinking_a_ring_is_detected(x):
    res = layout_for_ratio(x)
    ring = res.rings[0]
    shrunk = []
    for p in res.placements:
        s = 0.99 if p.ring == ring.index else 1.0
        shrunk.append((p.center_x * s, p.center_y * s, p.radius))
    assert not verify_layout(shrunk, 1.0).valid


def test_verdict_invariant_under_rotation():
    rng = np.random.default_rng(8)
    good = layout_for_ratio(0.125).placements
    bad = [(0.3, 0.0, 0.4), (-0.3, 0.1, 0.4), (0.0, 0.0, 0.1)]
    for theta in rng.uniform(0, 2 * math.pi, size=10):
        c, s = math.cos(theta), math.sin(theta)
        rot_good = [(c * p.center_x - s * p.center_y, s * p.center_x + c * p.center_y, p.radius)
                    for p in good]
        rot_bad = [(c * x - s * y, s * x + c * y, r) for x, y, r in bad]
        assert verify_layout(rot_good, 1.0).valid
        assert not verify_layout(rot_bad, 1.0).valid


@pytest.mark.parametrize("x, candidates, expected", [
    (1 / 3, range(1, 20), 7),
    (0.5, range(1, 10), 2),
    (0.45, range(1, 10), 3),
    (0.45, range(1, 3), 2),
    (1.0, range(1, 5), 1),
    (0.7, range(1, 5), 1),
])
def test_max_verified_count(x, candidates, expected):
    assert max_verified_count(x, candidates) == expected


def test_max_verified_count_errors():
    with pytest.raises(DomainError, match="empty"):
        max_verified_count(0.5, range(5, 5))
    with pytest.raises(DomainError):
        max_verified_count(0.1, range(1, 5))
    with pytest.raises(DomainError, match="achievable"):
        max_verified_count(0.5, range(3, 6))


def test_trial_construction_agrees_with_formula_on_small_instances():
    rng = np.random.default_rng(21)
    for x in rng.uniform(0.2, 1.0, size=200):
        x = float(x)
        assert greedy_ring_total(x) == layout_for_ratio(x).total, x

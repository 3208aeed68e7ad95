"""Exit criteria for the package.

Each criterion is one test.  The outcome of every criterion is collected in
``RESULTS`` and printed as a PASS/FAIL line at the end of the pytest run;
``python tests/test_acceptance.py`` prints the same lines without pytest.
"""

import math
import time
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from ringfill import (GEOM_EPS, CaseKind, compare, count_total, count_total_dimensional,
                      count_total_iterative, curve_csv, from_json, generate_layout, inverse_ratio,
                      layout_for_ratio, PackingSpec, sector_inscribed_radius, seed_references,
                      to_json, to_svg, verify_layout)

RESULTS = {}

CLOSED_FORM_TOL = 1e-12
GAP_TOL = 1e-6
CURVE_TOL = 1e-12
INVERSE_TOL = 1e-9


def record(name, func):
    start = time.perf_counter()
    try:
        detail = func()
        ok = True
    except AssertionError as exc:
        detail, ok = f"{exc}", False
    RESULTS[name] = (ok, f"{detail} [{time.perf_counter() - start:.2f}s]")
    assert ok, detail


def ac1_closed_forms():
    expected = {2: 0.5, 3: math.sqrt(3) / (2 + math.sqrt(3)), 4: 1 / (1 + math.sqrt(2))}
    worst = 0.0
    for n, value in expected.items():
        err = abs(sector_inscribed_radius(1.0, n) - value)
        assert err <= CLOSED_FORM_TOL, f"n={n}: error {err}"
        worst = max(worst, err)
    return f"n=2,3,4 match, max error {worst:.1e}"


def ac2_example_two():
    start = time.perf_counter()
    for b in (count_total(0.125), count_total_dimensional(4.8, 0.6)):
        assert (b.case.kind, b.case.terminal_index) == (CaseKind.A, 4), b.case
        assert b.ring_counts == (21, 15, 9, 2), b.ring_counts
        assert b.total == 47
    res = generate_layout(PackingSpec(4.8, 0.6))
    assert res.density == 0.734375, res.density
    assert layout_for_ratio(0.125).density == 0.734375
    assert verify_layout(res.placements, 4.8).valid
    svg = to_svg(layout_for_ratio(0.125))
    n_circles = len(ET.fromstring(svg.encode()).findall("{http://www.w3.org/2000/svg}circle"))
    assert n_circles == 48, n_circles
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    return "case a, m=4, rings 21+15+9+2, N=47, density 0.734375, verified, 48 SVG circles"


def ac3_example_one():
    b = count_total(1 / 3)
    assert (b.case.kind, b.case.terminal_index) == (CaseKind.B, 2), b.case
    assert b.total == 7 and b.ring_counts == (6,) and b.central_circle
    assert verify_layout(layout_for_ratio(1 / 3).placements, 1.0).valid
    literal = count_total(0.334)
    assert literal.total == 5 and literal.case.kind is CaseKind.C, literal
    return "x=1/3: case b, m=2, N=7, verified; literal x=0.334 pinned at N=5 (case c)"


def ac4_gap():
    rep = compare(layout_for_ratio(0.125), seed_references())
    assert abs(rep.reference_density - 0.787760) <= GAP_TOL, rep
    assert abs(rep.gap - 0.053385) <= GAP_TOL, rep
    return f"reference {rep.reference_density:.6f}, gap {rep.gap:.6f}"


def ac5_property_suite():
    start = time.perf_counter()
    rng = np.random.default_rng(20240601)
    for x in rng.uniform(0.01, 1.2, size=10_000):
        assert count_total(float(x)) == count_total_iterative(float(x)), f"branch mismatch at {x}"
    xs = [float(x) for x in rng.uniform(0.05, 1.2, size=1000)]
    results = [layout_for_ratio(x) for x in xs]
    for x, res in zip(xs, results):
        assert verify_layout(res.placements, 1.0, GEOM_EPS).valid, f"verifier rejects x={x}"
    totals = [count_total(float(x)).total for x in np.linspace(1.2, 0.01, 10_000)]
    assert all(b >= a for a, b in zip(totals, totals[1:])), "N(x) not monotone"
    for x, res in zip(xs, results):
        assert from_json(to_json(res)) == res, f"JSON round trip fails at {x}"
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"took {elapsed:.1f}s"
    return "(a) 1e4 branch checks (b) 1e3 verified layouts (c) monotone 1e4 grid (d) 1e3 round trips"


def ac6_curve():
    rows = [line.split(",") for line in curve_csv(180).splitlines()[1:]]
    values = [float(v) for _, v in rows]
    assert len(values) == 179
    assert values[0] == 0.5
    assert all(b < a for a, b in zip(values, values[1:])), "not strictly decreasing"
    worst = max(abs(v - sector_inscribed_radius(1.0, int(n))) for (n, _), v in zip(rows, values))
    assert worst <= CURVE_TOL, worst
    return f"179 rows, strictly decreasing from 0.5, max deviation {worst:.1e}"


def ac7_inverse():
    start = time.perf_counter()
    parts = []
    for target, expected in ((7, 1 / 3), (2, 0.5)):
        res = inverse_ratio(target)
        err = abs(res.ratio - expected)
        assert err <= INVERSE_TOL, f"N={target}: {res.ratio} is {err} from {expected}"
        layout = layout_for_ratio(res.ratio)
        assert layout.total >= target
        assert verify_layout(layout.placements, 1.0).valid, f"N={target} layout rejected"
        parts.append(f"N={target} -> {res.ratio:.12f}")
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    return ", ".join(parts) + ", both verified"


CRITERIA = [
    ("AC1 sector radius closed forms", ac1_closed_forms),
    ("AC2 example N=47 end to end", ac2_example_two),
    ("AC3 example N=7 (x=1/3) and literal 0.334", ac3_example_one),
    ("AC4 density gap vs best known", ac4_gap),
    ("AC5 property suite", ac5_property_suite),
    ("AC6 r/R curve up to n=180", ac6_curve),
    ("AC7 inverse search", ac7_inverse),
]


@pytest.mark.parametrize("name, func", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_acceptance(name, func):
    record(name, func)


if __name__ == "__main__":
    failed = 0
    for name, func in CRITERIA:
        try:
            record(name, func)
        except AssertionError:
            failed += 1
        ok, detail = RESULTS[name]
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    raise SystemExit(1 if failed else 0)

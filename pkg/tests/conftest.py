import mpmath
import pytest


def enumerate_ring_count(ratio, ring_index, dps=50):
    """Largest n whose evenly spaced ring of fillers keeps neighbours apart.

    Walks n upward in high precision instead of inverting the sine.
    """
    with mpmath.workdps(dps):
        x = mpmath.mpf(ratio)
        rho = 1 - (2 * ring_index - 1) * x
        if rho < x:
            return None
        n = 2
        while 2 * rho * mpmath.sin(mpmath.pi / (n + 1)) >= 2 * x:
            n += 1
        return n


@pytest.fixture
def ring_oracle():
    return enumerate_ring_count


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")

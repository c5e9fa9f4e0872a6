import pytest

from helpers import discrete
from qlab import boolean, lukasiewicz, make_distributor

ACCEPTANCE: dict[int, tuple[str, str, float, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, bound): acceptance criterion with time bound")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title, bound = marker.args
    ACCEPTANCE[number] = ("PASS" if report.passed else "FAIL", title, report.duration, bound)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, title, elapsed, bound = ACCEPTANCE[number]
        terminalreporter.write_line(f"{status} criterion {number:2d}: {title} ({elapsed:.2f}s, bound {bound}s)")


# -- shared fixtures ------------------------------------------------------------------

@pytest.fixture
def q2():
    return boolean()


@pytest.fixture
def l3():
    return lukasiewicz(3)


@pytest.fixture
def ctx():
    """Boolean 2×2 context ``{(x1,y1), (x1,y2), (x2,y2)}`` between discrete categories."""
    q = boolean()
    A, B = discrete(q, ["x1", "x2"], "A"), discrete(q, ["y1", "y2"], "B")
    phi = make_distributor(A, B, {("x1", "y1"): "1", ("x1", "y2"): "1", ("x2", "y2"): "1"}, name="phi")
    return A, B, phi

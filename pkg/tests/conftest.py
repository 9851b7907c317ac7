import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from simplicial_tables import clr_inverse, stuart_vision, to_probability

settings.register_profile(
    "repo", derandomize=True, max_examples=200, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def log_tables(min_size=2, max_size=6, square=True):
    """Strategy for probability tables drawn as closures of exp(bounded reals)."""
    elems = st.floats(-6, 6, allow_nan=False, allow_infinity=False)

    @st.composite
    def build(draw):
        I = draw(st.integers(min_size, max_size))
        J = I if square else draw(st.integers(min_size, max_size))
        return clr_inverse(draw(hnp.arrays(float, (I, J), elements=elems)))

    return build()


@pytest.fixture(scope="session")
def stuart_counts():
    return stuart_vision()


@pytest.fixture(scope="session")
def stuart(stuart_counts):
    return to_probability(stuart_counts)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# -- acceptance summary ----------------------------------------------------

_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marks = getattr(report, "criterion", None)
    if marks is None:
        return
    number, text = marks
    prev = _criteria.get(number, (text, True))
    _criteria[number] = (text, prev[1] and report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, ok = _criteria[number]
        terminalreporter.write_line(
            f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}")

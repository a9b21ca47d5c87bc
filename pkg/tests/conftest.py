import pytest
from fractions import Fraction
from hypothesis import strategies as st

from quasihilb import RatPoly

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.head_line, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome.upper():7s} {name}")


small_fractions = st.builds(
    Fraction, st.integers(-20, 20), st.integers(1, 6)
)


def ratpolys(max_degree=6):
    return st.lists(small_fractions, max_size=max_degree + 1).map(RatPoly)


@pytest.fixture
def x():
    return RatPoly.x()

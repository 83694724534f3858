import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def acceptance_golden():
    return json.loads((DATA / "acceptance_golden.json").read_text(encoding="utf-8"))


def rationals(min_value=None, max_value=None, max_denominator=50):
    return st.fractions(min_value=min_value, max_value=max_value, max_denominator=max_denominator)


positive_rationals = rationals(min_value=Fraction(1, 50), max_value=Fraction(5))


ACCEPTANCE_RESULTS: dict = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is not None and call.when == "call":
        ACCEPTANCE_RESULTS[marker.args[0]] = (marker.args[1], call.excinfo is None)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, passed = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}")

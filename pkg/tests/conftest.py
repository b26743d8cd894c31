import random

import pytest

# one summary line per acceptance criterion, filled in from test_acceptance.py
ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        ACCEPTANCE[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{ACCEPTANCE[name]}  {name}")


@pytest.fixture
def rng():
    return random.Random(20240917)

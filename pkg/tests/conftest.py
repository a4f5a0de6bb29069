from pathlib import Path

import pytest

from mixedwh.mixedpoly import load

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

_acceptance = {}


@pytest.fixture
def fixture_poly():
    def get(name):
        return load(FIXTURES / f"{name}.poly")

    return get


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        crit = getattr(report, "criterion", None)
        for key, value in report.user_properties:
            if key == "criterion":
                crit = value
        if crit is not None:
            _acceptance[crit] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_acceptance, key=lambda c: int(c.split()[0])):
        outcome, duration = _acceptance[crit]
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  criterion {crit}  ({duration:.2f} s)")

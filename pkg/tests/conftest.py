"""Shared fixtures plus a terminal summary of the acceptance criteria."""

import re
from pathlib import Path

import pytest

SAMPLES_DIR = Path(__file__).resolve().parent.parent / "samples"
DATA_DIR = Path(__file__).resolve().parent / "data"


@pytest.fixture
def baseline_path() -> Path:
    return SAMPLES_DIR / "national_baseline.json"


@pytest.fixture
def hardening_path() -> Path:
    return SAMPLES_DIR / "hardening_push.json"


_CRITERION_PATTERN = re.compile(r"test_criterion_(\d+)_(\w+)")
_acceptance_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _CRITERION_PATTERN.search(report.nodeid)
    if not match:
        return
    number = int(match.group(1))
    name = match.group(2).replace("_", " ")
    _acceptance_results[number] = (name, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance_results):
        name, outcome = _acceptance_results[number]
        terminalreporter.write_line(f"criterion {number} ({name}): {outcome}")

"""Acceptance bookkeeping: one pass/fail line per criterion after the run."""

from __future__ import annotations

from pathlib import Path

import pytest

_RESULTS: dict[int, tuple[str, str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    details = [f"{k}: {v}" for k, v in item.user_properties]
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _RESULTS[number] = (title, "PASS" if rep.passed else "FAIL", details)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, verdict, details = _RESULTS[number]
        line = f"[{verdict}] criterion {number}: {title}"
        if details:
            line += " | " + "; ".join(details)
        tr.write_line(line)


@pytest.fixture
def datadir():
    return Path(__file__).parent / "data"

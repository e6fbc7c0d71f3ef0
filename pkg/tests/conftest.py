"""Terminal reporting for the acceptance criteria.

test_acceptance registers one result per criterion; failures are recorded
by the report hook.  The summary hook prints one visible pass/fail line per
criterion after the run, independent of output capturing.
"""

import re

import pytest

CRITERION_RESULTS: dict[int, tuple[str, str]] = {}


def record_criterion(number: int, verdict: str, detail: str) -> None:
    CRITERION_RESULTS[number] = (verdict, detail)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    match = re.match(r"test_criterion_(\d+)", item.name)
    if match and report.when == "call" and report.failed:
        record_criterion(int(match.group(1)), "FAIL", item.name)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERION_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(CRITERION_RESULTS):
        verdict, detail = CRITERION_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d} {verdict}: {detail}")

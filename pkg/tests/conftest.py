import pytest
from hypothesis import settings

from pqwhitney.whitney import clear_cache

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("repo")

_acceptance: dict[int, list[str]] = {}


@pytest.fixture(autouse=True, scope="module")
def _fresh_triangle_cache():
    clear_cache()
    yield


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in getattr(report, "acceptance_marks", ()):
        _acceptance.setdefault(mark, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.acceptance_marks = [m.args[0] for m in item.iter_markers("acceptance")]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        outcomes = _acceptance[number]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict} ({outcomes.count('passed')}/{len(outcomes)} checks)")

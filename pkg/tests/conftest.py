"""Reporting hook for the acceptance suite: one PASS/FAIL line per criterion."""

import pytest

_LINES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    status = "PASS" if report.passed else "FAIL"
    line = f"criterion {number} {status}: {title} ({report.duration:.2f}s)"
    _LINES.append(line)
    tr = item.config.pluginmanager.get_plugin("terminalreporter")
    if tr is not None:
        tr.write_line("")
        tr.write_line(line)


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda l: int(l.split()[1])):
            terminalreporter.write_line(line)

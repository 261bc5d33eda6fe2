"""Per-criterion PASS/FAIL summary for the acceptance module."""

import pytest

_TITLES: dict[int, str] = {}
_OUTCOMES: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test covers")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    _TITLES[number] = title
    if report.when == "call" or report.failed:
        _OUTCOMES.setdefault(number, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _TITLES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_TITLES):
        results = _OUTCOMES.get(number, [])
        ok = bool(results) and all(results)
        terminalreporter.write_line(f"criterion {number} ({_TITLES[number]}): "
                                    f"{'PASS' if ok else 'FAIL'}")

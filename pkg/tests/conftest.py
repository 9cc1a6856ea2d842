"""Acceptance bookkeeping: tests tagged ``@pytest.mark.criterion(n, "title")`` roll up
into one PASS/FAIL line per criterion at the end of the run."""

from __future__ import annotations

import pytest

_results: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion the test checks")


@pytest.fixture
def record(request):
    """Attach a one-line measurement to the current criterion's summary line."""

    def _record(detail: str) -> None:
        request.node.user_properties.append(("detail", detail))

    return _record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    n, title = marker.args
    entry = _results.setdefault(n, {"title": title, "ok": True, "details": [], "tests": 0})
    if report.when == "call":
        entry["tests"] += 1
    if report.failed:
        entry["ok"] = False
    entry["details"] += [v for k, v in item.user_properties if k == "detail" and v not in entry["details"]]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        e = _results[n]
        status = "PASS" if e["ok"] else "FAIL"
        detail = "; ".join(e["details"])
        line = f"criterion {n:>2} {status}  {e['title']}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))

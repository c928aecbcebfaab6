"""Collects acceptance-criterion outcomes and prints one line per criterion."""
import pytest

RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.failed):
        return
    n, title = mark.args
    ok, secs, notes, _ = RESULTS.get(n, (True, 0.0, [], title))
    notes = notes + list(getattr(item, "acceptance_notes", []))
    item.acceptance_notes = []
    RESULTS[n] = (ok and rep.passed, secs + rep.duration, notes, title)


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(RESULTS):
        ok, secs, notes, title = RESULTS[n]
        extra = f" [{'; '.join(notes)}]" if notes else ""
        terminalreporter.write_line(
            f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title} ({secs:.2f}s){extra}")

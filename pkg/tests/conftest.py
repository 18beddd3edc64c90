import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from neumaier import catalog  # noqa: E402

_results: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, name = marker.args
    slot = _results.setdefault(number, {"name": name, "ok": True, "ran": False})
    if report.when == "call":
        slot["ran"] = True
    if report.failed or (report.when == "setup" and report.skipped):
        slot["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        slot = _results[number]
        status = "PASS" if slot["ok"] and slot["ran"] else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number:>2} {slot['name']}: {status}")


@pytest.fixture(scope="session")
def graphs():
    """Catalog graphs built once per session."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = catalog.get(name)
        return cache[name]

    return get

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from steiner_doubling import TripleSystem, seed_sts9  # noqa: E402


@pytest.fixture(scope="session")
def seed():
    return seed_sts9()


@pytest.fixture(scope="session")
def sts9(seed):
    return seed.system


@pytest.fixture(scope="session")
def sts3():
    return TripleSystem.from_blocks(3, [(0, 1, 2)])


_acceptance: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.get_closest_marker("acceptance") is None:
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    if report.when == "call" or report.failed:
        prev = _acceptance.get(item.nodeid, ("PASS", doc))[0]
        status = "FAIL" if report.failed or prev == "FAIL" else "PASS"
        _acceptance[item.nodeid] = (status, doc)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for status, doc in _acceptance.values():
        terminalreporter.write_line(f"[{status}] {doc}")

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from circmds.gf2m import FieldSpec  # noqa: E402

_criteria = []


@pytest.fixture(scope="session")
def gf256():
    return FieldSpec(8, 0x11B)


@pytest.fixture(scope="session")
def gf16():
    return FieldSpec(4, 0x13)


@pytest.fixture(scope="session")
def gf4():
    return FieldSpec(2, 0x7)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _criteria.append((marker.args[0], item.name, rep.outcome))
    elif marker and rep.when == "setup" and rep.outcome != "passed":
        _criteria.append((marker.args[0], item.name, rep.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, outcome in sorted(_criteria, key=lambda c: (c[0], c[1])):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {name}")

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from schubsmooth.rootsys import CartanType, build_root_system  # noqa: E402


@pytest.fixture(scope="session")
def rs_of():
    def get(name):
        return build_root_system(CartanType.parse(name))

    return get


@pytest.fixture
def a2(rs_of):
    return rs_of("A2")


@pytest.fixture
def b2(rs_of):
    return rs_of("B2")


ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion_report():
    """Record one pass/fail line per acceptance criterion."""

    def record(name, ok, detail=""):
        ACCEPTANCE_RESULTS.append((name, bool(ok), detail))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")

import sys

import pytest
from hypothesis import settings

from cases import HeckeCase

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def a2_z3():
    return HeckeCase("A2", "z + t", 3)


@pytest.fixture(scope="session")
def a2_t():
    return HeckeCase("A2", "t", 1)


@pytest.fixture(scope="session")
def a1_m1():
    return HeckeCase("A1", "-1 + t", 1)


@pytest.fixture(scope="session")
def a2_one():
    return HeckeCase("A2", "1 + t", 1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda x: int(x.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

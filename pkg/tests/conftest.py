import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from upalg.modelgen import builtin, enumerate_algebras  # noqa: E402


@pytest.fixture(scope="session")
def census():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_algebras(n)
        return cache[n]
    return get


@pytest.fixture(scope="session")
def upto4(census):
    return [a for n in range(1, 5) for a in census(n).representatives]


@pytest.fixture(scope="session")
def upto5(census, upto4):
    return upto4 + list(census(5).representatives)


@pytest.fixture
def paper4():
    return builtin("paper4")


@pytest.fixture
def paper5():
    return builtin("paper5")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

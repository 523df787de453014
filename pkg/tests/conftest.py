from pathlib import Path

import pytest

from vreduced.corpus import banana, doubled_path, doubled_triangle

DATA = Path(__file__).parent / "data"

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def tri():
    return doubled_triangle()


@pytest.fixture
def dpath():
    return doubled_path()


@pytest.fixture
def two():
    return banana(2)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

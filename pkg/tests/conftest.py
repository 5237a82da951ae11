import pytest

from preproj.lattice import SubsetI

ACCEPTANCE_LINES: list[str] = []


def subset(n, *elements):
    return SubsetI(n, tuple(elements))


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

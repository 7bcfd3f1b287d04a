import pytest

from oracles import corpus

# filled by tests/test_acceptance.py, one entry per criterion
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def graphs():
    return corpus()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

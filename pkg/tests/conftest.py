import pytest

from freeknot.gauss import parse_diagram

D7_TEXT = "long: A E B F A G B C E D F D G C"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def d7():
    return parse_diagram(D7_TEXT)


@pytest.fixture
def trefoil():
    return parse_diagram("long: A B C A B C")


@pytest.fixture
def d2_closed():
    return parse_diagram("closed: A B A B")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

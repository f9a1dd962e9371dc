import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("]", 1)[1].split(".", 1)[0])):
            terminalreporter.write_line(line)

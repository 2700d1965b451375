import pytest

# Lines recorded by the acceptance tests, echoed in the terminal summary so they
# survive output capture.
ACCEPTANCE_LINES: list = []


@pytest.fixture
def record_line():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

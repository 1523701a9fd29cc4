import pytest

_LINES: list[str] = []


@pytest.fixture
def acceptance_line():
    """Record a one-line verdict for the terminal summary."""
    return _LINES.append


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (number, title, passed, detail)."""

    def record(number, title, passed, detail):
        ACCEPTANCE_LINES.append((number, f"{'PASS' if passed else 'FAIL'} criterion {number:>2}: {title} ({detail})"))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)

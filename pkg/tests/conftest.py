import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def finding():
    """Buffer notes that are printed under the test's PASS/FAIL line."""
    return []


@pytest.fixture
def criterion(request, finding):
    """Record one PASS/FAIL line for the acceptance summary."""
    name = request.node.name

    def record(ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
        ACCEPTANCE_LINES.extend(f"      finding: {note}" for note in finding)
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import pytest

# filled by test_acceptance.py: (number, title, passed, detail)
ACCEPTANCE = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number:>2}. {title}: {detail}")

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {key}: {line}")


@pytest.fixture
def record_criterion():
    def record(number, ok, line):
        ACCEPTANCE[number] = (bool(ok), line)
        print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {line}")
        return ok
    return record

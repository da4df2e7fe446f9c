import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> pathlib.Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    outcomes: dict[str, str] = {}
    for reports in terminalreporter.stats.values():
        for report in reports:
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" not in nodeid or getattr(report, "when", "") != "call":
                continue
            name = nodeid.split("::")[-1]
            outcomes[name] = "PASS" if report.passed else "FAIL"
    if outcomes:
        terminalreporter.section("acceptance criteria")
        for name, status in outcomes.items():
            terminalreporter.write_line(f"{status}  {name}")

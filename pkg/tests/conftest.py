from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# acceptance bookkeeping: one line per criterion in the terminal summary
ACCEPTANCE: dict = {}


@pytest.fixture
def criterion(request):
    def record(number: int, label: str):
        ACCEPTANCE[request.node.nodeid] = (number, label)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when == "call" or key != "passed":
                outcomes[rep.nodeid] = key
    terminalreporter.section("acceptance criteria")
    for nodeid, (number, label) in sorted(ACCEPTANCE.items(), key=lambda kv: kv[1][0]):
        status = "PASS" if outcomes.get(nodeid) == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {label}")

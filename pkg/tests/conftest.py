import re

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        key = f"criterion {m.group(1)} ({m.group(2).replace('_', ' ')})"
        if report.outcome == "passed":
            _acceptance.setdefault(key, f"PASS  [{report.duration:.2f}s]")
        else:
            _acceptance[key] = f"FAIL  [{report.duration:.2f}s]"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_acceptance, key=lambda k: int(k.split()[1])):
        terminalreporter.write_line(f"{key}: {_acceptance[key]}")

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict = {}


def pytest_runtest_makereport(item, call):
    crit = getattr(getattr(item, "function", None), "criterion", None)
    if crit is None:
        return
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        _criteria[crit] = call.excinfo is None


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (n, title), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")

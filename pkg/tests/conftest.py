"""Collects the per-criterion verdicts of test_acceptance.py and prints them at the end of the run."""

_RESULTS = {}


def record(criterion, ok, detail):
    _RESULTS[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria [PRIMARY]")
    for n in sorted(_RESULTS):
        ok, detail = _RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")

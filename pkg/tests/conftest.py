import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)$")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if m and (report.when == "call" or report.failed):
        lines = report.longreprtext.splitlines()
        detail = dict(report.user_properties).get("summary") or (lines[-1] if lines else "")
        _results[int(m.group(1))] = (report.passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    from test_acceptance import TITLES

    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {TITLES[n]}: {detail}")

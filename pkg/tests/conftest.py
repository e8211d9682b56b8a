"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

import pytest

CRITERIA = {
    1: "linear single kind: incexc = diagram = gf = oracle on m<=6, n<=12, all caps, under 60 s",
    2: "diagram row-permutation totals equal C(m+n-1, n) on m<=8, n<=14",
    3: "golden values: full/one-short boxes, two-box worked example and listings, markers, split counts",
    4: "two-kind diagram counter equals the oracle on m<=4, n1+n2<=8, all caps",
    5: "restricted two-kind, group and three-kind formulas equal the oracle inside their ranges",
    6: "circular single kind: diagram = burnside = oracle and the excess identity on m<=6, n<=10",
    7: "circular two kinds: burnside = oracle on m<=4, n1+n2<=7; comparison report is clean",
    8: "full-range inclusion-exclusion limit changes nothing; the (3, 6, 2) note appears once",
}

_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _outcomes.setdefault(mark.args[0], [])
            item.user_properties.append(("criterion", mark.args[0]))


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes.setdefault(crit, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(CRITERIA):
        results = _outcomes.get(crit)
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {crit}: {status}  {CRITERIA[crit]}")

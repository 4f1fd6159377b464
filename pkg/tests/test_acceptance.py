"""The eight acceptance criteria, each run at its stated bounds.

Every test prints one ``PASS``/``FAIL`` line, with the output capture lifted so
the lines appear in a plain ``pytest`` run.  Running this file as a script
prints the same eight lines without pytest.
"""

import sys
import time

import pytest

from qschur.macdonald import COINV_READINGS
from qschur.verify import (
    SuiteResult,
    default_jobs,
    golden_checks,
    suite_atoms,
    suite_coinv,
    suite_coinvariant,
    suite_hecke,
    suite_insertion,
    suite_lrrule,
    suite_patterns,
)

JOBS = default_jobs()


def goldens_result() -> SuiteResult:
    res = SuiteResult("goldens")
    start = time.perf_counter()
    for label, check in golden_checks():
        res.record(check(), label)
    res.seconds = time.perf_counter() - start
    if res.seconds >= 1.0:
        res.failures.append(f"took {res.seconds:.2f}s, limit 1s")
    return res


CRITERIA = {
    1: ("worked examples reproduce exactly in under 1 s", goldens_result),
    2: ("LR rule, |alpha| <= 4, |lambda| <= 3", lambda: suite_lrrule(4, 3, JOBS)),
    3: ("insertion lemmas, |alpha| <= 5, entries <= 4", lambda: suite_insertion(5, 4, JOBS)),
    4: ("triangularity d <= 5, super fillings <= 6", lambda: suite_coinvariant(5, 6, JOBS)),
    5: ("six atom constructions agree", lambda: suite_atoms(2, 3, JOBS)),
    6: ("pattern bijections, CT size <= 5, entries <= 5", lambda: suite_patterns(5, 5, JOBS)),
    7: ("Hecke eigen equations and relations", lambda: suite_hecke(3, 3, JOBS)),
    8: ("coinv readings, one passes everywhere", lambda: suite_coinv(4, 3, JOBS)),
}


def report(number: int, res: SuiteResult) -> str:
    title = CRITERIA[number][0]
    status = "PASS" if res.ok else "FAIL"
    line = f"{status} criterion {number} ({title}): {res.checked} checks, {len(res.failures)} failures, {res.seconds:.2f}s"
    if res.failures:
        line += f"; first: {res.failures[0]}"
    return line


def run_criterion(number: int, capsys) -> SuiteResult:
    res = CRITERIA[number][1]()
    with capsys.disabled():
        print("\n" + report(number, res))
    return res


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    res = run_criterion(number, capsys)
    assert res.checked > 0
    assert res.ok, res.failures[:10]


def test_coinv_report_names_every_reading(capsys):
    res = suite_coinv(4, 3, JOBS)
    assert set(res.notes["pass_rates"]) == set(COINV_READINGS)
    assert "right-to-left" in res.notes["readings_passing_everywhere"]


if __name__ == "__main__":
    results = []
    for number in sorted(CRITERIA):
        res = CRITERIA[number][1]()
        print(report(number, res), flush=True)
        results.append(res.ok)
    sys.exit(0 if all(results) else 1)

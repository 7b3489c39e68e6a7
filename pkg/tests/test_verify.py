"""Tests for the verification-suite plumbing."""

import pytest

from rbell.errors import DomainError
from rbell.verify import SUITES, CheckResult, run_suite


def test_check_result_shape():
    res = CheckResult("demo", "PASS")
    assert res.detail == ""
    with pytest.raises(AttributeError):
        res.status = "FAIL"


def test_registry_names():
    assert set(SUITES) == {
        "definitions",
        "recurrences",
        "carlitz",
        "transforms",
        "cigler",
        "dobinski",
        "integral",
        "ogf",
        "kummer",
        "roots",
        "maxindex",
        "oracle",
    }


def test_unknown_suite():
    with pytest.raises(DomainError):
        run_suite("nonsense")


def test_each_suite_passes_on_small_grids():
    for name in SUITES:
        for check in run_suite(name, nmax=5, rmax=3):
            assert check.status in ("PASS", "KNOWN-ERRATUM"), (name, check)


def test_recurrences_reports_the_erratum():
    results = run_suite("recurrences", nmax=4, rmax=3)
    by_name = {check.name: check for check in results}
    erratum = by_name["cross-r-printed-form"]
    assert erratum.status == "KNOWN-ERRATUM"
    assert "3" in erratum.detail and "10" in erratum.detail
    others = [check for check in results if check.name != "cross-r-printed-form"]
    assert all(check.status == "PASS" for check in others)


def test_all_aggregates_every_suite():
    results = run_suite("all", nmax=4, rmax=2)
    names = {check.name for check in results}
    assert "oracle-totals" in names
    assert "maximizing-index" in names
    assert "dobinski-enclosure" in names
    assert not any(check.status == "FAIL" for check in results)


def test_runs_are_deterministic():
    a = run_suite("definitions", nmax=5, rmax=3)
    b = run_suite("definitions", nmax=5, rmax=3)
    assert a == b

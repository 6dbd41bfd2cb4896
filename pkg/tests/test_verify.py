import json

import pytest

from nestcalc import verify


@pytest.mark.parametrize("suite", verify.SUITES)
def test_each_suite_passes(suite):
    report = verify.run_suite(suite, seed=42)
    assert report.records
    failed = [r.check_id for r in report.records if not r.passed]
    assert report.passed, failed


def test_report_is_deterministic_and_json_serialisable():
    a = verify.run_suite("jets", seed=11).to_json()
    b = verify.run_suite("jets", seed=11).to_json()
    assert a == b
    data = json.loads(a)
    assert data["seed"] == 11 and data["suite"] == "jets"
    assert set(data["records"][0]) == {"check_id", "points", "max_residual", "tolerance", "bound", "passed"}


def test_tolerance_override_only_touches_upper_bounds():
    report = verify.run_suite("solutions", seed=42, tol=1e-30)
    lower = [r for r in report.records if r.bound == "min"]
    assert lower and all(r.tolerance == 1e-2 and r.passed for r in lower)
    assert not report.passed


def test_overall_flag_follows_records():
    report = verify.VerifyReport("x", 0, [verify.CheckRecord("a", 1, 0.5, 1.0), verify.CheckRecord("b", 1, 2.0, 1.0)])
    assert not report.passed
    assert "FAIL" in report.table()
    assert not verify.CheckRecord("nan", 1, float("nan"), 1.0).passed
    assert verify.CheckRecord("lower", 1, 2.0, 1.0, "min").passed


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suite("nope")

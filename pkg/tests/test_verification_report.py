import pytest

from cuspworks.core import verification_report as vr
from cuspworks.core.errors import (
    ExactFactorizationFailed,
    SymbolicMismatch,
    ToleranceAmbiguity,
    UnknownVariable,
)
from cuspworks.core.proposition_checks import CheckContext, PropositionCheck
from cuspworks.core.suite_presets import SuitePreset, get_suite, list_suites


def raising(exc):
    def run(ctx):
        raise exc

    return run


@pytest.mark.parametrize(
    "run, status",
    [
        (lambda ctx: "fine", vr.CheckStatus.PASS),
        (raising(SymbolicMismatch("differs")), vr.CheckStatus.FAIL),
        (raising(AssertionError()), vr.CheckStatus.FAIL),
        (raising(ValueError("bad")), vr.CheckStatus.FAIL),
        (raising(UnknownVariable("q")), vr.CheckStatus.FAIL),
        (raising(ExactFactorizationFailed("no split")), vr.CheckStatus.SKIPPED),
        (raising(ToleranceAmbiguity("close roots")), vr.CheckStatus.SKIPPED),
    ],
)
def test_run_check_statuses(run, status):
    result = vr.run_check(PropositionCheck("t/x", "claim", run), CheckContext())
    assert result.status is status
    assert result.details
    assert result.seconds >= 0


def test_unexpected_exceptions_become_error_rows():
    check = PropositionCheck("t/x", "claim", raising(TypeError("bad call")))
    result = vr.run_check(check, CheckContext())
    assert result.status is vr.CheckStatus.ERROR
    assert result.details == "TypeError: bad call"


def test_an_erroring_check_does_not_stop_the_suite(monkeypatch):
    checks = {
        "t/a": PropositionCheck("t/a", "first", raising(KeyError("bug"))),
        "t/b": PropositionCheck("t/b", "second", lambda ctx: "fine"),
    }
    monkeypatch.setattr(vr, "CHECKS", checks)
    report = vr.run_suite(SuitePreset("t", "Test", "fake checks", ("t/a", "t/b")))
    assert (report.passed, report.failed, report.errors) == (1, 0, 1)
    assert not report.ok
    assert report.summary()["error_checks"] == ["t/a"]
    assert report.lines()[-1] == "1 passed, 0 failed, 0 skipped, 1 errors"


@pytest.fixture
def fake_suite(monkeypatch):
    checks = {
        "t/b": PropositionCheck("t/b", "second", lambda ctx: f"seed {ctx.seed}"),
        "t/a": PropositionCheck("t/a", "first", raising(SymbolicMismatch("no"))),
        "t/c": PropositionCheck("t/c", "third", raising(ToleranceAmbiguity("close"))),
    }
    monkeypatch.setattr(vr, "CHECKS", checks)
    return SuitePreset("t", "Test", "fake checks", ("t/b", "t/a", "t/c"))


@pytest.mark.parametrize("jobs", [1, 3])
def test_run_suite_sorts_and_counts(fake_suite, jobs):
    report = vr.run_suite(fake_suite, seed=5, jobs=jobs)
    assert [r.id for r in report.results] == ["t/a", "t/b", "t/c"]
    assert (report.passed, report.failed, report.skipped) == (1, 1, 1)
    assert not report.ok
    assert report.results[1].details == "seed 5"


def test_report_serialization(fake_suite):
    report = vr.run_suite(fake_suite)
    payload = report.to_dict()
    assert set(payload) == {"checks", "passed", "failed", "errors"}
    assert payload["checks"][0] == {
        "id": "t/a",
        "cite": "first",
        "status": "fail",
        "details": "no",
    }
    summary = report.summary()
    assert summary["failed_checks"] == ["t/a"]
    assert summary["skipped_checks"] == ["t/c"]
    assert summary["total"] == 3
    lines = report.lines()
    assert lines[0].startswith("FAIL    t/a")
    assert lines[-1] == "1 passed, 1 failed, 1 skipped"


def test_jobs_must_be_positive(fake_suite):
    with pytest.raises(ValueError):
        vr.run_suite(fake_suite, jobs=0)


@pytest.mark.parametrize("suite_id", [s.id for s in list_suites()])
def test_every_suite_passes(quick, suite_id):
    suite = get_suite(suite_id)
    report = vr.run_suite(suite, profile=quick)
    assert report.ok, report.lines()
    assert report.errors == 0
    assert len(report.results) == len(suite.checks)


def test_results_do_not_depend_on_jobs(quick):
    suite = get_suite("S")
    serial = vr.run_suite(suite, seed=3, profile=quick)
    parallel = vr.run_suite(suite, seed=3, profile=quick, jobs=4)
    assert serial.to_dict() == parallel.to_dict()

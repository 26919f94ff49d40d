import pytest

from services.verification import (
    GENUS0_P4_ERRATUM,
    GENUS1_ERRATUM,
    SUITE_NAMES,
    SUITES,
    _bound,
    run_suite,
)
from utils.exceptions import RingError, UnknownSuiteError
from utils.models import SuiteBounds, VerificationReport

SMALL_BOUNDS = {
    "prop-f": SuiteBounds(max_d=3),
    "prop-cj": SuiteBounds(max_d=3),
    "vhook": SuiteBounds(max_d=4),
    "mv-cutjoin": SuiteBounds(D=2),
    "mv-init": SuiteBounds(D=3),
    "mv-evidence": SuiteBounds(max_d=3),
    "mv-limit": SuiteBounds(max_d=3),
    "mv-golden": SuiteBounds(),
    "phi-cutjoin": SuiteBounds(D=3),
    "phi-golden": SuiteBounds(),
    "phi-routes": SuiteBounds(max_d=3),
    "s-identities": SuiteBounds(N=10),
    "s-conjecture": SuiteBounds(max_d=3),
    "cp-lemma": SuiteBounds(max_d=4),
    "parity": SuiteBounds(D=3),
    "conn": SuiteBounds(D=3),
}


def test_every_suite_has_small_bounds():
    assert set(SMALL_BOUNDS) == set(SUITES)
    assert SUITE_NAMES[0] == "all"


@pytest.mark.parametrize("name", sorted(SMALL_BOUNDS))
def test_suite_passes_at_small_bounds(name):
    report = run_suite(name, SMALL_BOUNDS[name])
    assert report.suite == name
    assert report.summary.total > 0
    assert report.ok, [case for case in report.cases if case.status == "fail"]


def test_golden_suite_carries_the_two_errata():
    report = run_suite("phi-golden")
    assert report.notes == [GENUS0_P4_ERRATUM, GENUS1_ERRATUM]


def test_conjecture_suite_is_report_only():
    report = run_suite("s-conjecture", SuiteBounds(max_d=2))
    assert report.summary.info == report.summary.total == 3


def test_bound_resolution():
    assert _bound(None, 10, 6, quick=False) == 10
    assert _bound(None, 10, 6, quick=True) == 6
    assert _bound(3, 10, 6, quick=True) == 3


def test_all_prefixes_suite_names(mocker):
    def one_case(status):
        def runner(bounds):
            report = VerificationReport(suite="fake")
            report.add("x", status)
            return report
        return runner

    mocker.patch.dict(SUITES, {"first": one_case("pass"), "second": one_case("fail")}, clear=True)
    report = run_suite("all", SuiteBounds(quick=True))
    assert [case.id for case in report.cases] == ["first/x", "second/x"]
    assert not report.ok


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("nope")


def test_crashing_suite_is_reported(mocker):
    mocker.patch("services.verification.check_golden", side_effect=RingError("boom"))
    report = run_suite("mv-golden")
    assert [case.id for case in report.cases] == ["error"]
    assert report.cases[0].witness == "RingError: boom"


@pytest.mark.slow
def test_quick_run_of_everything():
    report = run_suite("all", SuiteBounds(quick=True))
    assert report.ok
    assert report.summary.info > 0


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SMALL_BOUNDS))
def test_suite_passes_at_full_bounds(name):
    assert run_suite(name).ok

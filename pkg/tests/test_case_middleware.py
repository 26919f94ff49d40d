from utils.case_middleware import guarded_suite, verification_case
from utils.exceptions import RingError
from utils.models import VerificationReport


@verification_case(lambda a, b: f"{a}+{b}")
def sum_is_even(a, b):
    return (a + b) % 2 == 0, f"{a}+{b} is odd"


@verification_case("division")
def divides(a, b):
    return a // b > 0


def test_pass_and_fail_cases():
    report = VerificationReport(suite="demo")
    sum_is_even(report, 1, 3)
    sum_is_even(report, 1, 2)
    assert [case.id for case in report.cases] == ["1+3", "1+2"]
    assert report.cases[0].status == "pass"
    assert report.cases[0].witness is None
    assert report.cases[1].status == "fail"
    assert report.cases[1].witness == "1+2 is odd"
    assert not report.ok


def test_errors_become_failed_cases(mocker):
    warning = mocker.patch("utils.case_middleware.logger_service.warning")
    report = VerificationReport(suite="demo")
    case = divides(report, 1, 0)
    assert case.status == "fail"
    assert case.witness.startswith("ZeroDivisionError")
    warning.assert_called_once()


def test_guarded_suite_records_the_error(mocker):
    mocker.patch("utils.case_middleware.logger_service.error")

    @guarded_suite("broken")
    def broken_suite():
        raise RingError("not a unit")

    report = broken_suite()
    assert report.suite == "broken"
    assert [case.id for case in report.cases] == ["error"]
    assert report.cases[0].witness == "RingError: not a unit"


def test_guarded_suite_passes_reports_through():
    @guarded_suite("fine")
    def fine_suite():
        report = VerificationReport(suite="fine")
        report.add("only", "pass")
        return report

    assert fine_suite().summary.passed == 1

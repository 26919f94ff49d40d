import pytest
from pydantic import ValidationError

from utils.models import HurwitzQuery, SuiteBounds, VerificationReport


def test_report_counts():
    report = VerificationReport(suite="demo")
    report.add("a", "pass")
    report.check("b", False, witness="because")
    report.add("c", "info", note="report only")
    assert report.summary.model_dump() == {"passed": 1, "failed": 1, "info": 1, "total": 3}
    assert report.notes == ["report only"]
    assert not report.ok


def test_info_cases_never_fail_a_report():
    report = VerificationReport(suite="demo")
    report.add("only", "info")
    assert report.ok


def test_merge_prefixes_ids():
    inner = VerificationReport(suite="inner")
    inner.add("x", "pass")
    outer = VerificationReport(suite="all").merge(inner, prefix="inner")
    assert [case.id for case in outer.cases] == ["inner/x"]
    assert inner.cases[0].id == "x"


def test_json_round_trip_recounts():
    report = VerificationReport(suite="demo")
    report.check("a", True)
    report.check("b", False, witness="w")
    restored = VerificationReport.from_json(report.to_json())
    assert restored.summary == report.summary
    assert restored.cases == report.cases


def test_hurwitz_query_sorts_profiles():
    query = HurwitzQuery(h=0, d=3, profiles=[(1, 2), (3,)])
    assert query.profiles == [(2, 1), (3,)]


@pytest.mark.parametrize(
    "payload",
    [
        {"h": -1, "d": 2},
        {"h": 0, "d": 0},
        {"h": 0, "d": 3, "profiles": [(2, 2)]},
        {"h": 0, "d": 2, "profiles": [(3, -1)]},
    ],
)
def test_hurwitz_query_validation(payload):
    with pytest.raises(ValidationError):
        HurwitzQuery(**payload)


def test_suite_bounds():
    assert SuiteBounds().quick is False
    with pytest.raises(ValidationError):
        SuiteBounds(D=0)

import json

import pytest
from click.testing import CliRunner

from main import cli
from services.verification import SUITES
from utils.models import VerificationReport


@pytest.fixture
def runner():
    return CliRunner()


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "1.0.0" in result.stdout


# === HURWITZ ===
def test_hurwitz_series_coefficient(runner):
    result = runner.invoke(cli, ["hurwitz", "--eta", "2"])
    assert result.exit_code == 0
    assert result.stdout == "1/2*sinh(λ)\n"


def test_hurwitz_raw_coefficient(runner):
    result = runner.invoke(cli, ["hurwitz", "--eta", "2", "--raw"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"p2": {"x": "1/4", "x^-1": "-1/4"}}


@pytest.mark.parametrize(
    "args, expected",
    [
        (["--eta", "2", "--g", "0"], "1/2"),
        (["--eta", "1", "--g", "0"], "1"),
        (["--h", "1", "--eta", "1", "--g", "1"], "1"),
        (["--eta", "2", "--g", "0", "--series"], "1/2*sinh(λ)"),
        (["--eta", "1,1", "--g", "0", "--connected"], "1/2"),
        (["--eta", "1^3", "--g", "-2"], "1/6"),
        (["--profile", "2", "--profile", "2"], "1/2"),
    ],
)
def test_hurwitz_numbers(runner, args, expected):
    result = runner.invoke(cli, ["hurwitz", *args])
    assert result.exit_code == 0
    assert result.stdout.strip() == expected


def test_hurwitz_odes(runner):
    result = runner.invoke(cli, ["hurwitz", "--eta", "1,1", "--odes"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["d/dλ Phi[p2] = Phi[p1^2]", "d/dλ Phi[p1^2] = Phi[p2]"]


@pytest.mark.parametrize(
    "args",
    [
        ["--eta", "1", "--g", "-1"],
        ["--eta", "0"],
        ["--eta", "()"],
        [],
        ["--profile", "2", "--profile", "1"],
    ],
)
def test_hurwitz_usage_errors(runner, args):
    result = runner.invoke(cli, ["hurwitz", *args])
    assert result.exit_code == 2


# === MARINO-VAFA ===
def test_marinovafa_series(runner):
    result = runner.invoke(cli, ["marinovafa", "--D", "1"])
    assert result.exit_code == 0
    assert result.stdout == "p1: 1/(2 sin(λ/2))\n"


def test_marinovafa_golden_check(runner):
    result = runner.invoke(cli, ["marinovafa", "--check", "golden"])
    assert result.exit_code == 0
    assert "NOTE R(1,1) connected:" in result.stdout
    assert result.stdout.splitlines()[-1] == "mv-golden: 5 passed, 0 failed, 0 info, 5 total"


def test_marinovafa_failed_check_exits_one(runner, mocker):
    failing = VerificationReport(suite="mv-golden")
    failing.add("R(2)", "fail", witness="mismatch")
    mocker.patch("routes.marinovafa.check_golden", return_value=failing)
    result = runner.invoke(cli, ["marinovafa", "--check", "golden"])
    assert result.exit_code == 1
    assert "FAIL R(2)" in result.stdout


def test_marinovafa_json_check(runner):
    result = runner.invoke(cli, ["marinovafa", "--check", "vhook", "--max", "3", "--json"])
    assert result.exit_code == 0
    report = VerificationReport.from_json(result.stdout)
    assert report.ok
    assert report.summary.total == 6


# === CHARACTER TABLES AND CACHE ===
def test_chartable(runner, cache_dir):
    result = runner.invoke(cli, ["chartable", "3"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "classes: (3) (2,1) (1,1,1)"
    assert lines[2].endswith("-1  0  2")
    assert (cache_dir / "chartable_3.txt").exists()


def test_chartable_degree_bound(runner):
    assert runner.invoke(cli, ["chartable", "13"]).exit_code == 2
    assert runner.invoke(cli, ["chartable", "0"]).exit_code == 2


def test_cache_commands(runner, tmp_path):
    target = tmp_path / "elsewhere"
    result = runner.invoke(cli, ["--cache-dir", str(target), "cache", "path"])
    assert result.stdout.strip() == str(target)

    result = runner.invoke(cli, ["--cache-dir", str(target), "cache", "warm", "--max-d", "3"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "1 2 3"

    result = runner.invoke(cli, ["--cache-dir", str(target), "cache", "clear"])
    assert result.stdout.strip() == "removed 3"


def test_warm_without_disk_cache(runner, cache_dir):
    result = runner.invoke(cli, ["--no-disk-cache", "cache", "warm", "--max-d", "2"])
    assert result.exit_code == 0
    assert result.stdout.strip() == ""
    assert not cache_dir.exists()


# === VERIFY ===
def test_verify_json(runner):
    result = runner.invoke(cli, ["verify", "prop-f", "--max-d", "3", "--json"])
    assert result.exit_code == 0
    report = VerificationReport.from_json(result.stdout)
    assert report.suite == "prop-f"
    assert report.ok


def test_verify_summary_line(runner, tmp_path):
    result = runner.invoke(cli, ["verify", "cp-lemma", "--max-d", "3", "--cache-dir", str(tmp_path / "c")])
    assert result.exit_code == 0
    assert result.stdout.strip() == "cp-lemma: 6 passed, 0 failed, 0 info, 6 total"


def test_verify_failure_exits_one(runner, mocker):
    def failing(bounds):
        report = VerificationReport(suite="prop-f")
        report.add("broken", "fail", witness="1 != 2")
        return report

    mocker.patch.dict(SUITES, {"prop-f": failing})
    result = runner.invoke(cli, ["verify", "prop-f"])
    assert result.exit_code == 1
    assert result.stdout.splitlines()[:2] == ["FAIL broken", "  1 != 2"]


def test_verify_rejects_unknown_suites(runner):
    assert runner.invoke(cli, ["verify", "nope"]).exit_code == 2

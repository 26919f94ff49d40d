from pathlib import Path
from typing import Optional

import click

from services.logger import get_logger_service
from services.verification import SUITE_NAMES, run_suite
from utils.models import SuiteBounds, VerificationReport
from utils.runtime import configure_runtime, handle_errors

logger_service = get_logger_service()


def echo_report(report: VerificationReport, as_json: bool) -> None:
    """Report payload on stdout: JSON, or failures, notes and a summary line."""
    if as_json:
        click.echo(report.to_json())
        return
    for case in report.cases:
        if case.status == "fail":
            click.echo(f"FAIL {case.id}")
            if case.witness:
                click.echo(f"  {case.witness}")
    for case in report.cases:
        if case.note:
            click.echo(f"NOTE {case.id}: {case.note}")
    summary = report.summary
    click.echo(f"{report.suite}: {summary.passed} passed, {summary.failed} failed, {summary.info} info, {summary.total} total")


@click.command("verify")
@click.argument("suite", type=click.Choice(SUITE_NAMES), default="all")
@click.option("--max-d", "max_d", type=click.IntRange(min=1), default=None, help="Degree bound for per-partition sweeps.")
@click.option("--D", "D", type=click.IntRange(min=1), default=None, help="Truncation degree for series identities.")
@click.option("--N", "N", type=click.IntRange(min=1), default=None, help="lambda-order for the S identities.")
@click.option("--quick", is_flag=True, help="Desk-scale bounds.")
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes for sweeps.")
@click.option("--cache-dir", type=click.Path(file_okay=False, path_type=Path), default=None, help="Character-table cache directory.")
@handle_errors
def router(
    suite: str,
    max_d: Optional[int],
    D: Optional[int],
    N: Optional[int],
    quick: bool,
    as_json: bool,
    jobs: Optional[int],
    cache_dir: Optional[Path],
):
    """
    Run a verification suite; exit status 0 only if every case passes.

    SUITE is one of the registered suites, or `all`.
    """
    if jobs is not None or cache_dir is not None:
        configure_runtime(jobs=jobs, cache_dir=cache_dir)

    report = run_suite(suite, SuiteBounds(max_d=max_d, D=D, N=N, quick=quick))
    echo_report(report, as_json)
    if not report.ok:
        raise SystemExit(1)

import json
from typing import Optional

import click

from services.logger import get_logger_service
from services.marinovafa import (
    check_connected_forms,
    check_cutjoin_mv,
    check_evidence,
    check_golden,
    check_limit,
    check_rinit,
    check_vhook,
    r_bullet,
    r_connected,
)
from services.partitions import partitions_up_to
from utils.helpers import monomial_str
from utils.models import VerificationReport
from utils.runtime import handle_errors
from routes.verify import echo_report

logger_service = get_logger_service()

CHECKS = ("vhook", "cutjoin", "init", "evidence", "limit", "golden", "conn")


def run_check(check: str, D: int, max_size: int) -> VerificationReport:
    """Dispatch a --check selector to its Marino-Vafa verification."""
    if check == "vhook":
        return check_vhook(max_size)
    if check == "cutjoin":
        return check_cutjoin_mv(D)
    if check == "init":
        return check_rinit(D)
    if check == "evidence":
        report = VerificationReport(suite="mv-evidence")
        for n in range(1, max_size + 1):
            report.merge(check_evidence(n))
        return report
    if check == "limit":
        report = VerificationReport(suite="mv-limit")
        for mu in partitions_up_to(max_size):
            if mu:
                report.merge(check_limit(mu, max_size))
        return report
    if check == "golden":
        return check_golden()
    return check_connected_forms(D, min(D, 4))


@click.command("marinovafa")
@click.option("--D", "D", type=click.IntRange(min=1), default=2, show_default=True, help="Truncation degree in p.")
@click.option("--connected", is_flag=True, help="Print R = log R^bullet instead of R^bullet.")
@click.option("--check", type=click.Choice(CHECKS), default=None, help="Run a verification instead of printing.")
@click.option("--max", "max_size", type=click.IntRange(min=1), default=6, show_default=True, help="Size bound for vhook, evidence and limit checks.")
@click.option("--raw", is_flag=True, help="Print coefficients as (u, v) exponent maps.")
@click.option("--json", "as_json", is_flag=True, help="Print check reports as JSON.")
@handle_errors
def router(D: int, connected: bool, check: Optional[str], max_size: int, raw: bool, as_json: bool):
    """
    The Marino-Vafa series R(lambda; tau; p), or one of its checks.

    Coefficients are printed as quotients by sin(k*lambda/2) in u = exp(-i*lambda/4)
    and v = exp(i*tau*lambda).
    """
    if check:
        report = run_check(check, D, max_size)
        echo_report(report, as_json)
        if not report.ok:
            raise SystemExit(1)
        return

    series = (r_connected if connected else r_bullet)(D).series
    if raw:
        click.echo(json.dumps({monomial_str(mu): c.exponent_map() for mu, c in series}, indent=2))
        return
    for mu, c in series:
        if mu:
            click.echo(f"{monomial_str(mu)}: {c}")

import json
from typing import Optional, Tuple

import click
from pydantic import ValidationError

from services.hurwitz import burnside_bullet, hurwitz_number, phi_bullet, phi_circ, render_odes
from services.logger import get_logger_service
from utils.helpers import monomial_str, parse_eta
from utils.models import HurwitzQuery
from utils.runtime import handle_errors

logger_service = get_logger_service()


@click.command("hurwitz")
@click.option("--h", "h", type=click.IntRange(min=0), default=0, show_default=True, help="Genus of the base surface.")
@click.option("--eta", type=str, default=None, help="Ramification profile over the special point, e.g. 2,1,1 or 1^2,2.")
@click.option("--g", "g", type=int, default=None, help="Genus of the cover: print the single Hurwitz number.")
@click.option("--series", is_flag=True, help="Print the p_eta coefficient of the generating series.")
@click.option("--connected", is_flag=True, help="Use connected covers (log of the disconnected series).")
@click.option("--raw", is_flag=True, help="Print Laurent coefficients as an exponent map instead of sinh/cosh.")
@click.option("--odes", is_flag=True, help="Print the cut-and-join ODE system in degree |eta|.")
@click.option("--profile", "profiles", multiple=True, help="Burnside count with these profiles (repeatable).")
@handle_errors
def router(
    h: int,
    eta: Optional[str],
    g: Optional[int],
    series: bool,
    connected: bool,
    raw: bool,
    odes: bool,
    profiles: Tuple[str, ...],
):
    """
    Hurwitz numbers of covers of a genus-h surface.

    With --g, prints H^g_h(eta) (disconnected unless --connected). With --series or no
    --g, prints the coefficient of p_eta in Phi_h. With --profile, prints the Burnside count
    of covers with the given branch profiles.
    """
    if profiles:
        parsed = [parse_eta(text) for text in profiles]
        try:
            query = HurwitzQuery(h=h, d=parsed[0].size, profiles=[p.parts for p in parsed])
        except ValidationError as e:
            raise click.BadParameter(str(e.errors()[0]["msg"]), param_hint="--profile") from e
        logger_service.info(f"Burnside count for h={h}, d={query.d}, {len(parsed)} profile(s)")
        click.echo(str(burnside_bullet(query)))
        return

    if eta is None:
        raise click.UsageError("--eta is required unless --profile is given")
    partition = parse_eta(eta)
    if not partition:
        raise click.BadParameter("the profile must be nonempty", param_hint="--eta")

    if odes:
        click.echo(render_odes(partition.size))
        return

    if g is not None and not series:
        click.echo(str(hurwitz_number(g, h, partition, connected=connected)))
        return

    coefficient = (phi_circ if connected else phi_bullet)(h, partition.size).coefficient(partition)
    if raw:
        click.echo(json.dumps({monomial_str(partition): coefficient.exponent_map()}, indent=2))
    else:
        click.echo(coefficient.hyperbolic_str())

import click

from services.characters import get_character_service
from services.logger import get_logger_service
from utils.config import get_settings
from utils.helpers import render_table
from utils.runtime import handle_errors

logger_service = get_logger_service()


@click.command("chartable")
@click.argument("d", type=int)
@handle_errors
def router(d: int):
    """
    Print the character table of S_d.

    Rows are irreducible representations, columns conjugacy classes, both in canonical
    order (by size, then reverse-lexicographic). The table is cached on disk.
    """
    max_degree = get_settings().max_degree
    if not 1 <= d <= max_degree:
        raise click.BadParameter(f"d must be between 1 and {max_degree}", param_hint="D")

    logger_service.info(f"Building character table of S_{d}")
    table = get_character_service().table(d)
    labels = [str(nu) for nu in table.partitions]
    click.echo("classes: " + " ".join(labels))
    click.echo(render_table(table.rows(), labels))

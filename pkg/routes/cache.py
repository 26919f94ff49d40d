import click

from services.cache import get_cache_service
from services.characters import get_character_service
from services.logger import get_logger_service
from utils.config import get_settings
from utils.runtime import handle_errors

logger_service = get_logger_service()

router = click.Group("cache", help="Manage the character-table cache.")


@router.command("path")
def cache_path():
    """Print the cache directory."""
    click.echo(str(get_cache_service().directory))


@router.command("clear")
def cache_clear():
    """Delete every cached character table."""
    removed = get_cache_service().clear()
    click.echo(f"removed {removed}")


@router.command("warm")
@click.option("--max-d", "max_d", type=click.IntRange(min=1), default=None, help="Largest degree (defaults to the configured maximum).")
@handle_errors
def cache_warm(max_d):
    """Build and store the character tables of S_1 .. S_max_d."""
    max_d = max_d or get_settings().max_degree
    if not get_settings().use_disk_cache:
        logger_service.warning("Disk cache is disabled; tables are only built in memory")
    characters = get_character_service()
    for d in range(1, max_d + 1):
        characters.table(d)
    logger_service.success(f"Character tables up to d={max_d} are cached")
    click.echo(" ".join(str(d) for d in get_cache_service().cached_degrees()))

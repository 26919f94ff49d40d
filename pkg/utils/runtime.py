from functools import wraps
from typing import Callable

import click

from services.cache import configure_cache_service
from services.characters import configure_character_service
from services.logger import get_logger_service
from utils.config import Settings, configure_settings, get_settings
from utils.exceptions import CutjoinError, NoSuchCoverError, PartitionError, SizeMismatchError, UnknownSuiteError

logger_service = get_logger_service()

USAGE_ERRORS = (PartitionError, SizeMismatchError, NoSuchCoverError, UnknownSuiteError)


def configure_runtime(**overrides) -> Settings:
    """
    Apply CLI flags on top of the environment and rebind the shared services to them.

    Args:
        **overrides: Settings fields; None values fall through to the environment

    Returns:
        Settings: The active settings
    """
    settings = configure_settings(get_settings(**overrides))
    logger_service.level = settings.log_level
    cache = configure_cache_service(settings)
    configure_character_service(settings, cache)
    logger_service.debug(f"Settings: cache_dir={settings.cache_dir}, jobs={settings.jobs}, disk cache={settings.use_disk_cache}")
    return settings


def handle_errors(func: Callable) -> Callable:
    """
    Decorator for commands: domain errors become click errors.

    Bad input (malformed partitions, size mismatches, r < 0, unknown suites) exits with
    status 2 like any usage error; other domain errors exit with status 1.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except USAGE_ERRORS as e:
            raise click.UsageError(str(e)) from e
        except CutjoinError as e:
            logger_service.error(f"{type(e).__name__}: {e}")
            raise click.ClickException(str(e)) from e

    return wrapper

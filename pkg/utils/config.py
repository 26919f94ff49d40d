import os
from functools import lru_cache
from pathlib import Path
from typing import Literal, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


def default_cache_dir() -> Path:
    """Per-user cache directory, honouring XDG_CACHE_HOME."""
    base = os.getenv("XDG_CACHE_HOME")
    root = Path(base) if base else Path.home() / ".cache"
    return root / "cutjoin"


class Settings(BaseSettings):
    """
    Runtime configuration.

    Values come from CUTJOIN_* environment variables (or a .env file); explicit
    keyword overrides, which is how CLI flags are passed in, win over both.
    """

    model_config = SettingsConfigDict(
        env_prefix="CUTJOIN_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    cache_dir: Path = Field(default_factory=default_cache_dir)
    max_degree: int = Field(default=12, ge=1)
    jobs: int = Field(default=1, ge=1)
    use_disk_cache: bool = True
    log_level: Literal["debug", "info", "warning", "error"] = "info"

    @field_validator("cache_dir", mode="after")
    @classmethod
    def _expand_cache_dir(cls, value: Path) -> Path:
        return value.expanduser()


_active_settings: Optional[Settings] = None


@lru_cache(maxsize=1)
def _cached_settings() -> Settings:
    return Settings()


def get_settings(**overrides) -> Settings:
    """
    Get the settings instance.

    Args:
        **overrides: Field values that take precedence over the environment.
            Keys whose value is None are ignored, so unset CLI flags fall through.

    Returns:
        Settings: The cached instance when there is nothing to override,
            otherwise a fresh instance with the overrides applied.
    """
    overrides = {key: value for key, value in overrides.items() if value is not None}
    if not overrides:
        return _active_settings or _cached_settings()
    return Settings(**overrides)


def configure_settings(settings: Settings) -> Settings:
    """Make explicit settings (built from CLI flags) the process-wide instance."""
    global _active_settings
    _active_settings = settings
    return settings


def reset_settings() -> None:
    """Drop the cached and configured settings (used after the environment changes)."""
    global _active_settings
    _active_settings = None
    _cached_settings.cache_clear()

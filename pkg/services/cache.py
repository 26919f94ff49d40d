import os
import tempfile
from pathlib import Path
from typing import List, Optional

from services.logger import get_logger_service
from utils.config import Settings, get_settings
from utils.exceptions import CacheFormatError

logger_service = get_logger_service()

HEADER_PREFIX = "chartable v1 d="


class CacheService:
    """
    Disk store for character tables.

    One plain-text file per degree:
    - header line `chartable v1 d=<d>`
    - one line per irreducible representation (canonical order) with the
      space-separated character values on the classes (canonical order)

    Writes go through a temporary file and an atomic rename, so concurrent readers
    always see a complete file and the last writer wins.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    @property
    def directory(self) -> Path:
        return self.settings.cache_dir

    def path_for(self, d: int) -> Path:
        return self.directory / f"chartable_{d}.txt"

    def load_table(self, d: int) -> Optional[List[List[int]]]:
        """
        Read the cached table for degree d.

        Args:
            d: Degree of the symmetric group

        Returns:
            Optional[List[List[int]]]: Rows of the table, or None if nothing is cached

        Raises:
            CacheFormatError: If the file exists but is malformed or belongs to another degree
        """
        path = self.path_for(d)
        if not path.exists():
            return None

        try:
            lines = path.read_text(encoding="utf-8").splitlines()
        except OSError as e:
            raise CacheFormatError(f"Cannot read {path}: {e}") from e

        if not lines or lines[0].strip() != f"{HEADER_PREFIX}{d}":
            raise CacheFormatError(f"{path} has header {lines[0] if lines else '<empty>'!r}, expected degree {d}")

        try:
            rows = [[int(value) for value in line.split()] for line in lines[1:] if line.strip()]
        except ValueError as e:
            raise CacheFormatError(f"{path} contains a non-integer entry: {e}") from e

        if any(len(row) != len(rows) for row in rows):
            raise CacheFormatError(f"{path} does not hold a square table")

        logger_service.debug(f"Loaded character table d={d} from {path}")
        return rows

    def store_table(self, d: int, rows: List[List[int]]) -> Path:
        """
        Write the table for degree d atomically.

        Args:
            d: Degree of the symmetric group
            rows: Table rows in canonical order

        Returns:
            Path: Location of the cache file
        """
        path = self.path_for(d)
        tmp_name = None
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            payload = "\n".join([f"{HEADER_PREFIX}{d}"] + [" ".join(str(v) for v in row) for row in rows]) + "\n"
            fd, tmp_name = tempfile.mkstemp(prefix=f".chartable_{d}.", dir=self.directory)
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(payload)
            os.replace(tmp_name, path)
            tmp_name = None
            logger_service.debug(f"Stored character table d={d} at {path}")
            return path
        except OSError as e:
            logger_service.error(f"Error storing character table d={d}: {str(e)}")
            raise
        finally:
            # still set only when the write failed
            if tmp_name is not None:
                try:
                    os.unlink(tmp_name)
                except FileNotFoundError:
                    pass

    def cached_degrees(self) -> List[int]:
        if not self.directory.exists():
            return []
        degrees = []
        for path in self.directory.glob("chartable_*.txt"):
            suffix = path.stem.removeprefix("chartable_")
            if suffix.isdigit():
                degrees.append(int(suffix))
        return sorted(degrees)

    def clear(self) -> int:
        """Delete every cached table; returns how many files were removed."""
        removed = 0
        for d in self.cached_degrees():
            try:
                self.path_for(d).unlink()
                removed += 1
            except FileNotFoundError:
                pass
        logger_service.info(f"Removed {removed} cached character table(s) from {self.directory}")
        return removed


cache_service: Optional[CacheService] = None
def get_cache_service() -> CacheService:
    """
    Dependency to get the cache service instance.

    Returns:
        CacheService: Instance bound to the current settings
    """
    global cache_service
    if cache_service is None:
        cache_service = CacheService()
    return cache_service


def configure_cache_service(settings: Settings) -> CacheService:
    """Rebind the cache service to explicit settings (CLI flags)."""
    global cache_service
    cache_service = CacheService(settings)
    return cache_service

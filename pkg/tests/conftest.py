import pytest

from utils.config import reset_settings
from utils.runtime import configure_runtime


@pytest.fixture(autouse=True)
def isolated_runtime(tmp_path, monkeypatch):
    """Every test gets its own cache directory and freshly bound services."""
    monkeypatch.setenv("CUTJOIN_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.delenv("CUTJOIN_JOBS", raising=False)
    monkeypatch.delenv("CUTJOIN_USE_DISK_CACHE", raising=False)
    reset_settings()
    settings = configure_runtime()
    yield settings
    reset_settings()


@pytest.fixture
def cache_dir(isolated_runtime):
    return isolated_runtime.cache_dir

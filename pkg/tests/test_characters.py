from math import factorial

import numpy as np
import pytest

from services.cache import CacheService
from services.characters import CharacterService, character_value, get_character_service
from services.partitions import Partition, enumerate_partitions
from utils.config import get_settings
from utils.exceptions import SizeMismatchError


@pytest.fixture
def service(cache_dir):
    settings = get_settings(cache_dir=cache_dir)
    return CharacterService(cache=CacheService(settings), settings=settings)


def test_small_tables(service):
    assert service.table(1).rows() == [[1]]
    assert service.table(2).rows() == [[1, 1], [-1, 1]]
    assert service.table(3).rows() == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]


@pytest.mark.parametrize("d", range(1, 11))
def test_column_orthogonality(service, d):
    table = service.table(d)
    expected = np.diag([mu.z for mu in enumerate_partitions(d)])
    assert np.array_equal(table.column_gram(), expected)


@pytest.mark.parametrize("d", range(1, 11))
def test_row_orthogonality(service, d):
    table = service.table(d)
    partitions = enumerate_partitions(d)
    for nu in partitions:
        for rho in partitions:
            total = sum(a * b * mu.class_size for a, b, mu in zip(table.row(nu), table.row(rho), partitions))
            assert total == (factorial(d) if nu == rho else 0)
    assert table.is_orthogonal()


@pytest.mark.parametrize("d", range(1, 8))
def test_identity_column_is_dimension(service, d):
    table = service.table(d)
    assert table.column(Partition.one_column(d)) == [service.dim_rep(nu) for nu in enumerate_partitions(d)]
    assert table.column(Partition.one_row(d)) == [
        (-1) ** (nu.length - 1) if set(nu.parts[1:]) <= {1} else 0 for nu in enumerate_partitions(d)
    ]


def test_table_is_read_only(service):
    table = service.table(3)
    with pytest.raises(ValueError):
        table.table[0, 0] = 5


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        character_value(Partition.of(2), Partition.of(1))


def test_central_characters():
    characters = get_character_service()
    assert characters.f(Partition.of(3), Partition.of(3)) == 2
    assert characters.f(Partition.of(2, 1), Partition.of(3)) == -1
    for nu in enumerate_partitions(5):
        assert characters.f(nu, Partition.of(2, 1, 1, 1)) == characters.f2(nu) == nu.kappa // 2


@pytest.mark.parametrize("d", range(1, 7))
def test_prop_f(d):
    report = get_character_service().verify_prop_f(d)
    assert report.ok
    assert report.summary.total > 0


@pytest.mark.slow
def test_prop_f_full_bounds():
    for d in range(7, 11):
        assert get_character_service().verify_prop_f(d).ok


def test_table_is_written_then_reused(service, cache_dir, mocker):
    service.table(4)
    assert (cache_dir / "chartable_4.txt").exists()

    fresh = CharacterService(cache=service.cache, settings=service.settings)
    compute = mocker.patch("services.characters._character_row", side_effect=AssertionError("recomputed"))
    assert fresh.table(4).rows() == service.table(4).rows()
    compute.assert_not_called()


def test_corrupt_cache_is_rebuilt(service, cache_dir, mocker):
    cache_dir.mkdir(parents=True, exist_ok=True)
    (cache_dir / "chartable_3.txt").write_text("chartable v1 d=5\n1\n", encoding="utf-8")
    warning = mocker.patch("services.characters.logger_service.warning")

    assert service.table(3).rows() == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
    warning.assert_called_once()
    assert (cache_dir / "chartable_3.txt").read_text(encoding="utf-8").startswith("chartable v1 d=3")


def test_cached_table_with_wrong_values_is_rebuilt(service, cache_dir, mocker):
    cache_dir.mkdir(parents=True, exist_ok=True)
    (cache_dir / "chartable_2.txt").write_text("chartable v1 d=2\n1 1\n1 1\n", encoding="utf-8")
    warning = mocker.patch("services.characters.logger_service.warning")

    assert service.table(2).rows() == [[1, 1], [-1, 1]]
    warning.assert_called_once()
    assert service.cache.load_table(2) == [[1, 1], [-1, 1]]


def test_disk_cache_can_be_disabled(cache_dir):
    settings = get_settings(cache_dir=cache_dir, use_disk_cache=False)
    service = CharacterService(cache=CacheService(settings), settings=settings)
    service.table(3)
    assert not (cache_dir / "chartable_3.txt").exists()

"""
Irreducible characters of the symmetric groups.

Character values come from the Murnaghan-Nakayama rule on beta-sets: a partition nu
of length l is encoded by beta_i = nu_i + (l - 1 - i), and removing a border strip of
size k moves one bead from b to b - k. The sign of the strip is (-1)^(number of beads
jumped over).
"""

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Dict, Optional

import numpy as np

from services.cache import CacheService, get_cache_service
from services.logger import get_logger_service
from services.partitions import Partition, canonical_index, enumerate_partitions
from utils.config import Settings, get_settings
from utils.exceptions import CacheFormatError, CharacterConsistencyError, SizeMismatchError
from utils.helpers import run_parallel
from utils.models import VerificationReport

logger_service = get_logger_service()


@lru_cache(maxsize=None)
def _murnaghan_nakayama(beta: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    k, rest = cycles[0], cycles[1:]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        moved = tuple(sorted((target if c == b else c for c in beta), reverse=True))
        value = _murnaghan_nakayama(moved, rest)
        total += -value if jumped % 2 else value
    return total


def _beta_set(nu: Partition) -> tuple[int, ...]:
    l = nu.length
    return tuple(part + l - 1 - i for i, part in enumerate(nu.parts))


def character_value(nu: Partition, mu: Partition) -> int:
    """chi_nu(C(mu)); border strips follow the parts of mu, largest first."""
    if nu.size != mu.size:
        raise SizeMismatchError(f"|nu| = {nu.size} but |mu| = {mu.size}")
    return _murnaghan_nakayama(_beta_set(nu), mu.parts)


def _character_row(nu: Partition) -> list[int]:
    return [character_value(nu, mu) for mu in enumerate_partitions(nu.size)]


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Exact table chi_nu(mu) of S_d; rows nu and columns mu in canonical order."""

    d: int
    table: np.ndarray = field(repr=False)

    def __post_init__(self):
        size = len(enumerate_partitions(self.d))
        if self.table.shape != (size, size):
            raise SizeMismatchError(f"Character table of S_{self.d} must be {size}x{size}, got {self.table.shape}")
        self.table.setflags(write=False)

    @property
    def partitions(self) -> tuple[Partition, ...]:
        return enumerate_partitions(self.d)

    def value(self, nu: Partition, mu: Partition) -> int:
        if nu.size != self.d or mu.size != self.d:
            raise SizeMismatchError(f"Partitions {nu} and {mu} do not both partition {self.d}")
        return int(self.table[canonical_index(nu), canonical_index(mu)])

    def row(self, nu: Partition) -> list[int]:
        return [int(v) for v in self.table[canonical_index(nu)]]

    def column(self, mu: Partition) -> list[int]:
        return [int(v) for v in self.table[:, canonical_index(mu)]]

    def rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.table]

    def column_gram(self) -> np.ndarray:
        """sum_nu chi_nu(mu) chi_nu(rho); diagonal z_mu for a correct table."""
        return self.table.T @ self.table

    def row_gram(self) -> np.ndarray:
        """sum_mu |C(mu)| chi_nu(mu) chi_rho(mu); d! times the identity for a correct table."""
        class_sizes = np.array([mu.class_size for mu in self.partitions], dtype=np.int64)
        return (self.table * class_sizes) @ self.table.T

    def is_orthogonal(self) -> bool:
        """Both orthogonality relations, exactly."""
        z = np.diag([mu.z for mu in self.partitions])
        identity = factorial(self.d) * np.eye(len(self.partitions), dtype=np.int64)
        return np.array_equal(self.column_gram(), z) and np.array_equal(self.row_gram(), identity)


def _as_table(d: int, rows: list[list[int]]) -> CharacterTable:
    return CharacterTable(d, np.array(rows, dtype=np.int64))


@dataclass(frozen=True)
class CentralCharacter:
    """f_nu(mu): the scalar by which the class sum of C(mu) acts on R_nu."""

    nu: Partition
    mu: Partition
    value: int

    def __int__(self) -> int:
        return self.value


class CharacterService:
    """
    Character tables, dimensions and central characters.

    Tables are kept in memory per degree and, when enabled, persisted through the
    CacheService so that large degrees are computed once per machine.
    """

    def __init__(self, cache: Optional[CacheService] = None, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()
        self.cache = cache
        self._tables: Dict[int, CharacterTable] = {}

    def _cache(self) -> CacheService:
        return self.cache or get_cache_service()

    # === CHARACTERS ===
    def character(self, nu: Partition, mu: Partition) -> int:
        """
        Exact character value chi_nu(C(mu)).

        Args:
            nu: Irreducible representation
            mu: Conjugacy class (cycle type)

        Returns:
            int: Character value

        Raises:
            SizeMismatchError: If |nu| != |mu|
        """
        if nu.size in self._tables:
            if nu.size != mu.size:
                raise SizeMismatchError(f"|nu| = {nu.size} but |mu| = {mu.size}")
            return self._tables[nu.size].value(nu, mu)
        return character_value(nu, mu)

    def dim_rep(self, nu: Partition) -> int:
        """dim R_nu by the hook-length formula |nu|!/prod h(e)."""
        return factorial(nu.size) // nu.hook_product

    def central_character(self, nu: Partition, mu: Partition) -> CentralCharacter:
        """
        f_nu(mu) = |C(mu)| chi_nu(mu) / dim R_nu.

        Raises:
            SizeMismatchError: If |nu| != |mu|
            CharacterConsistencyError: If the value is not an integer
        """
        numerator = mu.class_size * self.character(nu, mu)
        dim = self.dim_rep(nu)
        if numerator % dim:
            logger_service.error(f"Non-integral central character f_{nu}({mu}) = {numerator}/{dim}")
            raise CharacterConsistencyError(f"f_{nu}({mu}) = {numerator}/{dim} is not an integer")
        return CentralCharacter(nu=nu, mu=mu, value=numerator // dim)

    def f(self, nu: Partition, mu: Partition) -> int:
        return self.central_character(nu, mu).value

    def f2(self, nu: Partition) -> int:
        """f_nu on the transposition class, which equals kappa_nu / 2."""
        return nu.kappa // 2

    # === TABLES ===
    def table(self, d: int) -> CharacterTable:
        """
        Character table of S_d, from memory, disk cache or a fresh computation.

        Args:
            d: Degree, 0 <= d

        Returns:
            CharacterTable: Immutable table
        """
        if d in self._tables:
            return self._tables[d]

        rows = None
        if self.settings.use_disk_cache and d > 0:
            try:
                rows = self._cache().load_table(d)
            except CacheFormatError as e:
                logger_service.warning(f"Ignoring cached table: {e}")
                rows = None
            if rows is not None and len(rows) != len(enumerate_partitions(d)):
                logger_service.warning(f"Cached table for d={d} has {len(rows)} rows, rebuilding")
                rows = None
            if rows is not None and not _as_table(d, rows).is_orthogonal():
                logger_service.warning(f"Cached table for d={d} fails orthogonality, rebuilding")
                rows = None

        if rows is None:
            logger_service.debug(f"Computing character table of S_{d}")
            rows = run_parallel(_character_row, enumerate_partitions(d), self.settings.jobs)
            if self.settings.use_disk_cache and d > 0:
                try:
                    self._cache().store_table(d, rows)
                except OSError as e:
                    logger_service.warning(f"Could not cache character table d={d}: {e}")

        table = _as_table(d, rows)
        self._tables[d] = table
        return table

    # === VERIFICATION ===
    def verify_prop_f(self, d: int) -> VerificationReport:
        """
        Integrality of f_nu(mu), the sign rule under conjugation and f_nu(2) = kappa_nu/2.

        Args:
            d: Degree, d >= 1

        Returns:
            VerificationReport: One case per (property, nu, mu)
        """
        report = VerificationReport(suite="prop-f")
        partitions = enumerate_partitions(d)
        transposition = Partition.transposition(d) if d >= 2 else None

        for nu in partitions:
            for mu in partitions:
                try:
                    value = self.f(nu, mu)
                except CharacterConsistencyError as e:
                    report.add(f"integral/{nu}/{mu}", "fail", witness=str(e))
                    continue
                report.add(f"integral/{nu}/{mu}", "pass")
                conjugate = self.f(nu.conjugate, mu)
                report.check(
                    f"conjugate/{nu}/{mu}",
                    conjugate == mu.sign * value,
                    witness=f"f_{nu.conjugate}({mu}) = {conjugate}, sign*f_{nu}({mu}) = {mu.sign * value}",
                )
            if transposition is not None:
                value = self.f(nu, transposition)
                report.check(
                    f"kappa/{nu}",
                    2 * value == nu.kappa,
                    witness=f"f_{nu}(2) = {value}, kappa/2 = {nu.kappa}/2",
                )
        return report


_character_service: Optional[CharacterService] = None
def get_character_service() -> CharacterService:
    """
    Dependency to get the character service instance.

    Returns:
        CharacterService: Shared instance; its tables are read-only once built
    """
    global _character_service
    if _character_service is None:
        _character_service = CharacterService()
    return _character_service


def configure_character_service(settings: Settings, cache: Optional[CacheService] = None) -> CharacterService:
    """Rebind the shared character service to explicit settings (CLI flags)."""
    global _character_service
    _character_service = CharacterService(cache=cache, settings=settings)
    return _character_service

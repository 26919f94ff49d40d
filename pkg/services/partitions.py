"""
Integer partitions and their statistics.

A partition doubles as a conjugacy class of S_d (cycle type) and as an irreducible
representation (Young diagram). Everything here is an immutable value, so partitions
can be used as dictionary keys and shipped to worker processes freely.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from itertools import product
from math import comb, factorial
from operator import mul
from typing import Iterable, Iterator, Mapping

from utils.exceptions import PartitionError
from utils.models import PartitionStatistics


@dataclass(frozen=True)
class Partition:
    """
    Weakly decreasing tuple of positive parts. The empty partition is the unique
    partition of 0 and indexes constant terms of p-series.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for part in parts:
            if not isinstance(part, int) or isinstance(part, bool) or part <= 0:
                raise PartitionError(f"Parts must be positive integers, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"Parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    # === CONSTRUCTION ===
    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_multiplicities(cls, multiplicities: Mapping[int, int]) -> "Partition":
        parts: list[int] = []
        for value in sorted(multiplicities, reverse=True):
            parts.extend([value] * multiplicities[value])
        return cls(tuple(parts))

    @classmethod
    def one_row(cls, d: int) -> "Partition":
        return cls((d,)) if d > 0 else cls()

    @classmethod
    def one_column(cls, d: int) -> "Partition":
        return cls((1,) * d)

    @classmethod
    def transposition(cls, d: int) -> "Partition":
        """Cycle type (2, 1^(d-2)) of a transposition in S_d."""
        if d < 2:
            raise PartitionError(f"S_{d} has no transpositions")
        return cls((2,) + (1,) * (d - 2))

    # === BASIC DATA ===
    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    @cached_property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        """m_j(mu) for every part j that occurs."""
        return dict(sorted(Counter(self.parts).items(), reverse=True))

    def multiplicity(self, j: int) -> int:
        return self.multiplicities.get(j, 0)

    @cached_property
    def sort_key(self) -> tuple:
        """Size first, then reverse-lexicographic within a size."""
        return (self.size, tuple(-part for part in self.parts))

    # === STATISTICS ===
    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for part in self.parts if part > j) for j in range(self.parts[0])))

    @cached_property
    def aut_order(self) -> int:
        """|Aut(mu)| = prod_j m_j(mu)!"""
        return reduce(mul, (factorial(m) for m in self.multiplicities.values()), 1)

    @cached_property
    def z(self) -> int:
        """Order of the centralizer of a permutation of cycle type mu."""
        return reduce(mul, (factorial(m) * j**m for j, m in self.multiplicities.items()), 1)

    @cached_property
    def n(self) -> int:
        """n(mu) = sum_i (i-1) mu_i."""
        return sum(i * part for i, part in enumerate(self.parts))

    @cached_property
    def kappa(self) -> int:
        """kappa_mu = sum_i mu_i (mu_i - 2i + 1); always even."""
        return sum(part * (part - 2 * i - 1) for i, part in enumerate(self.parts))

    @property
    def sign(self) -> int:
        """Sign of any permutation of cycle type mu."""
        return -1 if (self.size - self.length) % 2 else 1

    @cached_property
    def hooks(self) -> tuple[int, ...]:
        """Hook lengths of all boxes, largest first."""
        columns = self.conjugate.parts
        return tuple(sorted(
            (row - j + columns[j] - i - 1 for i, row in enumerate(self.parts) for j in range(row)),
            reverse=True,
        ))

    @cached_property
    def hook_product(self) -> int:
        return reduce(mul, self.hooks, 1)

    @property
    def class_size(self) -> int:
        """|C(mu)| = |mu|!/z_mu."""
        return factorial(self.size) // self.z

    # === MULTISET OPERATIONS ===
    def merge(self, other: "Partition") -> "Partition":
        """Multiset union; p_mu * p_nu = p_{mu merge nu}."""
        if not other.parts:
            return self
        if not self.parts:
            return other
        return Partition(tuple(sorted(self.parts + other.parts, reverse=True)))

    def remove(self, *values: int) -> "Partition":
        """Drop one occurrence of each value."""
        counts = Counter(self.parts)
        for value in values:
            if counts[value] <= 0:
                raise PartitionError(f"{value} is not a part of {self}")
            counts[value] -= 1
        return Partition.from_multiplicities({j: m for j, m in counts.items() if m > 0})

    def submultisets(self) -> Iterator[tuple["Partition", "Partition"]]:
        """All (sub, complement) splittings of the multiset of parts, the trivial ones included."""
        values = list(self.multiplicities)
        for counts in product(*(range(self.multiplicities[j] + 1) for j in values)):
            chosen = {j: c for j, c in zip(values, counts) if c}
            rest = {j: self.multiplicities[j] - c for j, c in zip(values, counts) if self.multiplicities[j] - c}
            yield Partition.from_multiplicities(chosen), Partition.from_multiplicities(rest)


@dataclass(frozen=True)
class NeighborSet:
    """Partitions reached from a cycle type by one transposition, with multiplicities."""

    joins: tuple[tuple[Partition, int], ...]
    cuts: tuple[tuple[Partition, int], ...]

    @property
    def total(self) -> int:
        return sum(m for _, m in self.joins) + sum(m for _, m in self.cuts)

    def as_dict(self) -> dict[Partition, int]:
        merged: dict[Partition, int] = {}
        for partner, m in self.joins + self.cuts:
            merged[partner] = merged.get(partner, 0) + m
        return merged


# === ENUMERATION ===
def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(d: int) -> tuple[Partition, ...]:
    """
    All partitions of d in canonical (reverse-lexicographic) order.

    Args:
        d: Non-negative integer

    Returns:
        tuple[Partition, ...]: (d), (d-1,1), ..., (1^d); the empty partition for d = 0
    """
    if d < 0:
        raise PartitionError(f"Cannot partition a negative integer: {d}")
    return tuple(Partition(parts) for parts in _partitions_bounded(d, d))


def partitions_up_to(D: int) -> tuple[Partition, ...]:
    """Partitions of 0, 1, ..., D, each block in canonical order."""
    return tuple(mu for d in range(D + 1) for mu in enumerate_partitions(d))


def canonical_index(mu: Partition) -> int:
    """Position of mu in enumerate_partitions(|mu|)."""
    return _index_table(mu.size)[mu]


@lru_cache(maxsize=None)
def _index_table(d: int) -> dict[Partition, int]:
    return {mu: i for i, mu in enumerate(enumerate_partitions(d))}


# === STATISTICS ===
def statistics(mu: Partition) -> PartitionStatistics:
    """
    Collect the classical statistics of a partition.

    Args:
        mu: Partition

    Returns:
        PartitionStatistics: z, kappa, n, |Aut|, conjugate, hook multiset and hook product
    """
    return PartitionStatistics(
        parts=mu.parts,
        size=mu.size,
        length=mu.length,
        z=mu.z,
        kappa=mu.kappa,
        n=mu.n,
        aut_order=mu.aut_order,
        conjugate=mu.conjugate.parts,
        hooks=mu.hooks,
        hook_product=mu.hook_product,
    )


def n_from_conjugate(mu: Partition) -> int:
    """n(mu) computed as sum_i C(mu'_i, 2)."""
    return sum(comb(column, 2) for column in mu.conjugate.parts)


# === CUTS AND JOINS ===
def cut_join_neighbors(mu: Partition) -> NeighborSet:
    """
    Cycle types obtained by multiplying a permutation of type mu by every transposition.

    Joining an i-cycle with a j-cycle happens i*j*m_i*m_j ways (i < j) or
    i^2 m_i (m_i - 1)/2 ways (i = j); cutting an (i+j)-cycle happens (i+j) m_{i+j}
    ways (i < j) or i m_{2i} ways (i = j). The multiplicities add up to C(|mu|, 2).

    Args:
        mu: Non-empty partition

    Returns:
        NeighborSet: join and cut partners in canonical order

    Raises:
        PartitionError: If mu is empty (S_0 has no transpositions to act with)
    """
    if not mu:
        raise PartitionError("The empty partition is not a conjugacy class with transpositions")

    m = mu.multiplicities
    values = sorted(m)
    joins: dict[Partition, int] = {}
    cuts: dict[Partition, int] = {}

    for a, i in enumerate(values):
        for j in values[a:]:
            if i < j:
                count = i * j * m[i] * m[j]
            else:
                count = i * i * m[i] * (m[i] - 1) // 2
            if count:
                partner = mu.remove(i, j).merge(Partition((i + j,)))
                joins[partner] = joins.get(partner, 0) + count

    for s in values:
        for i in range(1, s // 2 + 1):
            j = s - i
            count = s * m[s] if i < j else i * m[s]
            partner = mu.remove(s).merge(Partition((j, i)))
            cuts[partner] = cuts.get(partner, 0) + count

    def ordered(found: dict[Partition, int]) -> tuple[tuple[Partition, int], ...]:
        return tuple(sorted(found.items(), key=lambda item: item[0].sort_key))

    return NeighborSet(joins=ordered(joins), cuts=ordered(cuts))

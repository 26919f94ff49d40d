from collections import Counter
from math import comb, factorial

import pytest
from sympy.combinatorics import Permutation

from services.partitions import (
    Partition,
    canonical_index,
    cut_join_neighbors,
    enumerate_partitions,
    n_from_conjugate,
    partitions_up_to,
    statistics,
)
from utils.exceptions import PartitionError

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_enumeration_counts():
    assert [len(enumerate_partitions(d)) for d in range(9)] == PARTITION_COUNTS


def test_canonical_order():
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert enumerate_partitions(0) == (Partition(),)
    assert [canonical_index(p) for p in enumerate_partitions(5)] == list(range(7))


def test_partitions_up_to_is_graded():
    sizes = [mu.size for mu in partitions_up_to(4)]
    assert sizes == sorted(sizes)
    assert len(sizes) == sum(PARTITION_COUNTS[:5])


def test_negative_degree_raises():
    with pytest.raises(PartitionError):
        enumerate_partitions(-1)


def test_invalid_parts_raise():
    with pytest.raises(PartitionError):
        Partition((1, 2))
    with pytest.raises(PartitionError):
        Partition((2, 0))
    assert Partition.of(1, 2, 1).parts == (2, 1, 1)


def test_statistics_of_three_one():
    stats = statistics(Partition.of(3, 1))
    assert stats.z == 3
    assert stats.kappa == 4
    assert stats.n == 1
    assert stats.aut_order == 1
    assert stats.conjugate == (2, 1, 1)
    assert stats.hooks == (4, 2, 1, 1)
    assert stats.hook_product == 8


def test_classical_identities():
    for d in range(1, 9):
        partitions = enumerate_partitions(d)
        assert sum(mu.class_size for mu in partitions) == factorial(d)
        assert sum((factorial(d) // nu.hook_product) ** 2 for nu in partitions) == factorial(d)
        for nu in partitions:
            assert nu.n == n_from_conjugate(nu)
            assert nu.kappa == 2 * (nu.conjugate.n - nu.n)
            assert nu.conjugate.conjugate == nu
            assert nu.kappa % 2 == 0


def test_multiset_operations():
    mu = Partition.of(2, 2, 1)
    assert mu.merge(Partition.of(3)) == Partition.of(3, 2, 2, 1)
    assert mu.remove(2, 1) == Partition.of(2)
    with pytest.raises(PartitionError):
        mu.remove(3)
    assert len(list(mu.submultisets())) == 3 * 2
    assert mu.multiplicities == {2: 2, 1: 1}


def test_neighbors_of_small_classes():
    assert cut_join_neighbors(Partition.of(2)).as_dict() == {Partition.of(1, 1): 1}
    assert cut_join_neighbors(Partition.of(1, 1)).as_dict() == {Partition.of(2): 1}
    neighbors = cut_join_neighbors(Partition.of(3))
    assert neighbors.joins == ()
    assert neighbors.cuts == ((Partition.of(2, 1), 3),)


def test_neighbor_totals():
    for mu in partitions_up_to(7):
        if mu:
            assert cut_join_neighbors(mu).total == comb(mu.size, 2)


def test_empty_partition_has_no_neighbors():
    with pytest.raises(PartitionError):
        cut_join_neighbors(Partition())


def _permutation_of_type(mu: Partition) -> Permutation:
    cycles, start = [], 0
    for part in mu.parts:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation(cycles, size=mu.size)


def _cycle_type(perm: Permutation) -> Partition:
    return Partition.from_multiplicities(perm.cycle_structure)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_neighbors_match_brute_force(d):
    for mu in enumerate_partitions(d):
        sigma = _permutation_of_type(mu)
        histogram = Counter(
            _cycle_type(sigma * Permutation(i, j, size=d)) for i in range(d) for j in range(i + 1, d)
        )
        assert dict(histogram) == cut_join_neighbors(mu).as_dict()


def test_transposition_class():
    assert Partition.transposition(2) == Partition.of(2)
    assert Partition.transposition(4) == Partition.of(2, 1, 1)
    with pytest.raises(PartitionError):
        Partition.transposition(1)

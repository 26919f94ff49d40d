from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from services.characters import get_character_service
from services.partitions import Partition, enumerate_partitions, partitions_up_to
from services.pseries import (
    RAT,
    XRING,
    PSeries,
    central_character_action_check,
    cut_join_operator,
    cut_operator,
    cut_power,
    exp_p,
    join_operator,
    join_quadratic,
    log_by_decompositions,
    log_p,
    mul,
    neighbor_action,
    ordered_decompositions,
    schur_power_sum,
)
from tests.oracles import jacobi_trudi
from utils.exceptions import RingError, SizeMismatchError

D = 4


def series_strategy(D: int, with_constant: bool = False):
    return st.dictionaries(
        st.sampled_from([mu for mu in partitions_up_to(D) if mu or with_constant]),
        st.fractions(min_value=-3, max_value=3, max_denominator=4),
        max_size=5,
    ).map(lambda terms: PSeries(RAT, D, terms))


series_without_constant = series_strategy(D)


def p(*parts: int, D: int = D) -> PSeries:
    return PSeries.monomial(RAT, D, Partition.of(*parts))


def test_cut_and_join_on_degree_two():
    assert cut_operator(p(2, D=2)) == p(1, 1, D=2)
    assert join_operator(p(1, 1, D=2)) == p(2, D=2)
    assert cut_operator(p(1, 1, D=2)) == PSeries.zero(RAT, 2)


def test_cut_of_a_three_cycle():
    assert cut_operator(p(3, D=3)) == PSeries(RAT, 3, {Partition.of(2, 1): 3})


def test_neighbor_action_matches_operators():
    for mu in partitions_up_to(6):
        if mu:
            assert neighbor_action(mu) == cut_join_operator(p(*mu.parts, D=mu.size))


def test_derivative_and_product():
    series = p(2, 1, 1)
    assert series.derivative(1) == p(2, 1).scale(2)
    assert mul(p(1), p(2)) == series.derivative(1).scale(Fraction(1, 2))
    assert mul(p(3), p(2)) == PSeries.zero(RAT, D)


def test_join_quadratic_of_p1():
    assert join_quadratic(p(1, D=2), p(1, D=2)) == p(2, D=2).scale(Fraction(1, 2))


@settings(max_examples=30, deadline=None)
@given(series_strategy(6, with_constant=True), series_strategy(6, with_constant=True), st.integers(1, 6))
def test_derivative_obeys_leibniz(F, G, k):
    # products are cut at degree 6, so only degrees up to 6 - k are exact after d/dp_k
    lhs = mul(F, G).derivative(k)
    rhs = mul(F.derivative(k), G) + mul(F, G.derivative(k))
    assert lhs.truncate(6 - k) == rhs.truncate(6 - k)


@settings(max_examples=30, deadline=None)
@given(series_without_constant)
def test_exp_log_round_trip(F):
    G = exp_p(F)
    assert G.constant_term() == 1
    assert log_p(G) == F


@settings(max_examples=20, deadline=None)
@given(series_without_constant)
def test_log_by_decompositions_matches_log(F):
    G = exp_p(F)
    assert log_by_decompositions(G) == log_p(G)


def test_ordered_decompositions():
    assert ordered_decompositions(Partition()) == ((),)
    assert ordered_decompositions(Partition.of(1, 1)) == (
        (Partition.of(1), Partition.of(1)),
        (Partition.of(1, 1),),
    )
    assert len(ordered_decompositions(Partition.of(2, 1))) == 3


def test_double_cut_of_a_three_cycle():
    assert cut_power(3, 3) == p(1, 1, 1, D=3).scale(3)
    assert cut_operator(cut_operator(p(3, D=3))) == p(1, 1, 1, D=3).scale(3)


@pytest.mark.parametrize("d", range(1, 7))
def test_cut_power_matches_iterated_cuts(d):
    series = PSeries.monomial(RAT, d, Partition.one_row(d))
    for l in range(1, d + 1):
        expected = {
            mu: Fraction(factorial(l - 1) * d ** (l - 1), mu.aut_order)
            for mu in enumerate_partitions(d)
            if mu.length == l
        }
        assert cut_power(d, l) == series == PSeries(RAT, d, expected)
        series = cut_operator(series)


def test_cut_power_bounds():
    with pytest.raises(SizeMismatchError):
        cut_power(3, 4)


@pytest.mark.parametrize("d", range(1, 7))
def test_schur_functions_match_jacobi_trudi(d):
    for nu in enumerate_partitions(d):
        assert schur_power_sum(nu) == jacobi_trudi(nu)


@pytest.mark.parametrize("d", range(1, 7))
def test_schur_functions_are_eigenvectors(d):
    for nu in enumerate_partitions(d):
        assert central_character_action_check(nu).ok


def test_schur_eigenvalue_is_the_central_character(mocker):
    f = mocker.patch.object(get_character_service(), "f", return_value=7)
    assert not central_character_action_check(Partition.of(2, 1)).ok
    f.assert_called_once_with(Partition.of(2, 1), Partition.of(2, 1))


def test_errors():
    with pytest.raises(RingError):
        exp_p(PSeries.constant(RAT, 2))
    with pytest.raises(RingError):
        log_p(PSeries.constant(RAT, 2, Fraction(2)))
    with pytest.raises(SizeMismatchError):
        p(1, D=2) + p(1, D=3)
    with pytest.raises(SizeMismatchError):
        mul(p(1, D=2), PSeries.monomial(XRING, 2, Partition.of(1)))
    with pytest.raises(SizeMismatchError):
        PSeries(RAT, -1)


def test_rendering():
    assert str(PSeries.zero(RAT, 2)) == "0"
    series = p(1, 1, D=2).scale(Fraction(1, 2)) + p(2, D=2) + PSeries.constant(RAT, 2)
    assert str(series) == "1: 1\np2: 1\np1^2: 1/2"


def test_truncation_drops_high_degrees():
    assert PSeries(RAT, 2, {Partition.of(3): 1}) == PSeries.zero(RAT, 2)
    assert p(2, 1).truncate(2) == PSeries.zero(RAT, 2)
    with pytest.raises(SizeMismatchError):
        p(1, D=2).truncate(3)

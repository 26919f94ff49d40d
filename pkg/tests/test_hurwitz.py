from fractions import Fraction

import numpy as np
import pytest

from services.coeffring import LambdaSeries, XLaurent, cosh_x, sinh_x
from services.hurwitz import (
    burnside_bullet,
    cutjoin_matrix,
    evolve_cutjoin,
    hurwitz_number,
    hurwitz_number_burnside,
    initial_values,
    normalized_connected,
    phi_bullet,
    phi_circ,
    phi_circ_by_decompositions,
    remaining_branch_points,
    render_odes,
    s_lambda_identities,
    simple_burnside,
    simple_connected_by_compositions,
    simple_specialize,
    u_poly,
    verify_cutjoin_phi,
)
from services.partitions import Partition, enumerate_partitions
from utils.exceptions import NoSuchCoverError, SizeMismatchError
from utils.models import HurwitzQuery


def test_low_degree_genus_zero_coefficients():
    bullet = phi_bullet(0, 3)
    assert bullet.coefficient(Partition.of(1)) == XLaurent.one()
    assert bullet.coefficient(Partition.of(2)) == sinh_x(1) * Fraction(1, 2)
    assert bullet.coefficient(Partition.of(1, 1)) == cosh_x(1) * Fraction(1, 2)
    assert bullet.coefficient(Partition.of(2, 1)) == sinh_x(3) * Fraction(1, 6)
    assert phi_circ(0, 3).coefficient(Partition.of(1, 1)) == (cosh_x(1) - 1) * Fraction(1, 2)


def test_genus_one_coefficients():
    bullet = phi_bullet(1, 3)
    assert bullet.coefficient(Partition.of(2)) == sinh_x(1) * 2
    assert bullet.coefficient(Partition.of(3)) == cosh_x(3) * 4 - 1
    assert bullet.coefficient(Partition.of(1, 1, 1)) == cosh_x(3) * 2 + 1


def test_series_shape():
    bullet = phi_bullet(0, 3)
    assert not bullet.connected
    assert bullet.D == 3
    assert bullet.series.constant_term() == XLaurent.one()
    assert not phi_circ(0, 3).series.constant_term()
    with pytest.raises(SizeMismatchError):
        phi_bullet(0, 0)


@pytest.mark.parametrize(
    "g, h, eta, connected, expected",
    [
        (0, 0, Partition.of(2), False, Fraction(1, 2)),
        (0, 0, Partition.of(1, 1), False, Fraction(1, 2)),
        (0, 0, Partition.of(1, 1), True, Fraction(1, 2)),
        (-1, 0, Partition.of(1, 1), True, Fraction(0)),
        (-2, 0, Partition.of(1, 1, 1), False, Fraction(1, 6)),
        (0, 0, Partition.of(1), False, Fraction(1)),
    ],
)
def test_hurwitz_numbers(g, h, eta, connected, expected):
    assert hurwitz_number(g, h, eta, connected=connected) == expected


def test_hurwitz_numbers_match_burnside():
    for h in (0, 1):
        for d in range(1, 5):
            for eta in enumerate_partitions(d):
                r0 = remaining_branch_points(0, h, eta)
                g = (r0 % 2 - r0) // 2 + 1
                assert hurwitz_number(g, h, eta) == hurwitz_number_burnside(g, h, eta)


def test_no_such_cover():
    assert remaining_branch_points(-1, 0, Partition.of(1)) == -2
    with pytest.raises(NoSuchCoverError):
        hurwitz_number(-1, 0, Partition.of(1))
    with pytest.raises(NoSuchCoverError):
        hurwitz_number_burnside(-1, 0, Partition.of(1))
    with pytest.raises(SizeMismatchError):
        hurwitz_number(0, 0, Partition())


def test_burnside_with_profiles():
    query = HurwitzQuery(h=0, d=2, profiles=[(2,), (2,)])
    assert burnside_bullet(query) == Fraction(1, 2)
    assert burnside_bullet(HurwitzQuery(h=1, d=2)) == 2


@pytest.mark.parametrize("h", [0, 1, 2])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_evolution_matches_burnside(h, d):
    solution = evolve_cutjoin(h, d)
    for eta in enumerate_partitions(d):
        assert solution[eta] == u_poly(h, eta)
        assert solution[eta].at_zero() == initial_values(h, d)[eta]


def test_cutjoin_matrix():
    assert np.array_equal(cutjoin_matrix(2), np.array([[0, 1], [1, 0]]))
    for d in range(1, 6):
        matrix = cutjoin_matrix(d)
        assert np.array_equal(matrix.sum(axis=0), np.full(len(enumerate_partitions(d)), d * (d - 1) // 2))


def test_render_odes():
    assert render_odes(1) == "d/dλ Phi[p1] = 0"
    assert render_odes(2) == "d/dλ Phi[p2] = Phi[p1^2]\nd/dλ Phi[p1^2] = Phi[p2]"
    assert "3*Phi[p3]" in render_odes(3)


@pytest.mark.parametrize("h", [0, 1])
def test_cutjoin_equation(h):
    report = verify_cutjoin_phi(h, 4, 3)
    assert report.ok
    assert report.summary.total == 7


@pytest.mark.parametrize("h", [0, 1, 2])
def test_parity(h):
    assert phi_bullet(h, 5).parity_violations() == []
    assert phi_circ(h, 5).parity_violations() == []


def test_connected_routes_agree():
    assert phi_circ_by_decompositions(0, 4) == phi_circ(0, 4).series


@pytest.mark.parametrize("h", [0, 1])
def test_simple_specialization(h):
    bullet = simple_specialize(h, 4)
    assert bullet[0] == XLaurent.one()
    connected = simple_specialize(h, 4, connected=True)
    assert 0 not in connected
    compositions = simple_connected_by_compositions(h, 4)
    for d in range(1, 5):
        assert bullet[d] == simple_burnside(h, d)
        assert connected[d] == compositions[d]
        assert bullet[d].is_even()


def test_normalized_connected_low_degrees():
    assert normalized_connected(Partition.of(1), 6) == LambdaSeries.const(1, 6)
    assert normalized_connected(Partition.of(2), 6) == LambdaSeries.s_function(2, 6)


def test_s_identities():
    report = s_lambda_identities(12)
    assert report.ok
    assert report.summary.total == 12
    with pytest.raises(SizeMismatchError):
        s_lambda_identities(9)

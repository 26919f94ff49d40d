"""
Hurwitz numbers from the Burnside formula and their generating series.

Phi_h(lambda, p)^bullet = 1 + sum_eta U_h^eta(lambda) p_eta with
U_h^eta = sum_rho (dim R_rho/|eta|!)^(2-2h) exp(f_rho(2) lambda) f_rho(eta),
and Phi_h^circ = log Phi_h^bullet. Coefficients are XLaurent values in x = exp(lambda),
so the cut-and-join equation d/dlambda Phi = (C + J) Phi is an exact Laurent identity.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Tuple

import numpy as np

from services.characters import get_character_service
from services.coeffring import XLaurent, cosh_x, sinh_x, x_to_lambda, LambdaSeries
from services.logger import get_logger_service
from services.partitions import Partition, canonical_index, cut_join_neighbors, enumerate_partitions
from services.pseries import (
    XRING,
    PSeries,
    cut_join_operator,
    join_quadratic,
    log_by_decompositions,
    log_p,
)
from utils.exceptions import NoSuchCoverError, SizeMismatchError
from utils.helpers import monomial_str
from utils.models import HurwitzQuery, VerificationReport

logger_service = get_logger_service()


@dataclass(frozen=True, eq=False)
class PhiSeries:
    """Generating series of genus-h Hurwitz numbers, disconnected or connected."""

    h: int
    connected: bool
    series: PSeries

    @property
    def D(self) -> int:
        return self.series.D

    def coefficient(self, eta: Partition) -> XLaurent:
        return self.series.coefficient(eta)

    def parity_violations(self) -> List[Partition]:
        """Coefficients that are not fixed by x -> 1/x up to the sign (-1)^(|eta| - l(eta))."""
        return [eta for eta, c in self.series if c.invert() != c * eta.sign]


def _weight(rho: Partition, h: int) -> Fraction:
    dim = get_character_service().dim_rep(rho)
    return Fraction(dim, factorial(rho.size)) ** (2 - 2 * h)


def remaining_branch_points(g: int, h: int, eta: Partition) -> int:
    """r = 2g - 2 + |eta| + l(eta) - 2|eta|h simple branch points (Riemann-Hurwitz)."""
    return 2 * g - 2 + eta.size + eta.length - 2 * eta.size * h


# === BURNSIDE ===
def burnside_bullet(query: HurwitzQuery) -> Fraction:
    """
    Disconnected count of degree-d covers of a genus-h surface with the given profiles.

    sum_rho (dim R_rho/d!)^(2-2h) prod_i |C(eta^i)| chi_rho(eta^i)/dim R_rho

    Args:
        query: Base genus, degree and profiles

    Returns:
        Fraction: Automorphism-weighted count

    Raises:
        SizeMismatchError: If a profile does not partition d
    """
    characters = get_character_service()
    profiles = [Partition(profile) for profile in query.profiles]
    for profile in profiles:
        if profile.size != query.d:
            raise SizeMismatchError(f"Profile {profile} does not partition d={query.d}")

    total = Fraction(0)
    for rho in enumerate_partitions(query.d):
        term = _weight(rho, query.h)
        for profile in profiles:
            term *= characters.f(rho, profile)
            if not term:
                break
        total += term
    return total


def hurwitz_number_burnside(g: int, h: int, eta: Partition) -> Fraction:
    """H^g_h(eta)^bullet = sum_rho (dim R_rho/d!)^(2-2h) f_rho(2)^r f_rho(eta)."""
    r = remaining_branch_points(g, h, eta)
    if r < 0:
        raise NoSuchCoverError(f"r = {r} < 0 for g={g}, h={h}, eta={eta}")
    characters = get_character_service()
    return sum(
        (_weight(rho, h) * Fraction(rho.kappa // 2) ** r * characters.f(rho, eta) for rho in enumerate_partitions(eta.size)),
        Fraction(0),
    )


# === GENERATING SERIES ===
@lru_cache(maxsize=None)
def u_poly(h: int, eta: Partition) -> XLaurent:
    """
    U_h^eta(lambda) as a Laurent polynomial in x = exp(lambda).

    Args:
        h: Base genus
        eta: Ramification profile

    Returns:
        XLaurent: sum_rho (dim R_rho/|eta|!)^(2-2h) x^(kappa_rho/2) f_rho(eta)
    """
    characters = get_character_service()
    terms: Dict[int, Fraction] = {}
    for rho in enumerate_partitions(eta.size):
        f = characters.f(rho, eta)
        if f:
            e = rho.kappa // 2
            terms[e] = terms.get(e, Fraction(0)) + _weight(rho, h) * f
    return XLaurent(terms)


@lru_cache(maxsize=None)
def phi_bullet(h: int, D: int) -> PhiSeries:
    """Phi_h^bullet truncated at degree D; constant term 1."""
    if D < 1:
        raise SizeMismatchError(f"D must be at least 1, got {D}")
    logger_service.debug(f"Building Phi_{h} up to degree {D}")
    terms = {Partition(): XLaurent.one()}
    for d in range(1, D + 1):
        for eta in enumerate_partitions(d):
            terms[eta] = u_poly(h, eta)
    return PhiSeries(h=h, connected=False, series=PSeries(XRING, D, terms))


@lru_cache(maxsize=None)
def phi_circ(h: int, D: int) -> PhiSeries:
    """Phi_h^circ = log Phi_h^bullet; no constant term."""
    return PhiSeries(h=h, connected=True, series=log_p(phi_bullet(h, D).series))


def phi_circ_by_decompositions(h: int, D: int) -> PSeries:
    """Connected series from the inclusion-exclusion sum over decompositions of eta."""
    return log_by_decompositions(phi_bullet(h, D).series)


def hurwitz_number(g: int, h: int, eta: Partition, connected: bool = False) -> Fraction:
    """
    H^g_h(eta), read off the generating series.

    Args:
        g: Genus of the cover (negative values allowed for disconnected covers)
        h: Genus of the base
        eta: Ramification profile over the special point
        connected: Use the connected series

    Returns:
        Fraction: r! times the lambda^r coefficient of the p_eta coefficient

    Raises:
        NoSuchCoverError: If r = 2g - 2 + |eta| + l(eta) - 2|eta|h < 0
    """
    if not eta:
        raise SizeMismatchError("The ramification profile must be nonempty")
    r = remaining_branch_points(g, h, eta)
    if r < 0:
        raise NoSuchCoverError(
            f"No covers: r = 2g - 2 + |eta| + l(eta) - 2|eta|h = {r} for g={g}, h={h}, eta={eta}"
        )
    series = phi_circ(h, eta.size) if connected else phi_bullet(h, eta.size)
    expansion = x_to_lambda(series.coefficient(eta), r)
    return expansion[r] * factorial(r)


# === SIMPLE HURWITZ NUMBERS ===
def simple_specialize(h: int, D: int, connected: bool = False) -> Dict[int, XLaurent]:
    """
    Specialize p_1 -> q, p_k -> 0 (k >= 2).

    Returns:
        Dict[int, XLaurent]: Coefficient of q^d for d = 0..D (q^0 only for the disconnected form)
    """
    series = (phi_circ if connected else phi_bullet)(h, D)
    start = 1 if connected else 0
    return {d: series.coefficient(Partition.one_column(d)) for d in range(start, D + 1)}


def simple_burnside(h: int, d: int) -> XLaurent:
    """q^d coefficient as sum_rho (dim/d!)^(2-2h) exp[C(d,2) chi_rho(2)/dim R_rho lambda]."""
    characters = get_character_service()
    terms: Dict[int, Fraction] = {}
    transposition = Partition.transposition(d) if d >= 2 else None
    for rho in enumerate_partitions(d):
        if transposition is None:
            e = 0
        else:
            e = int(Fraction(comb(d, 2) * characters.character(rho, transposition), characters.dim_rep(rho)))
        terms[e] = terms.get(e, Fraction(0)) + _weight(rho, h)
    return XLaurent(terms)


def _compositions(d: int) -> List[Tuple[int, ...]]:
    if d == 0:
        return [()]
    return [(first,) + rest for first in range(1, d + 1) for rest in _compositions(d - first)]


def simple_connected_by_compositions(h: int, D: int) -> Dict[int, XLaurent]:
    """Connected simple series by inclusion-exclusion over compositions of d."""
    blocks = {d: simple_burnside(h, d) for d in range(1, D + 1)}
    result = {}
    for d in range(1, D + 1):
        total = XLaurent.zero()
        for parts in _compositions(d):
            product = XLaurent.one()
            for part in parts:
                product = product * blocks[part]
            n = len(parts)
            total = total + product * Fraction((-1) ** (n - 1), n)
        result[d] = total
    return result


# === CUT-AND-JOIN ROUTE ===
def initial_values(h: int, d: int) -> Dict[Partition, Fraction]:
    """Phi_h^eta(0)^bullet = sum_rho (dim R_rho/d!)^(2-2h) f_rho(eta) for eta |- d."""
    characters = get_character_service()
    return {
        eta: sum((_weight(rho, h) * characters.f(rho, eta) for rho in enumerate_partitions(d)), Fraction(0))
        for eta in enumerate_partitions(d)
    }


def cutjoin_matrix(d: int) -> np.ndarray:
    """
    Integer matrix M of C + J on the degree-d monomials: (C + J) p_mu = sum_eta M[eta, mu] p_eta.

    Rows and columns follow the canonical partition order, so that
    d/dlambda Phi^eta = sum_mu M[eta, mu] Phi^mu.
    """
    partitions = enumerate_partitions(d)
    matrix = np.zeros((len(partitions), len(partitions)), dtype=np.int64)
    for j, mu in enumerate(partitions):
        if not mu:
            continue
        for partner, m in cut_join_neighbors(mu).as_dict().items():
            matrix[canonical_index(partner), j] += m
    return matrix


def render_odes(d: int) -> str:
    """The degree-d cut-and-join system, one equation per line."""
    partitions = enumerate_partitions(d)
    matrix = cutjoin_matrix(d)
    lines = []
    for i, eta in enumerate(partitions):
        terms = []
        for j, mu in enumerate(partitions):
            m = int(matrix[i, j])
            if m:
                terms.append(("" if m == 1 else f"{m}*") + f"Phi[{monomial_str(mu)}]")
        lines.append(f"d/dλ Phi[{monomial_str(eta)}] = " + (" + ".join(terms) if terms else "0"))
    return "\n".join(lines)


def evolve_cutjoin(h: int, d: int) -> Dict[Partition, XLaurent]:
    """
    Solve the degree-d cut-and-join system from its lambda = 0 values.

    In the basis s_nu = sum_mu chi_nu(mu)/z_mu p_mu the operator C + J is diagonal with
    eigenvalue f_nu(2) = kappa_nu/2, so with c_nu = sum_mu a_mu(0) chi_nu(mu):
    a_eta(lambda) = sum_nu c_nu x^(kappa_nu/2) chi_nu(eta)/z_eta.

    Args:
        h: Base genus (only enters through the initial values)
        d: Degree, d >= 1

    Returns:
        Dict[Partition, XLaurent]: Phi_h^eta for every eta |- d
    """
    if d < 1:
        raise SizeMismatchError(f"Degree must be at least 1, got {d}")
    table = get_character_service().table(d)
    start = initial_values(h, d)
    partitions = enumerate_partitions(d)
    amplitudes = {
        nu: sum((start[mu] * table.value(nu, mu) for mu in partitions), Fraction(0))
        for nu in partitions
    }
    solution = {}
    for eta in partitions:
        terms: Dict[int, Fraction] = {}
        for nu, c in amplitudes.items():
            if c:
                e = nu.kappa // 2
                terms[e] = terms.get(e, Fraction(0)) + c * Fraction(table.value(nu, eta), eta.z)
        solution[eta] = XLaurent(terms)
    return solution


def verify_cutjoin_phi(h: int, D: int, connected_D: int | None = None) -> VerificationReport:
    """
    d/dlambda Phi^bullet = (C + J) Phi^bullet, and the connected form
    d/dlambda Phi^circ = (C + J) Phi^circ + Q(Phi^circ, Phi^circ), degree by degree.

    Args:
        h: Base genus
        D: Truncation for the disconnected equation
        connected_D: Truncation for the connected equation (defaults to D)

    Returns:
        VerificationReport: One case per (form, degree)
    """
    report = VerificationReport(suite="phi-cutjoin")
    bullet = phi_bullet(h, D).series
    lhs = bullet.map_coefficients(lambda c: c.derive())
    rhs = cut_join_operator(bullet)
    for d in range(1, D + 1):
        left, right = lhs.degree_part(d), rhs.degree_part(d)
        report.check(f"h={h}/bullet/d={d}", left == right, witness=f"lhs:\n{left}\nrhs:\n{right}")

    connected_D = D if connected_D is None else connected_D
    circ = phi_circ(h, connected_D).series
    lhs = circ.map_coefficients(lambda c: c.derive())
    rhs = cut_join_operator(circ) + join_quadratic(circ, circ)
    for d in range(1, connected_D + 1):
        left, right = lhs.degree_part(d), rhs.degree_part(d)
        report.check(f"h={h}/circ/d={d}", left == right, witness=f"lhs:\n{left}\nrhs:\n{right}")
    return report


# === S(lambda) IDENTITIES ===
def s_normalization(eta: Partition) -> Fraction:
    """prod eta_j^2 * |Aut eta| * prod eta_j!/eta_j^eta_j."""
    value = Fraction(eta.aut_order)
    for part in eta.parts:
        value *= Fraction(part * part * factorial(part), part**part)
    return value


def s_weight(eta: Partition) -> int:
    """Power of lambda stripped from the connected coefficient: |eta| + l(eta) - 2."""
    return eta.size + eta.length - 2


def normalized_connected(eta: Partition, N: int) -> LambdaSeries:
    """T(eta) = normalization * Phi_0^{eta, circ}(lambda) / lambda^(|eta| + l(eta) - 2) to order N."""
    w = s_weight(eta)
    coefficient = phi_circ(0, eta.size).coefficient(eta)
    return x_to_lambda(coefficient, N + w).shift_down(w) * s_normalization(eta)


def _sinh_squared_half(k: int) -> XLaurent:
    """sinh^2(k*lambda/2) = (cosh(k*lambda) - 1)/2."""
    return (cosh_x(k) - 1) * Fraction(1, 2)


def s_identity_table(N: int) -> List[Tuple[Partition, XLaurent, LambdaSeries]]:
    """(eta, closed sinh form of Phi_0^{eta, circ}, S-polynomial form of T(eta))."""
    S = {k: LambdaSeries.s_function(k, N) for k in (1, 2, 3)}
    return [
        (Partition.of(1), XLaurent.one(), LambdaSeries.const(1, N)),
        (Partition.of(2), sinh_x(1) * Fraction(1, 2), S[2]),
        (Partition.of(1, 1), _sinh_squared_half(1), S[1] ** 2 * Fraction(1, 2)),
        (Partition.of(3), _sinh_squared_half(3) * Fraction(2, 9), S[3] ** 2),
        (Partition.of(2, 1), sinh_x(3) * Fraction(1, 6) - sinh_x(1) * Fraction(1, 2), S[2] ** 3 * Fraction(4, 3)),
        (
            Partition.of(1, 1, 1),
            _sinh_squared_half(3) * Fraction(1, 9) - _sinh_squared_half(1),
            (S[1] ** 3 * S[3] + S[1] ** 4) * Fraction(1, 2),
        ),
    ]


def s_lambda_identities(N: int) -> VerificationReport:
    """
    The low-degree genus-0 connected coefficients in sinh form and as polynomials in S.

    Args:
        N: lambda-order of the comparison, N >= 10

    Returns:
        VerificationReport: Two cases (sinh form, S form) per identity
    """
    if N < 10:
        raise SizeMismatchError(f"The S identities are compared to order at least 10, got {N}")
    report = VerificationReport(suite="s-identities")
    for eta, closed, expected in s_identity_table(N):
        coefficient = phi_circ(0, eta.size).coefficient(eta)
        report.check(
            f"sinh/{eta}",
            coefficient == closed,
            witness=f"Phi = {coefficient.hyperbolic_str()}, closed form = {closed.hyperbolic_str()}",
        )
        actual = normalized_connected(eta, N)
        report.check(f"S/{eta}", actual == expected, witness=f"T = {actual}; expected {expected}")
    return report

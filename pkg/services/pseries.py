"""
Graded formal power series in p_1, p_2, ... truncated at total degree D.

A series is a sparse map Partition -> coefficient, the key mu standing for the monomial
p_mu = p_{mu_1} ... p_{mu_l}. The coefficient ring is carried by a Ring descriptor so the
same cut-and-join code runs over rationals, x-Laurent polynomials and sine quotients.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Callable, Dict, Iterator, Mapping, Optional

from services.characters import get_character_service
from services.coeffring import RatFn, ULaurent, UVLaurent, XLaurent
from services.logger import get_logger_service
from services.partitions import Partition, cut_join_neighbors, enumerate_partitions, partitions_up_to
from utils.exceptions import IdentityViolation, RingError, SizeMismatchError
from utils.helpers import monomial_str
from utils.models import VerificationReport

logger_service = get_logger_service()


@dataclass(frozen=True)
class Ring:
    """Coefficient ring of a series: a name plus its additive and multiplicative units."""

    name: str
    zero: Any
    one: Any

    def __eq__(self, other):
        return isinstance(other, Ring) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


RAT = Ring("Rat", Fraction(0), Fraction(1))
XRING = Ring("XLaurent", XLaurent.zero(), XLaurent.one())
URING = Ring("RatFn[u]", RatFn.zero(ULaurent), RatFn.one(ULaurent))
UVRING = Ring("RatFn[u,v]", RatFn.zero(UVLaurent), RatFn.one(UVLaurent))


class PSeries:
    """Truncated series over a coefficient ring. Immutable once built."""

    __slots__ = ("ring", "D", "terms")
    __hash__ = None

    def __init__(self, ring: Ring, D: int, terms: Optional[Mapping[Partition, Any]] = None):
        if D < 0:
            raise SizeMismatchError(f"Truncation degree must be non-negative, got {D}")
        self.ring = ring
        self.D = D
        self.terms: Dict[Partition, Any] = {mu: c for mu, c in (terms or {}).items() if c and mu.size <= D}

    # === CONSTRUCTION ===
    @classmethod
    def zero(cls, ring: Ring, D: int) -> "PSeries":
        return cls(ring, D)

    @classmethod
    def constant(cls, ring: Ring, D: int, c=None) -> "PSeries":
        return cls(ring, D, {Partition(): ring.one if c is None else c})

    @classmethod
    def monomial(cls, ring: Ring, D: int, mu: Partition, c=None) -> "PSeries":
        return cls(ring, D, {mu: ring.one if c is None else c})

    def _check(self, other: "PSeries"):
        if other.ring != self.ring:
            raise SizeMismatchError(f"Ring mismatch: {self.ring.name} vs {other.ring.name}")
        if other.D != self.D:
            raise SizeMismatchError(f"Truncation mismatch: D={self.D} vs D={other.D}")

    # === ACCESS ===
    def coefficient(self, mu: Partition):
        return self.terms.get(mu, self.ring.zero)

    def __getitem__(self, mu: Partition):
        return self.coefficient(mu)

    def __iter__(self) -> Iterator[tuple[Partition, Any]]:
        for mu in sorted(self.terms, key=lambda p: p.sort_key):
            yield mu, self.terms[mu]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self):
        return self.coefficient(Partition())

    def degree_part(self, d: int) -> "PSeries":
        return PSeries(self.ring, self.D, {mu: c for mu, c in self.terms.items() if mu.size == d})

    def truncate(self, D: int) -> "PSeries":
        if D > self.D:
            raise SizeMismatchError(f"Cannot raise truncation from {self.D} to {D}")
        return PSeries(self.ring, D, self.terms)

    def map_coefficients(self, fn: Callable[[Any], Any], ring: Optional[Ring] = None) -> "PSeries":
        return PSeries(ring or self.ring, self.D, {mu: fn(c) for mu, c in self.terms.items()})

    # === ARITHMETIC ===
    def __add__(self, other: "PSeries") -> "PSeries":
        if not isinstance(other, PSeries):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for mu, c in other.terms.items():
            terms[mu] = terms[mu] + c if mu in terms else c
        return PSeries(self.ring, self.D, terms)

    def __neg__(self) -> "PSeries":
        return PSeries(self.ring, self.D, {mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other: "PSeries") -> "PSeries":
        if not isinstance(other, PSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "PSeries":
        return PSeries(self.ring, self.D, {mu: a * c for mu, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, PSeries):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, PSeries):
            return NotImplemented
        if other.ring != self.ring or other.D != self.D:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(mu) == other.coefficient(mu) for mu in keys)

    # === CALCULUS ===
    def derivative(self, k: int) -> "PSeries":
        """d/dp_k: p_mu -> m_k(mu) p_{mu - k}."""
        terms: Dict[Partition, Any] = {}
        for mu, c in self.terms.items():
            m = mu.multiplicity(k)
            if m:
                key = mu.remove(k)
                terms[key] = terms[key] + c * m if key in terms else c * m
        return PSeries(self.ring, self.D, terms)

    def __str__(self):
        return render_series(self)

    def __repr__(self):
        return f"PSeries<{self.ring.name}, D={self.D}>({self})"


def render_series(F: PSeries, coefficient_str: Callable[[Any], str] = str) -> str:
    """One term per line, partitions in canonical order (size, then reverse-lexicographic)."""
    if not F:
        return "0"
    return "\n".join(f"{monomial_str(mu)}: {coefficient_str(c)}" for mu, c in F)


# === PRODUCT, EXP AND LOG ===
def mul(F: PSeries, G: PSeries) -> PSeries:
    """
    Truncated product; p_mu * p_nu = p_{mu merge nu}.

    Raises:
        SizeMismatchError: If the rings or truncations differ
    """
    F._check(G)
    D = F.D
    right = sorted(G.terms.items(), key=lambda item: item[0].size)
    terms: Dict[Partition, Any] = {}
    for mu, a in F.terms.items():
        room = D - mu.size
        for nu, b in right:
            if nu.size > room:
                break
            key = mu.merge(nu)
            product = a * b
            terms[key] = terms[key] + product if key in terms else product
    return PSeries(F.ring, D, terms)


def exp_p(F: PSeries) -> PSeries:
    """
    exp(F) truncated at F.D.

    Raises:
        RingError: If F has a nonzero constant term
    """
    if F.constant_term():
        raise RingError("exp_p needs a series without constant term")
    result = PSeries.constant(F.ring, F.D)
    power = PSeries.constant(F.ring, F.D)
    for n in range(1, F.D + 1):
        power = mul(power, F).scale(Fraction(1, n))
        if not power:
            break
        result = result + power
    return result


def log_p(G: PSeries) -> PSeries:
    """
    log(G) truncated at G.D.

    Raises:
        RingError: If the constant term of G is not 1
    """
    if G.constant_term() != G.ring.one:
        raise RingError("log_p needs a series with constant term 1")
    H = G - PSeries.constant(G.ring, G.D)
    result = PSeries.zero(G.ring, G.D)
    power = PSeries.constant(G.ring, G.D)
    for n in range(1, G.D + 1):
        power = mul(power, H)
        if not power:
            break
        result = result + power.scale(Fraction((-1) ** (n - 1), n))
    return result


@lru_cache(maxsize=None)
def ordered_decompositions(mu: Partition) -> tuple[tuple[Partition, ...], ...]:
    """All ordered tuples of nonempty partitions whose multiset union is mu."""
    if not mu:
        return ((),)
    found = []
    for sub, rest in mu.submultisets():
        if not sub:
            continue
        for tail in ordered_decompositions(rest):
            found.append((sub,) + tail)
    return tuple(found)


def log_by_decompositions(G: PSeries) -> PSeries:
    """
    Connected series by inclusion-exclusion:
    sum_n (-1)^(n-1)/n sum over ordered (mu^1, ..., mu^n) with union mu of prod G_{mu^j}.

    Equal to log_p(G); kept as an independent route.
    """
    if G.constant_term() != G.ring.one:
        raise RingError("log_by_decompositions needs a series with constant term 1")
    terms: Dict[Partition, Any] = {}
    for mu in partitions_up_to(G.D):
        if not mu:
            continue
        total = G.ring.zero
        for pieces in ordered_decompositions(mu):
            product = G.ring.one
            for piece in pieces:
                c = G.coefficient(piece)
                if not c:
                    product = None
                    break
                product = product * c
            if product is not None:
                n = len(pieces)
                total = total + product * Fraction((-1) ** (n - 1), n)
        terms[mu] = total
    return PSeries(G.ring, G.D, terms)


# === CUT AND JOIN ===
def cut_operator(F: PSeries) -> PSeries:
    """1/2 sum_{i,j} (i+j) p_i p_j d/dp_{i+j}."""
    terms: Dict[Partition, Any] = {}
    for mu, c in F.terms.items():
        for k, m in mu.multiplicities.items():
            rest = mu.remove(k)
            for i in range(1, k):
                key = rest.merge(Partition.of(i, k - i))
                value = c * Fraction(k * m, 2)
                terms[key] = terms[key] + value if key in terms else value
    return PSeries(F.ring, F.D, terms)


def join_operator(F: PSeries) -> PSeries:
    """1/2 sum_{i,j} i j p_{i+j} d^2/dp_i dp_j."""
    terms: Dict[Partition, Any] = {}
    for mu, c in F.terms.items():
        multiplicities = mu.multiplicities
        for i, m_i in multiplicities.items():
            for j, m_j in multiplicities.items():
                pairs = m_i * (m_i - 1) if i == j else m_i * m_j
                if not pairs:
                    continue
                key = mu.remove(i, j).merge(Partition((i + j,)))
                value = c * Fraction(i * j * pairs, 2)
                terms[key] = terms[key] + value if key in terms else value
    return PSeries(F.ring, F.D, terms)


def cut_join_operator(F: PSeries) -> PSeries:
    return cut_operator(F) + join_operator(F)


def join_quadratic(F: PSeries, G: PSeries) -> PSeries:
    """Q(F, G) = 1/2 sum_{i,j} i j p_{i+j} dF/dp_i dG/dp_j, truncated."""
    F._check(G)
    D = F.D
    dF = {i: F.derivative(i) for i in range(1, D + 1)}
    dG = {j: G.derivative(j) for j in range(1, D + 1)}
    result = PSeries.zero(F.ring, D)
    for i in range(1, D):
        if not dF[i]:
            continue
        for j in range(1, D - i + 1):
            if not dG[j]:
                continue
            product = mul(mul(dF[i], dG[j]), PSeries.monomial(F.ring, D, Partition((i + j,))))
            result = result + product.scale(Fraction(i * j, 2))
    return result


def neighbor_action(mu: Partition, ring: Ring = RAT) -> PSeries:
    """(C + J) p_mu read off the cut/join neighbor multiplicities."""
    neighbors = cut_join_neighbors(mu)
    return PSeries(ring, mu.size, {partner: ring.one * m for partner, m in neighbors.as_dict().items()})


def cut_power_closed_form(d: int, l: int) -> PSeries:
    """sum over mu |- d with l parts of (l-1)! d^(l-1) / prod m_j! * p_mu."""
    terms = {}
    for mu in enumerate_partitions(d):
        if mu.length == l:
            terms[mu] = Fraction(factorial(l - 1) * d ** (l - 1), mu.aut_order)
    return PSeries(RAT, d, terms)


def cut_power(d: int, l: int) -> PSeries:
    """
    C^(l-1) p_d, checked against its closed form.

    Args:
        d: Size of the cycle
        l: Number of parts after l - 1 cuts, 1 <= l <= d

    Returns:
        PSeries: The iterated cut

    Raises:
        IdentityViolation: If the iterated cut differs from the closed form
    """
    if not 1 <= l <= d:
        raise SizeMismatchError(f"Need 1 <= l <= d, got d={d}, l={l}")
    series = PSeries.monomial(RAT, d, Partition.one_row(d))
    for _ in range(l - 1):
        series = cut_operator(series)
    expected = cut_power_closed_form(d, l)
    if series != expected:
        logger_service.error(f"C^{l - 1} p_{d} differs from its closed form")
        raise IdentityViolation(f"C^{l - 1} p_{d} = {series} but closed form is {expected}")
    return series


def schur_power_sum(nu: Partition) -> PSeries:
    """s_nu = sum_mu chi_nu(mu)/z_mu p_mu."""
    characters = get_character_service()
    return PSeries(
        RAT,
        nu.size,
        {mu: Fraction(characters.character(nu, mu), mu.z) for mu in enumerate_partitions(nu.size)},
    )


def central_character_action_check(nu: Partition) -> VerificationReport:
    """
    (C + J) s_nu = f_nu(2) s_nu in power sums, exactly.

    Args:
        nu: Partition

    Returns:
        VerificationReport: One case for nu
    """
    report = VerificationReport(suite="prop-cj")
    s = schur_power_sum(nu)
    eigenvalue = get_character_service().f(nu, Partition.transposition(nu.size)) if nu.size >= 2 else 0
    lhs = s.scale(Fraction(eigenvalue))
    rhs = cut_join_operator(s)
    report.check(f"{nu}", lhs == rhs, witness=f"f(2) = {eigenvalue}; f(2)*s = {lhs}; (C+J)s = {rhs}")
    return report

"""
Exact coefficient rings.

Everything here is exact: rationals are `fractions.Fraction`, Gaussian rationals pair two
of them, and the transcendental functions of lambda are encoded as Laurent polynomials in
exponential generators:

    u = exp(-i*lambda/4)     Marino-Vafa side, sin(k*lambda/2) = (u^(-2k) - u^(2k)) / (2i)
    v = exp(i*tau*lambda)    tau-dependence, always with integer exponents
    x = exp(lambda)          Hurwitz side, sinh/cosh combinations

Quotients by sines are RatFn values whose denominator is a multiset of cyclotomic
polynomials in the principal generator.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Callable, Iterable, Mapping, Optional, Union

import sympy

from utils.exceptions import RingError, SizeMismatchError

Rat = Fraction
Scalar = Union[int, Fraction, "GaussRat"]


def _rat_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# === GAUSSIAN RATIONALS ===
class GaussRat:
    """re + im*i with exact rational parts. Treated as immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussRat":
        value = object.__new__(cls)
        value.re = re
        value.im = im
        return value

    @classmethod
    def lift(cls, value) -> Optional["GaussRat"]:
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls._raw(Fraction(value), _ZERO)
        return None

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussRat":
        return GaussRat._raw(self.re, -self.im)

    def __add__(self, other):
        o = GaussRat.lift(other)
        if o is None:
            return NotImplemented
        return GaussRat._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussRat.lift(other)
        if o is None:
            return NotImplemented
        return GaussRat._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussRat.lift(other)
        if o is None:
            return NotImplemented
        return GaussRat._raw(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return GaussRat._raw(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussRat.lift(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussRat._raw(self.re * o.re, _ZERO)
        return GaussRat._raw(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussRat.lift(other)
        if o is None:
            return NotImplemented
        if not o:
            raise RingError("Division by zero in the Gaussian rationals")
        if not o.im:
            return GaussRat._raw(self.re / o.re, self.im / o.re)
        norm = o.re * o.re + o.im * o.im
        return GaussRat._raw(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = GaussRat.lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return GaussRat(1) / (self ** (-n))
        result = GaussRat._raw(_ONE, _ZERO)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = GaussRat.lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussRat({self.re!s}, {self.im!s})"

    def __str__(self):
        if not self.im:
            return _rat_str(self.re)
        imag = "i" if abs(self.im) == 1 else f"{_rat_str(abs(self.im))}*i"
        if not self.re:
            return ("-" if self.im < 0 else "") + imag
        return f"{_rat_str(self.re)} {'-' if self.im < 0 else '+'} {imag}"


_ZERO = Fraction(0)
_ONE = Fraction(1)
I = GaussRat(0, 1)


def i_power(n: int) -> GaussRat:
    """i^n for any integer n."""
    return (GaussRat(1), GaussRat(0, 1), GaussRat(-1), GaussRat(0, -1))[n % 4]


def _coeff_parts(c) -> tuple[bool, str, bool]:
    """(negative, magnitude text, needs no parentheses before a monomial)."""
    if isinstance(c, GaussRat):
        if not c.im:
            c = c.re
        elif not c.re:
            magnitude = abs(c.im)
            text = "i" if magnitude == 1 else f"{_rat_str(magnitude)}*i"
            return c.im < 0, text, magnitude == 1
        else:
            return False, f"({c})", True
    c = Fraction(c)
    return c < 0, _rat_str(abs(c)), c.denominator == 1


def _join_terms(terms: list[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    negative, body = terms[0]
    out = ("-" if negative else "") + body
    for negative, body in terms[1:]:
        out += (" - " if negative else " + ") + body
    return out


def _term(c, monomial: str) -> tuple[bool, str]:
    negative, magnitude, atomic = _coeff_parts(c)
    if not monomial:
        return negative, magnitude
    if magnitude == "1":
        return negative, monomial
    return negative, (magnitude if atomic else f"({magnitude})") + "*" + monomial


def _power_str(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


# === LAURENT POLYNOMIALS ===
class LaurentPolynomial:
    """
    Sparse Laurent polynomial: exponent -> nonzero coefficient.

    Subclasses fix the exponent type (int, or (u, v) pairs) and the coefficient ring.
    Values are immutable once built.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        cleaned = {}
        for exponent, coefficient in (terms or {}).items():
            coefficient = self._lift(coefficient)
            if coefficient:
                cleaned[exponent] = coefficient
        self.terms = cleaned

    # --- hooks for subclasses ---
    @classmethod
    def _lift(cls, value):
        raise NotImplementedError

    @staticmethod
    def _add_exp(a, b):
        return a + b

    _zero_exp = 0

    @classmethod
    def principal_exp(cls, k: int):
        """Exponent of the k-th power of the principal generator."""
        return k

    @staticmethod
    def principal_part(e) -> int:
        return e

    @staticmethod
    def secondary_part(e):
        return None

    @staticmethod
    def combine_exp(principal: int, secondary):
        return principal

    def _monomial_str(self, e) -> str:
        raise NotImplementedError

    # --- construction ---
    @classmethod
    def _from_clean(cls, terms: dict) -> "LaurentPolynomial":
        value = object.__new__(cls)
        value.terms = terms
        return value

    @classmethod
    def zero(cls):
        return cls._from_clean({})

    @classmethod
    def one(cls):
        return cls.const(1)

    @classmethod
    def const(cls, c):
        return cls({cls._zero_exp: c})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({e: c})

    @classmethod
    def principal_poly(cls, coefficients: Mapping[int, int]):
        return cls({cls.principal_exp(k): c for k, c in coefficients.items()})

    def _coerce(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, LaurentPolynomial):
            return None
        lifted = None
        try:
            lifted = self._lift(other)
        except RingError:
            return None
        if lifted is None:
            return None
        return type(self).const(lifted)

    # --- arithmetic ---
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            if e in terms:
                s = terms[e] + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
            else:
                terms[e] = c
        return self._from_clean(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "LaurentPolynomial":
        c = self._lift(c)
        if not c:
            return self.zero()
        return self._from_clean({e: a * c for e, a in self.terms.items()})

    def __mul__(self, other):
        if type(other) is not type(self):
            if isinstance(other, LaurentPolynomial):
                return NotImplemented
            try:
                lifted = self._lift(other)
            except RingError:
                return NotImplemented
            if lifted is None:
                return NotImplemented
            return self.scale(lifted)
        add = self._add_exp
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = add(e1, e2)
                terms[e] = terms[e] + c1 * c2 if e in terms else c1 * c2
        return self._from_clean({e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentPolynomial):
            return NotImplemented
        lifted = self._lift(other)
        if lifted is None or not lifted:
            raise RingError(f"Cannot divide a Laurent polynomial by {other!r}")
        return self.scale(self._lift(1) / lifted)

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms.items()
                inverse = self._from_clean({self._scale_exp(e, -1): self._lift(1) / c})
                return inverse ** (-n)
            raise RingError("Only monomials are invertible in a Laurent ring")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @staticmethod
    def _scale_exp(e, k: int):
        return e * k

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, e):
        return self.terms.get(e, self._lift(0))

    @property
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {self._zero_exp}

    def constant_term(self):
        return self.coefficient(self._zero_exp)

    def map_exponents(self, fn: Callable, target: Optional[type] = None) -> "LaurentPolynomial":
        cls = target or type(self)
        terms: dict = {}
        for e, c in self.terms.items():
            new = fn(e)
            terms[new] = terms[new] + c if new in terms else c
        return cls({e: c for e, c in terms.items()})

    def map_coefficients(self, fn: Callable) -> "LaurentPolynomial":
        return type(self)({e: fn(e, c) for e, c in self.terms.items()})

    # --- principal-variable slicing, used by RatFn ---
    def slices(self) -> dict:
        """Group terms by the non-principal part of the exponent."""
        grouped: dict = {}
        for e, c in self.terms.items():
            grouped.setdefault(self.secondary_part(e), {})[self.principal_part(e)] = c
        return grouped

    @classmethod
    def from_slices(cls, grouped: Mapping) -> "LaurentPolynomial":
        terms = {}
        for secondary, poly in grouped.items():
            for k, c in poly.items():
                terms[cls.combine_exp(k, secondary)] = c
        return cls._from_clean(terms)

    # --- rendering ---
    def __str__(self):
        terms = [_term(self.terms[e], self._monomial_str(e)) for e in sorted(self.terms, reverse=True)]
        return _join_terms(terms)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def exponent_map(self) -> dict[str, str]:
        """Machine-readable view: monomial text -> coefficient text."""
        return {self._monomial_str(e) or "1": str(self.terms[e]) for e in sorted(self.terms, reverse=True)}


class ULaurent(LaurentPolynomial):
    """Laurent polynomial in u = exp(-i*lambda/4) over the Gaussian rationals."""

    __slots__ = ()

    @classmethod
    def _lift(cls, value):
        lifted = GaussRat.lift(value)
        if lifted is None:
            raise RingError(f"{value!r} is not a Gaussian rational")
        return lifted

    def _monomial_str(self, e) -> str:
        return _power_str("u", e)

    def invert(self) -> "ULaurent":
        """u -> 1/u, i.e. lambda -> -lambda."""
        return ULaurent._from_clean({-e: c for e, c in self.terms.items()})

    def conjugate_inverse(self) -> "ULaurent":
        """u -> 1/u combined with complex conjugation of the coefficients (lambda -> conj(lambda))."""
        return ULaurent._from_clean({-e: c.conjugate() for e, c in self.terms.items()})

    def to_uv(self, v_exponent: int = 0) -> "UVLaurent":
        return UVLaurent._from_clean({(e, v_exponent): c for e, c in self.terms.items()})


class UVLaurent(LaurentPolynomial):
    """Laurent polynomial in u and v = exp(i*tau*lambda); exponents are (u, v) pairs."""

    __slots__ = ()
    _zero_exp = (0, 0)

    @classmethod
    def _lift(cls, value):
        lifted = GaussRat.lift(value)
        if lifted is None:
            raise RingError(f"{value!r} is not a Gaussian rational")
        return lifted

    @staticmethod
    def _add_exp(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def _scale_exp(e, k: int):
        return (e[0] * k, e[1] * k)

    @classmethod
    def principal_exp(cls, k: int):
        return (k, 0)

    @staticmethod
    def principal_part(e) -> int:
        return e[0]

    @staticmethod
    def secondary_part(e):
        return e[1]

    @staticmethod
    def combine_exp(principal: int, secondary):
        return (principal, secondary)

    def _monomial_str(self, e) -> str:
        return "*".join(part for part in (_power_str("u", e[0]), _power_str("v", e[1])) if part)

    def derive_v(self) -> "UVLaurent":
        """D_v: v^m -> m * v^m."""
        return UVLaurent._from_clean({e: c * e[1] for e, c in self.terms.items() if e[1]})

    def at_v_one(self) -> ULaurent:
        return self.map_exponents(lambda e: e[0], target=ULaurent)

    def v_parts(self) -> dict[int, ULaurent]:
        return {m: ULaurent(poly) for m, poly in sorted(self.slices().items())}


class XLaurent(LaurentPolynomial):
    """Laurent polynomial in x = exp(lambda) over the rationals."""

    __slots__ = ()

    @classmethod
    def _lift(cls, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, GaussRat) and value.is_real:
            return value.re
        raise RingError(f"{value!r} is not rational")

    def _monomial_str(self, e) -> str:
        return _power_str("x", e)

    def derive(self) -> "XLaurent":
        """d/dlambda: x^k -> k * x^k."""
        return XLaurent._from_clean({e: c * e for e, c in self.terms.items() if e})

    def invert(self) -> "XLaurent":
        """x -> 1/x, i.e. lambda -> -lambda."""
        return XLaurent._from_clean({-e: c for e, c in self.terms.items()})

    def is_even(self) -> bool:
        return self.invert() == self

    def is_odd(self) -> bool:
        return self.invert() == -self

    def at_zero(self) -> Fraction:
        """Value at lambda = 0."""
        return sum(self.terms.values(), Fraction(0))

    def hyperbolic_str(self) -> str:
        """Best-effort rendering as a combination of cosh(k*lambda) and sinh(k*lambda)."""
        terms: list[tuple[bool, str]] = []
        top = max((abs(e) for e in self.terms), default=0)
        for k in range(top, 0, -1):
            plus, minus = self.coefficient(k), self.coefficient(-k)
            argument = "λ" if k == 1 else f"{k}λ"
            for name, value in (("cosh", plus + minus), ("sinh", plus - minus)):
                if value:
                    negative = value < 0
                    magnitude = abs(value)
                    body = f"{name}({argument})" if magnitude == 1 else f"{_rat_str(magnitude)}*{name}({argument})"
                    terms.append((negative, body))
        constant = self.coefficient(0)
        if constant:
            terms.append((constant < 0, _rat_str(abs(constant))))
        return _join_terms(terms)


def sinh_x(k: int) -> XLaurent:
    """sinh(k*lambda) = (x^k - x^-k)/2."""
    return XLaurent({k: Fraction(1, 2)}) - XLaurent({-k: Fraction(1, 2)})


def cosh_x(k: int) -> XLaurent:
    """cosh(k*lambda) = (x^k + x^-k)/2."""
    return XLaurent({k: Fraction(1, 2)}) + XLaurent({-k: Fraction(1, 2)})


def sin_half(k: int) -> ULaurent:
    """sin(k*lambda/2) = (u^(-2k) - u^(2k)) / (2i)."""
    factor = GaussRat(1) / GaussRat(0, 2)
    return ULaurent({-2 * k: factor}) - ULaurent({2 * k: factor})


def cos_half(k: int) -> ULaurent:
    """cos(k*lambda/2) = (u^(-2k) + u^(2k)) / 2."""
    return ULaurent({-2 * k: Fraction(1, 2)}) + ULaurent({2 * k: Fraction(1, 2)})


# === CYCLOTOMIC POLYNOMIALS ===
@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    x = sympy.Symbol("x")
    coefficients = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
    return tuple(int(c) for c in reversed(coefficients))


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(int(d) for d in sympy.divisors(n))


def _poly_remainder(coefficients: list, divisor: tuple[int, ...]) -> list:
    remainder = list(coefficients)
    m = len(divisor) - 1
    for k in range(len(remainder) - 1, m - 1, -1):
        c = remainder[k]
        if c:
            for j in range(m + 1):
                if divisor[j]:
                    remainder[k - m + j] = remainder[k - m + j] - c * divisor[j]
    return remainder[:m]


def _divisible_by_cyclotomic(poly: Mapping[int, object], n: int) -> bool:
    """Phi_n | poly, decided by folding exponents mod n (Phi_n divides t^n - 1)."""
    folded: list = [0] * n
    for e, c in poly.items():
        folded[e % n] = folded[e % n] + c
    return not any(_poly_remainder(folded, cyclotomic(n)))


def _divide_by_cyclotomic(poly: Mapping[int, object], n: int) -> dict[int, object]:
    divisor = cyclotomic(n)
    m = len(divisor) - 1
    low, high = min(poly), max(poly)
    dense: list = [0] * (high - low + 1)
    for e, c in poly.items():
        dense[e - low] = c
    quotient: list = [0] * max(len(dense) - m, 0)
    for k in range(len(dense) - 1, m - 1, -1):
        c = dense[k]
        if c:
            quotient[k - m] = c
            for j in range(m + 1):
                if divisor[j]:
                    dense[k - m + j] = dense[k - m + j] - c * divisor[j]
    if any(dense[:m]):
        raise RingError(f"Phi_{n} does not divide the numerator")
    return {low + i: c for i, c in enumerate(quotient) if c}


# === RATIONAL FUNCTIONS ===
class RatFn:
    """
    numerator / prod_n Phi_n(t)^m_n, with t the principal generator of the numerator's ring.

    Every sine quotient of the Marino-Vafa side has this shape, because
    sin(k*lambda/2) = -u^(-2k) (u^(4k) - 1) / (2i) and u^(4k) - 1 = prod_{n | 4k} Phi_n(u).
    Normalization cancels each Phi_n that divides the numerator. Phi_n can split further
    over the Gaussian rationals, so representations need not be unique; equality is
    decided by cross-multiplication.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num: LaurentPolynomial, den: Optional[Mapping[int, int]] = None, normalize: bool = True):
        self.num = num
        self.den = {n: m for n, m in sorted((den or {}).items()) if m > 0}
        if normalize:
            self._normalize()

    @property
    def ring(self) -> type:
        return type(self.num)

    def _normalize(self):
        if not self.num:
            self.den = {}
            return
        if not self.den:
            return
        grouped = self.num.slices()
        remaining = {}
        for n, m in self.den.items():
            while m and all(_divisible_by_cyclotomic(poly, n) for poly in grouped.values()):
                grouped = {key: _divide_by_cyclotomic(poly, n) for key, poly in grouped.items()}
                m -= 1
            if m:
                remaining[n] = m
        self.num = self.ring.from_slices(grouped)
        self.den = remaining

    # --- construction ---
    @classmethod
    def of(cls, value, ring: type) -> "RatFn":
        if isinstance(value, RatFn):
            if value.ring is not ring:
                raise SizeMismatchError(f"Cannot mix {value.ring.__name__} and {ring.__name__}")
            return value
        if isinstance(value, LaurentPolynomial):
            if type(value) is not ring:
                raise SizeMismatchError(f"Cannot mix {type(value).__name__} and {ring.__name__}")
            return cls(value, normalize=False)
        return cls(ring.const(value), normalize=False)

    @classmethod
    def zero(cls, ring: type) -> "RatFn":
        return cls(ring.zero(), normalize=False)

    @classmethod
    def one(cls, ring: type) -> "RatFn":
        return cls(ring.one(), normalize=False)

    def _coerce(self, other) -> Optional["RatFn"]:
        if isinstance(other, RatFn):
            if other.ring is not self.ring:
                raise SizeMismatchError(f"Cannot mix {other.ring.__name__} and {self.ring.__name__}")
            return other
        if isinstance(other, LaurentPolynomial):
            return RatFn.of(other, self.ring)
        if GaussRat.lift(other) is None:
            return None
        return RatFn(self.ring.const(other), normalize=False)

    # --- arithmetic ---
    def _lifted_numerator(self, target: Mapping[int, int]) -> LaurentPolynomial:
        missing = {n: m - self.den.get(n, 0) for n, m in target.items() if m > self.den.get(n, 0)}
        return self.num * _cyclotomic_product(self.ring, tuple(sorted(missing.items()))) if missing else self.num

    @staticmethod
    def _lcm(denominators: Iterable[Mapping[int, int]]) -> dict[int, int]:
        common: dict[int, int] = {}
        for den in denominators:
            for n, m in den.items():
                if m > common.get(n, 0):
                    common[n] = m
        return common

    @classmethod
    def sum(cls, values: Iterable["RatFn"], ring: Optional[type] = None) -> "RatFn":
        """Add many quotients over one common denominator, normalizing once."""
        values = [v for v in values if v]
        if not values:
            if ring is None:
                raise RingError("Empty RatFn.sum needs an explicit ring")
            return cls.zero(ring)
        ring = ring or values[0].ring
        common = cls._lcm(v.den for v in values)
        numerator = ring.zero()
        for value in values:
            numerator = numerator + value._lifted_numerator(common)
        return cls(numerator, common)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        if self.den == o.den:
            return RatFn(self.num + o.num, self.den)
        return RatFn.sum([self, o])

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, (RatFn, LaurentPolynomial)):
            lifted = GaussRat.lift(other)
            if lifted is None:
                return NotImplemented
            return RatFn(self.num.scale(lifted), self.den, normalize=False)
        o = self._coerce(other)
        den = Counter(self.den)
        den.update(o.den)
        return RatFn(self.num * o.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        lifted = GaussRat.lift(other)
        if lifted is None or not lifted:
            raise RingError(f"RatFn values can only be divided by nonzero scalars, not {other!r}")
        return RatFn(self.num.scale(GaussRat(1) / lifted), self.den, normalize=False)

    def __pow__(self, n: int):
        if n < 0:
            raise RingError("Negative powers of RatFn values are not supported")
        result = RatFn.one(self.ring)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except SizeMismatchError:
            return False
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        common = self._lcm((self.den, o.den))
        return self._lifted_numerator(common) == o._lifted_numerator(common)

    def __bool__(self):
        return bool(self.num)

    # --- structure ---
    @property
    def is_laurent(self) -> bool:
        return not self.den

    def map_numerator(self, fn: Callable[[LaurentPolynomial], LaurentPolynomial]) -> "RatFn":
        """Apply an operator that commutes with the (principal-variable) denominator."""
        return RatFn(fn(self.num), self.den)

    def derive_v(self) -> "RatFn":
        return self.map_numerator(lambda num: num.derive_v())

    def at_v_one(self) -> "RatFn":
        return self.map_numerator(lambda num: num.at_v_one())

    # --- rendering ---
    def sin_form(self) -> Optional[tuple[LaurentPolynomial, dict[int, int]]]:
        """
        Rewrite as numerator / prod sin(k*lambda/2)^e_k with a Laurent numerator.

        Only meaningful for u-based rings; returns None when no such form is found.
        """
        if self.ring not in (ULaurent, UVLaurent):
            return None
        sines: Counter = Counter()
        remaining = Counter(self.den)
        while remaining:
            n = max(remaining)
            k = n // gcd(n, 4)
            sines[k] += 1
            for d in _divisors(4 * k):
                if remaining.get(d):
                    remaining[d] -= 1
                    if not remaining[d]:
                        del remaining[d]
        cleared = self
        for k, e in sines.items():
            factor = sin_half(k) if self.ring is ULaurent else sin_half(k).to_uv()
            cleared = cleared * (factor ** e)
        if not cleared.is_laurent:
            return None
        return cleared.num, dict(sorted(sines.items()))

    def __str__(self):
        if not self.den:
            return str(self.num)
        form = self.sin_form()
        if form is None:
            return f"({self.num})/({_den_str(self.den)})"
        numerator, sines = form
        product = " ".join(_sin_str(k, e) for k, e in sines.items())
        if numerator.is_constant:
            c = GaussRat.lift(numerator.constant_term())
            if c.is_real and c.re.numerator in (1, -1):
                sign = "-" if c.re < 0 else ""
                scale = c.re.denominator
                return f"{sign}1/({scale} {product})" if scale != 1 else f"{sign}1/({product})"
            if not c.re and c.im.numerator in (1, -1):
                sign = "-" if c.im < 0 else ""
                scale = c.im.denominator
                return f"{sign}i/({scale} {product})" if scale != 1 else f"{sign}i/({product})"
            return f"({c})/({product})"
        return f"({numerator})/({product})"

    def __repr__(self):
        return f"RatFn({self})"

    def exponent_map(self) -> dict:
        return {
            "numerator": self.num.exponent_map(),
            "denominator": {f"Phi_{n}": m for n, m in self.den.items()},
        }


def _sin_str(k: int, e: int) -> str:
    if k == 1:
        argument = "λ/2"
    elif k % 2 == 0:
        argument = "λ" if k == 2 else f"{k // 2}λ"
    else:
        argument = f"{k}λ/2"
    return f"sin({argument})" + (f"^{e}" if e > 1 else "")


def _den_str(den: Mapping[int, int]) -> str:
    return "*".join(f"Phi_{n}" + (f"^{m}" if m > 1 else "") for n, m in den.items())


@lru_cache(maxsize=None)
def _cyclotomic_product(ring: type, factors: tuple[tuple[int, int], ...]) -> LaurentPolynomial:
    product = ring.one()
    for n, m in factors:
        phi = ring.principal_poly(dict(enumerate(cyclotomic(n))))
        for _ in range(m):
            product = product * phi
    return product


def inv_sin_half(k: int, ring: type = ULaurent) -> RatFn:
    """
    1/sin(k*lambda/2) = -2i u^(2k) / prod_{n | 4k} Phi_n(u).

    Raises:
        RingError: For k = 0
    """
    if k == 0:
        raise RingError("sin(0) is not invertible")
    if k < 0:
        return -inv_sin_half(-k, ring)
    numerator = ULaurent({2 * k: GaussRat(0, -2)})
    if ring is UVLaurent:
        numerator = numerator.to_uv()
    return RatFn(numerator, {n: 1 for n in _divisors(4 * k)}, normalize=False)


# === LAMBDA SERIES ===
class LambdaSeries:
    """Truncated Taylor series c_0 + c_1 lambda + ... + c_N lambda^N over the rationals."""

    __slots__ = ("coefficients",)
    __hash__ = None

    def __init__(self, coefficients: Iterable, N: Optional[int] = None):
        values = [Fraction(c) for c in coefficients]
        if N is not None:
            values = (values + [Fraction(0)] * (N + 1 - len(values)))[: N + 1]
        if not values:
            raise RingError("A lambda series needs at least the constant coefficient")
        self.coefficients = tuple(values)

    @property
    def N(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def const(cls, c, N: int) -> "LambdaSeries":
        return cls([c], N)

    @classmethod
    def exp(cls, k, N: int) -> "LambdaSeries":
        """exp(k*lambda)."""
        k = Fraction(k)
        return cls([k**j / factorial(j) for j in range(N + 1)])

    @classmethod
    def s_function(cls, k, N: int) -> "LambdaSeries":
        """S(k*lambda) = sinh(k*lambda/2)/(k*lambda/2) = sum_j (k*lambda/2)^(2j)/(2j+1)!."""
        half = Fraction(k) / 2
        return cls([half**j / factorial(j + 1) if j % 2 == 0 else 0 for j in range(N + 1)])

    def _check(self, other: "LambdaSeries"):
        if other.N != self.N:
            raise SizeMismatchError(f"Truncation orders differ: {self.N} vs {other.N}")

    def _coerce(self, other) -> Optional["LambdaSeries"]:
        if isinstance(other, LambdaSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LambdaSeries.const(other, self.N)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LambdaSeries(a + b for a, b in zip(self.coefficients, o.coefficients))

    __radd__ = __add__

    def __neg__(self):
        return LambdaSeries(-a for a in self.coefficients)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LambdaSeries(a * other for a in self.coefficients)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        N = self.N
        product = [Fraction(0)] * (N + 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j in range(N + 1 - i):
                    product[i + j] += a * o.coefficients[j]
        return LambdaSeries(product)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = LambdaSeries.const(1, self.N)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "LambdaSeries":
        c0 = self.coefficients[0]
        if not c0:
            raise RingError("Only series with a nonzero constant term are invertible")
        inverse = [Fraction(1) / c0]
        for n in range(1, self.N + 1):
            s = sum(self.coefficients[k] * inverse[n - k] for k in range(1, n + 1))
            inverse.append(-s / c0)
        return LambdaSeries(inverse)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise RingError("Division by zero")
            return self * (Fraction(1) / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def shift_down(self, k: int = 1) -> "LambdaSeries":
        """Divide by lambda^k; the result is known to order N - k."""
        if k < 0 or k > self.N:
            raise RingError(f"Cannot divide an order-{self.N} series by lambda^{k}")
        if any(self.coefficients[:k]):
            raise RingError(f"Series is not divisible by lambda^{k}")
        return LambdaSeries(self.coefficients[k:])

    def truncate(self, N: int) -> "LambdaSeries":
        if N > self.N:
            raise SizeMismatchError(f"Cannot extend an order-{self.N} series to order {N}")
        return LambdaSeries(self.coefficients[: N + 1])

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except SizeMismatchError:
            return False
        if o is None:
            return NotImplemented
        return self.coefficients == o.coefficients

    def __getitem__(self, j: int) -> Fraction:
        return self.coefficients[j]

    def __str__(self):
        terms = [_term(c, _power_str("λ", j)) for j, c in enumerate(self.coefficients) if c]
        return _join_terms(terms) + f" + O(λ^{self.N + 1})"

    def __repr__(self):
        return f"LambdaSeries({self})"


def x_to_lambda(p: XLaurent, N: int) -> LambdaSeries:
    """
    Substitute x = exp(lambda) and expand to order N.

    Args:
        p: Laurent polynomial in x
        N: Truncation order, N >= 0

    Returns:
        LambdaSeries: sum_j (sum_k c_k k^j) lambda^j / j!
    """
    if N < 0:
        raise RingError(f"Truncation order must be non-negative, got {N}")
    return LambdaSeries(
        [sum((c * Fraction(k) ** j for k, c in p.terms.items()), Fraction(0)) / factorial(j) for j in range(N + 1)]
    )

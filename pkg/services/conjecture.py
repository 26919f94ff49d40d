"""
Is every normalized genus-0 connected coefficient a polynomial in S(lambda), ..., S(d lambda)?

With y = exp(lambda/2), S(k lambda) = (y^k - y^-k) / (k lambda), so a weight-w monomial
prod_j S(k_j lambda) equals prod_j (y^k_j - y^-k_j)/k_j divided by lambda^w. For
T(eta) = c_eta * Phi_0^{eta, circ} / lambda^w the question becomes whether c_eta * Phi_0^{eta, circ}(y^2)
lies in the span of the products prod_j (y^k_j - y^-k_j)/k_j, an exact linear system.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Optional

import sympy

from services.hurwitz import phi_circ, s_normalization, s_weight
from services.logger import get_logger_service
from services.partitions import Partition, enumerate_partitions
from utils.models import VerificationReport

logger_service = get_logger_service()

Monomial = tuple[int, ...]


def _product_vector(ks: Monomial) -> Dict[int, Fraction]:
    """prod_j (y^k_j - y^-k_j)/k_j as exponent -> coefficient."""
    vector = {0: Fraction(1)}
    for k in ks:
        step: Dict[int, Fraction] = {}
        for e, c in vector.items():
            for shift, sign in ((k, 1), (-k, -1)):
                step[e + shift] = step.get(e + shift, Fraction(0)) + c * Fraction(sign, k)
        vector = {e: c for e, c in step.items() if c}
    return vector


def target_vector(eta: Partition) -> Dict[int, Fraction]:
    """c_eta * Phi_0^{eta, circ} with x = y^2."""
    coefficient = phi_circ(0, eta.size).coefficient(eta)
    norm = s_normalization(eta)
    return {2 * e: c * norm for e, c in coefficient.terms.items()}


def s_polynomial_fit(eta: Partition, max_k: Optional[int] = None) -> Optional[Dict[Monomial, Fraction]]:
    """
    Express T(eta) as a polynomial in S(lambda), ..., S(max_k lambda), if possible.

    Args:
        eta: Nonempty partition
        max_k: Largest multiple of lambda allowed (defaults to |eta|)

    Returns:
        Optional[Dict[Monomial, Fraction]]: Coefficient of each monomial (k_1 <= ... <= k_w) in one
        solution with free parameters set to zero, or None if T(eta) is not in the span
    """
    max_k = max_k or eta.size
    w = s_weight(eta)
    monomials = list(combinations_with_replacement(range(1, max_k + 1), w))
    columns = [_product_vector(ks) for ks in monomials]
    target = target_vector(eta)
    exponents = sorted(set(target).union(*columns))

    def rational(value: Fraction) -> sympy.Rational:
        return sympy.Rational(value.numerator, value.denominator)

    A = sympy.Matrix([[rational(column.get(e, Fraction(0))) for column in columns] for e in exponents])
    b = sympy.Matrix([rational(target.get(e, Fraction(0))) for e in exponents])
    try:
        solution, parameters = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    if parameters.shape[0]:
        solution = solution.subs({p: 0 for p in parameters})
    fit = {}
    for ks, value in zip(monomials, solution):
        value = sympy.Rational(value)
        if value:
            fit[ks] = Fraction(int(value.p), int(value.q))
    return fit


def render_fit(fit: Dict[Monomial, Fraction]) -> str:
    if not fit:
        return "0"
    terms = []
    for ks, c in fit.items():
        factors = "*".join("S(λ)" if k == 1 else f"S({k}λ)" for k in ks) or "1"
        terms.append(f"{c}*{factors}" if c != 1 else factors)
    return " + ".join(terms)


def run_experiment(max_d: int) -> VerificationReport:
    """
    Report-only sweep over eta |- d, d <= max_d.

    Args:
        max_d: Largest degree

    Returns:
        VerificationReport: One `info` case per eta
    """
    report = VerificationReport(suite="s-conjecture")
    for d in range(1, max_d + 1):
        for eta in enumerate_partitions(d):
            fit = s_polynomial_fit(eta)
            if fit is None:
                logger_service.info(f"T{eta} is not a polynomial in S(λ)..S({d}λ)")
                report.add(f"{eta}", "info", note=f"T{eta} is not in the span of S(λ)..S({d}λ) monomials")
            else:
                report.add(f"{eta}", "info", note=f"T{eta} = {render_fit(fit)}")
    return report

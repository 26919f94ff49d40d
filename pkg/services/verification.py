"""
Verification suites behind `cutjoin verify`.

Each suite is a function of SuiteBounds returning a VerificationReport. Bounds left unset
fall back to the suite's full default, or to its desk-scale default under `quick`.
Per-degree sweeps go through run_parallel, so every worker function is top-level.
"""

from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Optional, Tuple

from services.characters import get_character_service
from services.coeffring import XLaurent, cosh_x, sinh_x
from services.conjecture import run_experiment
from services.hurwitz import (
    cutjoin_matrix,
    evolve_cutjoin,
    hurwitz_number,
    hurwitz_number_burnside,
    initial_values,
    phi_bullet,
    phi_circ,
    phi_circ_by_decompositions,
    remaining_branch_points,
    s_lambda_identities,
    simple_burnside,
    simple_connected_by_compositions,
    simple_specialize,
    u_poly,
    verify_cutjoin_phi,
)
from services.logger import get_logger_service
from services.marinovafa import (
    check_connected_forms,
    check_cutjoin_mv,
    check_evidence,
    check_golden,
    check_limit,
    check_rinit,
    check_vhook,
    r_connected,
)
from services.partitions import Partition, enumerate_partitions, partitions_up_to
from services.pseries import RAT, PSeries, central_character_action_check, cut_power, exp_p
from utils.case_middleware import guarded_suite, verification_case
from utils.config import get_settings
from utils.exceptions import UnknownSuiteError
from utils.helpers import monomial_str, run_parallel
from utils.models import SuiteBounds, VerificationReport

logger_service = get_logger_service()


def _bound(value: Optional[int], default: int, quick_default: int, quick: bool) -> int:
    if value is not None:
        return value
    return quick_default if quick else default


def _merge_all(suite: str, reports: List[VerificationReport]) -> VerificationReport:
    merged = VerificationReport(suite=suite)
    for report in reports:
        merged.merge(report)
    return merged


# === REPRESENTATION THEORY ===
def _prop_f_degree(d: int) -> VerificationReport:
    report = get_character_service().verify_prop_f(d)
    return VerificationReport(suite=report.suite).merge(report, prefix=f"d={d}")


@guarded_suite("prop-f")
def suite_prop_f(bounds: SuiteBounds) -> VerificationReport:
    max_d = _bound(bounds.max_d, 10, 6, bounds.quick)
    return _merge_all("prop-f", run_parallel(_prop_f_degree, range(1, max_d + 1), get_settings().jobs))


@guarded_suite("prop-cj")
def suite_prop_cj(bounds: SuiteBounds) -> VerificationReport:
    max_d = _bound(bounds.max_d, 8, 5, bounds.quick)
    nus = [nu for nu in partitions_up_to(max_d) if nu]
    return _merge_all("prop-cj", run_parallel(central_character_action_check, nus, get_settings().jobs))


@verification_case(lambda d, l: f"C^{l - 1} p{d}")
def _cut_power_case(d: int, l: int) -> bool:
    cut_power(d, l)
    return True


@guarded_suite("cp-lemma")
def suite_cp_lemma(bounds: SuiteBounds) -> VerificationReport:
    max_d = _bound(bounds.max_d, 10, 6, bounds.quick)
    report = VerificationReport(suite="cp-lemma")
    for d in range(1, max_d + 1):
        for l in range(1, d + 1):
            _cut_power_case(report, d, l)
    return report


# === MARINO-VAFA ===
@guarded_suite("vhook")
def suite_vhook(bounds: SuiteBounds) -> VerificationReport:
    return check_vhook(_bound(bounds.max_d, 8, 5, bounds.quick))


@guarded_suite("mv-cutjoin")
def suite_mv_cutjoin(bounds: SuiteBounds) -> VerificationReport:
    D = _bound(bounds.D, 6, 4, bounds.quick)
    return check_cutjoin_mv(D, min(D, 3 if bounds.quick else 4))


@guarded_suite("mv-init")
def suite_mv_init(bounds: SuiteBounds) -> VerificationReport:
    return check_rinit(_bound(bounds.D, 6, 4, bounds.quick))


@guarded_suite("mv-evidence")
def suite_mv_evidence(bounds: SuiteBounds) -> VerificationReport:
    max_d = _bound(bounds.max_d, 8, 5, bounds.quick)
    return _merge_all("mv-evidence", run_parallel(check_evidence, range(1, max_d + 1), get_settings().jobs))


@guarded_suite("mv-limit")
def suite_mv_limit(bounds: SuiteBounds) -> VerificationReport:
    max_d = _bound(bounds.max_d, 6, 4, bounds.quick)
    r_connected(max_d)
    return _merge_all("mv-limit", [check_limit(mu, max_d) for mu in partitions_up_to(max_d) if mu])


@guarded_suite("mv-golden")
def suite_mv_golden(bounds: SuiteBounds) -> VerificationReport:
    return check_golden()


# === HURWITZ ===
@guarded_suite("phi-cutjoin")
def suite_phi_cutjoin(bounds: SuiteBounds) -> VerificationReport:
    D = _bound(bounds.D, 5, 4, bounds.quick)
    connected_D = min(D, 3 if bounds.quick else 4)
    report = VerificationReport(suite="phi-cutjoin")
    for h in (0, 1):
        report.merge(verify_cutjoin_phi(h, D, connected_D))
    return report


def genus0_golden() -> Dict[Tuple[bool, Partition], XLaurent]:
    """Closed forms of Phi_0 coefficients; (connected, eta) -> coefficient."""
    half = Fraction(1, 2)
    return {
        (False, Partition.of(1)): XLaurent.one(),
        (False, Partition.of(2)): sinh_x(1) * half,
        (False, Partition.of(1, 1)): cosh_x(1) * half,
        (False, Partition.of(3)): (cosh_x(3) - 1) * Fraction(1, 9),
        (False, Partition.of(2, 1)): sinh_x(3) * Fraction(1, 6),
        (False, Partition.of(1, 1, 1)): (cosh_x(3) + 2) * Fraction(1, 18),
        (False, Partition.of(4)): (sinh_x(6) - sinh_x(2) * 3) * Fraction(1, 48),
        (False, Partition.of(3, 1)): (cosh_x(6) - 1) * Fraction(1, 36),
        (False, Partition.of(2, 2)): (cosh_x(6) - cosh_x(2) * 3 + 2) * Fraction(1, 96),
        (False, Partition.of(2, 1, 1)): (sinh_x(6) + sinh_x(2) * 3) * Fraction(1, 48),
        (False, Partition.of(1, 1, 1, 1)): (cosh_x(6) + cosh_x(2) * 9 + 2) * Fraction(1, 288),
        (True, Partition.of(1)): XLaurent.one(),
        (True, Partition.of(2)): sinh_x(1) * half,
        (True, Partition.of(1, 1)): (cosh_x(1) - 1) * half,
        (True, Partition.of(3)): (cosh_x(3) - 1) * Fraction(1, 9),
        (True, Partition.of(2, 1)): sinh_x(3) * Fraction(1, 6) - sinh_x(1) * half,
        (True, Partition.of(1, 1, 1)): (cosh_x(3) - 1) * Fraction(1, 18) - (cosh_x(1) - 1) * half,
    }


def genus1_golden() -> Dict[Partition, XLaurent]:
    """Closed forms of the Phi_1^bullet coefficients through degree 3."""
    return {
        Partition.of(1): XLaurent.one(),
        Partition.of(2): sinh_x(1) * 2,
        Partition.of(1, 1): cosh_x(1) * 2,
        Partition.of(3): cosh_x(3) * 4 - 1,
        Partition.of(2, 1): sinh_x(3) * 6,
        Partition.of(1, 1, 1): cosh_x(3) * 2 + 1,
    }


GENUS1_AT_ZERO = {
    Partition.of(1): 1,
    Partition.of(2): 0,
    Partition.of(1, 1): 2,
    Partition.of(3): 3,
    Partition.of(2, 1): 0,
    Partition.of(1, 1, 1): 3,
}

GENUS0_P4_ERRATUM = (
    "genus 0, p4: the coefficient is (1/48)(sinh 6λ - 3 sinh 2λ); the printed 'sin 2λ' and the "
    "'+18e^{2λ} + 18e^{-2λ}' exponential line are typos for the odd combination -18e^{2λ} + 18e^{-2λ}"
)
GENUS1_ERRATUM = (
    "genus 1: the p3 coefficient is 4 cosh 3λ - 1 in both the disconnected and connected series "
    "(not 4 sinh 3λ - 1), and the p1^3 coefficient is 2 cosh 3λ + 1 (not 2 cosh λ + 1)"
)


@guarded_suite("phi-golden")
def suite_phi_golden(bounds: SuiteBounds) -> VerificationReport:
    report = VerificationReport(suite="phi-golden")
    for (connected, eta), expected in genus0_golden().items():
        actual = (phi_circ if connected else phi_bullet)(0, 4).coefficient(eta)
        form = "circ" if connected else "bullet"
        note = GENUS0_P4_ERRATUM if eta == Partition.of(4) and not connected else None
        report.check(
            f"h=0/{form}/{monomial_str(eta)}",
            actual == expected,
            witness=f"computed {actual.hyperbolic_str()}; expected {expected.hyperbolic_str()}",
            note=note,
        )

    for eta, expected in genus1_golden().items():
        actual = phi_bullet(1, 3).coefficient(eta)
        note = GENUS1_ERRATUM if eta == Partition.of(3) else None
        report.check(
            f"h=1/bullet/{monomial_str(eta)}",
            actual == expected,
            witness=f"computed {actual.hyperbolic_str()}; expected {expected.hyperbolic_str()}",
            note=note,
        )
    connected_p3 = phi_circ(1, 3).coefficient(Partition.of(3))
    report.check(
        "h=1/circ/p3",
        connected_p3 == genus1_golden()[Partition.of(3)],
        witness=f"computed {connected_p3.hyperbolic_str()}",
    )

    for d in range(1, 4):
        start = initial_values(1, d)
        for eta in enumerate_partitions(d):
            report.check(
                f"h=1/at-zero/{monomial_str(eta)}",
                start[eta] == GENUS1_AT_ZERO[eta],
                witness=f"Phi_1^{eta}(0) = {start[eta]}, expected {GENUS1_AT_ZERO[eta]}",
            )
    return report


def _routes_degree(task: Tuple[int, int]) -> VerificationReport:
    """Character-basis solution against Burnside and the cut-and-join ODE system at (h, d)."""
    h, d = task
    report = VerificationReport(suite="phi-routes")
    solution = evolve_cutjoin(h, d)
    partitions = enumerate_partitions(d)
    for eta in partitions:
        report.check(
            f"h={h}/evolve/{monomial_str(eta)}",
            solution[eta] == u_poly(h, eta),
            witness=f"evolved {solution[eta]}; Burnside {u_poly(h, eta)}",
        )

    matrix = cutjoin_matrix(d)
    for i, eta in enumerate(partitions):
        rhs = XLaurent.zero()
        for j, mu in enumerate(partitions):
            if matrix[i, j]:
                rhs = rhs + solution[mu] * int(matrix[i, j])
        report.check(
            f"h={h}/ode/{monomial_str(eta)}",
            solution[eta].derive() == rhs,
            witness=f"derivative {solution[eta].derive()}; matrix row {rhs}",
        )

    start = initial_values(h, d)
    for eta in partitions:
        report.check(
            f"h={h}/initial/{monomial_str(eta)}",
            solution[eta].at_zero() == start[eta],
            witness=f"value at 0 {solution[eta].at_zero()}; initial {start[eta]}",
        )

    for eta in partitions:
        r0 = remaining_branch_points(0, h, eta)
        g_min = (r0 % 2 - r0) // 2
        for g in range(g_min, g_min + 2):
            number = hurwitz_number(g, h, eta)
            oracle = hurwitz_number_burnside(g, h, eta)
            report.check(
                f"h={h}/burnside/g={g}/{monomial_str(eta)}",
                number == oracle and number >= 0 and (number * factorial(d)).denominator == 1,
                witness=f"series {number}; Burnside {oracle}",
            )
    return report


@guarded_suite("phi-routes")
def suite_phi_routes(bounds: SuiteBounds) -> VerificationReport:
    max_d = _bound(bounds.max_d, 6, 4, bounds.quick)
    tasks = [(h, d) for h in (0, 1, 2) for d in range(1, max_d + 1)]
    report = _merge_all("phi-routes", run_parallel(_routes_degree, tasks, get_settings().jobs))

    # Phi_0(0, p)^bullet = exp(p_1)
    init_D = max_d + 2
    expected = exp_p(PSeries.monomial(RAT, init_D, Partition.of(1)))
    for d in range(1, init_D + 1):
        start = initial_values(0, d)
        for eta in enumerate_partitions(d):
            report.check(
                f"h=0/exp-p1/{monomial_str(eta)}",
                start[eta] == expected.coefficient(eta),
                witness=f"Phi_0^{eta}(0) = {start[eta]}, exp(p1) gives {expected.coefficient(eta)}",
            )
    return report


@guarded_suite("s-identities")
def suite_s_identities(bounds: SuiteBounds) -> VerificationReport:
    return s_lambda_identities(_bound(bounds.N, 20, 12, bounds.quick))


@guarded_suite("s-conjecture")
def suite_s_conjecture(bounds: SuiteBounds) -> VerificationReport:
    return run_experiment(_bound(bounds.max_d, 5, 4, bounds.quick))


# === PARITY AND CONNECTED FORMS ===
@verification_case(lambda h, D, connected: f"h={h}/{'circ' if connected else 'bullet'}/D={D}")
def _parity_case(h: int, D: int, connected: bool):
    series = (phi_circ if connected else phi_bullet)(h, D)
    violations = series.parity_violations()
    return not violations, "wrong parity at " + ", ".join(str(eta) for eta in violations)


@verification_case(lambda h, D, connected: f"h={h}/simple-{'circ' if connected else 'bullet'}/D={D}")
def _simple_even_case(h: int, D: int, connected: bool):
    odd = [d for d, c in simple_specialize(h, D, connected).items() if not c.is_even()]
    return not odd, f"not even in λ at q^{odd}"


@guarded_suite("parity")
def suite_parity(bounds: SuiteBounds) -> VerificationReport:
    D = _bound(bounds.D, 6, 4, bounds.quick)
    report = VerificationReport(suite="parity")
    for h in (0, 1, 2):
        for connected in (False, True):
            _parity_case(report, h, D, connected)
            _simple_even_case(report, h, D, connected)
        bullet = simple_specialize(h, D)
        for d in range(1, D + 1):
            report.check(
                f"h={h}/simple-burnside/q^{d}",
                bullet[d] == simple_burnside(h, d),
                witness=f"specialized {bullet[d]}; Burnside {simple_burnside(h, d)}",
            )
        connected = simple_specialize(h, D, connected=True)
        compositions = simple_connected_by_compositions(h, D)
        for d in range(1, D + 1):
            report.check(
                f"h={h}/simple-compositions/q^{d}",
                connected[d] == compositions[d],
                witness=f"specialized {connected[d]}; compositions {compositions[d]}",
            )
    return report


@guarded_suite("conn")
def suite_conn(bounds: SuiteBounds) -> VerificationReport:
    D = _bound(bounds.D, 6, 4, bounds.quick)
    decompositions_D = min(D, 3 if bounds.quick else 4)
    report = VerificationReport(suite="conn")
    for h in (0, 1):
        report.check(
            f"phi/h={h}/exp-log/D={D}",
            exp_p(phi_circ(h, D).series) == phi_bullet(h, D).series,
            witness="exp(log Phi^bullet) differs from Phi^bullet",
        )
        report.check(
            f"phi/h={h}/decompositions/D={D}",
            phi_circ_by_decompositions(h, D) == phi_circ(h, D).series,
            witness="decomposition sum differs from log",
        )
    report.merge(check_connected_forms(D, decompositions_D))
    return report


# === REGISTRY ===
SUITES: Dict[str, Callable[[SuiteBounds], VerificationReport]] = {
    "prop-f": suite_prop_f,
    "prop-cj": suite_prop_cj,
    "vhook": suite_vhook,
    "mv-cutjoin": suite_mv_cutjoin,
    "mv-init": suite_mv_init,
    "mv-evidence": suite_mv_evidence,
    "mv-limit": suite_mv_limit,
    "mv-golden": suite_mv_golden,
    "phi-cutjoin": suite_phi_cutjoin,
    "phi-golden": suite_phi_golden,
    "phi-routes": suite_phi_routes,
    "s-identities": suite_s_identities,
    "s-conjecture": suite_s_conjecture,
    "cp-lemma": suite_cp_lemma,
    "parity": suite_parity,
    "conn": suite_conn,
}

SUITE_NAMES = ("all",) + tuple(SUITES)


def run_suite(name: str, bounds: Optional[SuiteBounds] = None) -> VerificationReport:
    """
    Run one registered suite, or every suite for `all`.

    Args:
        name: Suite name
        bounds: Sweep bounds; defaults to the full bounds

    Returns:
        VerificationReport: For `all`, one merged report with case ids prefixed by suite

    Raises:
        UnknownSuiteError: If the name is not registered
    """
    bounds = bounds or SuiteBounds()
    if name == "all":
        report = VerificationReport(suite="all")
        for suite_name, runner in SUITES.items():
            logger_service.info(f"Running suite {suite_name}")
            report.merge(runner(bounds), prefix=suite_name)
        return report
    if name not in SUITES:
        raise UnknownSuiteError(f"Unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}")
    logger_service.info(f"Running suite {name}")
    report = SUITES[name](bounds)
    if report.ok:
        logger_service.success(f"{name}: {report.summary.passed} passed, {report.summary.info} info")
    else:
        logger_service.error(f"{name}: {report.summary.failed} of {report.summary.total} case(s) failed")
    return report

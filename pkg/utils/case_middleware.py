"""
Verification case middleware.

These decorators:
- Turn a predicate into a recorded pass/fail case on a VerificationReport
- Convert errors raised while checking into failed cases with the error text as witness
- Keep one crashing suite from aborting a whole `verify` run
"""

from functools import wraps
from typing import Any, Callable, Union

from services.logger import get_logger_service
from utils.exceptions import CutjoinError
from utils.models import CaseResult, VerificationReport

logger_service = get_logger_service()

CHECK_ERRORS = (CutjoinError, ArithmeticError, ValueError)


def verification_case(case_id: Union[str, Callable[..., str]]):
    """
    Decorator recording the outcome of a check as one case.

    The decorated function returns either a bool or a (bool, witness) pair; the wrapper
    takes the target report as its first argument.

    Args:
        case_id: Fixed id, or a function of the check's arguments building the id

    Usage:
        @verification_case(lambda nu: f"vhook/{nu}")
        def hook_case(nu):
            return v_product(nu) == v_hook(nu), str(nu)

        hook_case(report, Partition.of(2, 1))
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(report: VerificationReport, *args, **kwargs) -> CaseResult:
            cid = case_id(*args, **kwargs) if callable(case_id) else case_id
            try:
                outcome = func(*args, **kwargs)
            except CHECK_ERRORS as e:
                logger_service.warning(f"Case {cid} raised {type(e).__name__}: {e}")
                return report.add(cid, "fail", witness=f"{type(e).__name__}: {e}")

            holds, witness = outcome if isinstance(outcome, tuple) else (outcome, None)
            if not holds:
                logger_service.debug(f"Case {cid} failed")
            return report.check(cid, bool(holds), witness=witness)

        return wrapper

    return decorator


def guarded_suite(name: str):
    """
    Decorator for suite runners returning a VerificationReport.

    An error escaping the runner becomes a single failed case `<name>/error`.
    """
    def decorator(func: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
        @wraps(func)
        def wrapper(*args, **kwargs: Any) -> VerificationReport:
            try:
                return func(*args, **kwargs)
            except CHECK_ERRORS as e:
                logger_service.error(f"Suite {name} aborted: {type(e).__name__}: {e}")
                report = VerificationReport(suite=name)
                report.add("error", "fail", witness=f"{type(e).__name__}: {e}")
                return report

        return wrapper

    return decorator

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from services.logger import get_logger_service
from services.partitions import Partition
from utils.exceptions import PartitionError

logger_service = get_logger_service()

T = TypeVar("T")
R = TypeVar("R")


def parse_eta(text: str) -> Partition:
    """
    Parse a partition given on the command line.

    Accepts comma-separated parts in any order ("2,1,1" or "1,2,1") and the
    exponent shorthand "1^2,2". An empty string or "()" is the empty partition.

    Raises:
        PartitionError: If a part is not a positive integer
    """
    cleaned = text.strip().strip("()").replace(" ", "")
    if not cleaned:
        return Partition()
    parts: List[int] = []
    for token in cleaned.split(","):
        value, _, exponent = token.partition("^")
        try:
            part = int(value)
            count = int(exponent) if exponent else 1
        except ValueError:
            raise PartitionError(f"Cannot parse {token!r} in {text!r}") from None
        if part <= 0 or count < 0:
            raise PartitionError(f"Parts must be positive integers, got {token!r}")
        parts.extend([part] * count)
    return Partition.from_parts(parts)


def run_parallel(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> List[R]:
    """
    Map a picklable top-level function over items, preserving input order.

    Args:
        fn: Function to apply
        items: Inputs
        jobs: Worker processes; 1 or less runs inline

    Returns:
        List[R]: fn(item) for every item, in input order
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    workers = min(jobs, len(items))
    logger_service.debug(f"Running {len(items)} task(s) of {getattr(fn, '__name__', fn)} on {workers} worker(s)")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))


def monomial_str(mu: Partition) -> str:
    """p_mu as text, e.g. p1^2*p2 for (2,1,1)."""
    if not mu:
        return "1"
    factors = []
    for j in sorted(mu.multiplicities):
        m = mu.multiplicities[j]
        factors.append(f"p{j}" + (f"^{m}" if m > 1 else ""))
    return "*".join(factors)


def render_table(rows: List[List[int]], labels: Optional[List[str]] = None) -> str:
    """Right-aligned integer matrix with optional row labels."""
    width = max((len(str(v)) for row in rows for v in row), default=1)
    label_width = max((len(label) for label in labels), default=0) if labels else 0
    lines = []
    for i, row in enumerate(rows):
        body = " ".join(str(v).rjust(width) for v in row)
        lines.append(f"{labels[i].ljust(label_width)}  {body}" if labels else body)
    return "\n".join(lines)

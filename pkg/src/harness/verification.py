from concurrent.futures import ThreadPoolExecutor
from logging import getLogger
from time import perf_counter
from typing import Iterable, List, Optional

from src.closedform._types import ClosedFormValue
from src.closedform.dispatch import closed_form
from src.cyclotomic._types import FloatMode
from src.cyclotomic.embeddings import to_complex_float
from src.harness.report import VerificationReport
from src.sums.base import SumFamily
from src.sums.evaluation import eval_direct_exact, eval_direct_float
from src.sums.exceptions import DecompositionError

logger = getLogger(__name__)


def verify_identity(family: SumFamily, float_check: bool = True, max_field_order: Optional[int] = None,
                    float_mode: FloatMode = 'double', mp_dps: int = 50) -> VerificationReport:
    """
    Evaluates the family directly and through its closed form and compares the two exactly.
    Hypothesis violations give a rejected report instead of raising.
    """
    report = VerificationReport(family=family)
    start = perf_counter()
    try:
        report.rhs_exact = closed_form(family)
        exact = eval_direct_exact(family, max_field_order=max_field_order)
        report.lhs_exact = ClosedFormValue.from_element(exact, family.k)
        if report.lhs_exact is None:
            raise DecompositionError(f"{family.label} does not evaluate to c*sqrt({family.k}) + t")
        report.equal = report.lhs_exact == report.rhs_exact

        if float_check:
            exact_float = to_complex_float(exact, mode=float_mode, dps=mp_dps)
            direct_float = eval_direct_float(family)
            report.float_residual = abs(direct_float - exact_float) / max(1.0, abs(exact_float))

        if not report.equal:
            logger.error(f"{family.label}: direct {report.lhs_exact} != closed form {report.rhs_exact}")
    except ValueError as e:
        logger.warning(f"{family.label} rejected: {e}")
        report.rejected = str(e)
    except ArithmeticError as e:
        logger.error(f"{family.label} failed", exc_info=True)
        report.error = str(e)
    report.runtime_ms = (perf_counter() - start) * 1000
    return report


def run_grid(families: Iterable[SumFamily], threads: int = 1, **verify_kwargs) -> List[VerificationReport]:
    """
    verify_identity over every family; the output keeps the input order
    """
    families = list(families)
    if not families:
        return []
    logger.info(f"verifying {len(families)} sums on {threads} thread(s)")
    if threads <= 1:
        return [verify_identity(family, **verify_kwargs) for family in families]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda family: verify_identity(family, **verify_kwargs), families))

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from src.closedform._types import ClosedFormValue
from src.sums.base import SumFamily


@dataclass
class VerificationReport:
    """
    Outcome of one identity check. `rejected` holds the reason when the input
    violates a hypothesis; `error` holds it when the evaluation itself failed.
    """
    family: SumFamily
    lhs_exact: Optional[ClosedFormValue] = None
    rhs_exact: Optional[ClosedFormValue] = None
    equal: bool = False
    float_residual: Optional[float] = None
    paper_expected: Optional[ClosedFormValue] = None
    paper_citation: Optional[str] = None
    matches_paper: Optional[bool] = None
    known_erratum: bool = False
    runtime_ms: float = 0.0
    rejected: Optional[str] = None
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.rejected is None and self.error is None and self.equal

    @property
    def suspected_erratum(self) -> bool:
        return self.passed and self.matches_paper is False

    def render_text(self) -> str:
        label = self.family.label
        if self.rejected is not None:
            return f"{label}  REJECTED: {self.rejected}"
        if self.error is not None:
            return f"{label}  ERROR: {self.error}"
        line = f"{label} = {self.lhs_exact.render()}  [exact]  {'PASS' if self.equal else 'FAIL'}"
        if not self.equal:
            line += f"  (closed form {self.rhs_exact.render()})"
        if self.paper_expected is not None:
            verdict = 'matches' if self.matches_paper else 'suspected erratum'
            line += f"  paper: {self.paper_expected.render()} ({verdict})"
        return line


def value_record(value: Optional[ClosedFormValue]) -> Optional[Dict[str, int]]:
    if value is None:
        return None
    return {
        'sqrt_coeff_num': int(value.sqrt_coeff.p),
        'sqrt_coeff_den': int(value.sqrt_coeff.q),
        'rat_num': int(value.rational_part.p),
        'rat_den': int(value.rational_part.q),
    }


def to_record(report: VerificationReport) -> Dict[str, Any]:
    """Serialization record, keys in a fixed order"""
    return {
        'family_tag': report.family.tag.value,
        'k': report.family.k,
        'params': list(report.family.params),
        'lhs': value_record(report.lhs_exact),
        'rhs': value_record(report.rhs_exact),
        'equal': report.equal,
        'float_residual': report.float_residual,
        'paper_citation': report.paper_citation,
        'matches_paper': report.matches_paper,
        'runtime_ms': round(report.runtime_ms, 3),
        'rejected': report.rejected,
        'error': report.error,
    }


def to_json(reports: Sequence[VerificationReport]) -> str:
    return json.dumps([to_record(r) for r in reports], indent=2)


def _flat_record(report: VerificationReport) -> Dict[str, Any]:
    record = to_record(report)
    record['params'] = ','.join(str(v) for v in record['params'])
    for side in ('lhs', 'rhs'):
        values = record.pop(side) or {}
        for key in ('sqrt_coeff_num', 'sqrt_coeff_den', 'rat_num', 'rat_den'):
            record[f"{side}_{key}"] = values.get(key)
    return record


def to_dataframe(reports: Sequence[VerificationReport]) -> pd.DataFrame:
    columns = list(_flat_record_columns())
    return pd.DataFrame([_flat_record(r) for r in reports], columns=columns)


def _flat_record_columns() -> List[str]:
    sides = [f"{side}_{key}" for side in ('lhs', 'rhs')
             for key in ('sqrt_coeff_num', 'sqrt_coeff_den', 'rat_num', 'rat_den')]
    return (['family_tag', 'k', 'params'] + sides
            + ['equal', 'float_residual', 'paper_citation', 'matches_paper', 'runtime_ms', 'rejected', 'error'])


def to_csv(reports: Sequence[VerificationReport]) -> str:
    return to_dataframe(reports).to_csv(index=False)


def to_text(reports: Sequence[VerificationReport]) -> str:
    return '\n'.join(r.render_text() for r in reports)


def summarize(reports: Sequence[VerificationReport]) -> Dict[str, int]:
    return {
        'total': len(reports),
        'passed': sum(r.passed for r in reports),
        'failed': sum(r.rejected is None and not r.passed for r in reports),
        'rejected': sum(r.rejected is not None for r in reports),
        'suspected_errata': sum(r.suspected_erratum for r in reports),
    }


RENDERERS = {
    'text': to_text,
    'json': to_json,
    'csv': to_csv,
}

"""Published evaluations of the sums, checked one report per printed value."""
from logging import getLogger
from typing import List, NamedTuple, Tuple

from sympy import Rational

from src.closedform._types import ClosedFormValue
from src.harness.report import VerificationReport
from src.harness.verification import run_grid
from src.sums.base import FamilyTag
from src.sums.families import make_family

logger = getLogger(__name__)


class TableEntry(NamedTuple):
    tag: FamilyTag
    k: int
    params: Tuple[int, ...]
    expected: ClosedFormValue
    citation: str
    known_erratum: bool = False


def _root(k: int, coefficient, citation: str, printed_k: int = None, known_erratum: bool = False):
    return ClosedFormValue(printed_k or k, Rational(coefficient), Rational(0)), citation, known_erratum


def _rational(k: int, value, citation: str):
    return ClosedFormValue(k, Rational(0), Rational(value)), citation, False


def _entry(tag: FamilyTag, k: int, params: Tuple[int, ...], printed) -> TableEntry:
    expected, citation, known_erratum = printed
    return TableEntry(tag, k, params, expected, citation, known_erratum)


PAPER_TABLE: List[TableEntry] = [
    _entry(FamilyTag.IDENT1, 7, (), _root(7, 2, 'introductory sine identity at k=7')),
    _entry(FamilyTag.IDENT2, 7, (), _rational(7, 0, 'introductory sine-square identity at k=7')),
    _entry(FamilyTag.S1_EVEN, 5, (1, 2), _root(5, 4, 'cos(2x)/cos^2(x) sum at k=5')),
    _entry(FamilyTag.COS_SQ, 5, (), _root(5, Rational(1, 4), 'cos^2(pi/5) - cos^2(2pi/5) at k=5')),
] + [
    _entry(FamilyTag.S2, k, (), _root(k, c, f"secant-square table, k={k}"))
    for k, c in ((5, -4), (13, -20), (17, 24), (29, -60))
] + [
    _entry(FamilyTag.S3, k, (), _root(k, c, f"triple-sine table, k={k}"))
    for k, c in ((13, 13), (17, 19), (29, 3), (37, 13))
] + [
    _entry(FamilyTag.S4, k, (b, d), _root(k, c, f"S4 table, (b,d,k)=({b},{d},{k})"))
    for b, d, k, c in ((3, 1, 7, 4), (1, 3, 7, 4), (3, 1, 11, 0), (1, 3, 11, -8))
] + [
    _entry(FamilyTag.S5, 7, (1,), _root(7, 0, 'S5 table, (b,k)=(1,7)')),
    # printed as 8*sqrt(11); the closed form and a float sum both give 4*sqrt(11)
    _entry(FamilyTag.S5, 11, (1,), _root(11, 8, 'S5 table, (b,k)=(1,11)', known_erratum=True)),
    _entry(FamilyTag.S5, 19, (1,), _root(19, 4, 'S5 table, (b,k)=(1,19)')),
    _entry(FamilyTag.S5, 23, (1,), _root(23, 0, 'S5 table, (b,k)=(1,23)')),
    _entry(FamilyTag.S5, 7, (3,), _root(7, -4, 'S5 table, (b,k)=(3,7)')),
    _entry(FamilyTag.S5, 11, (3,), _root(11, 8, 'S5 table, (b,k)=(3,11)')),
    # printed with the wrong modulus: 8*sqrt(11) for k=19
    _entry(FamilyTag.S5, 19, (3,), _root(19, 8, 'S5 table, (b,k)=(3,19)', printed_k=11, known_erratum=True)),
    _entry(FamilyTag.S5, 23, (3,), _root(23, -4, 'S5 table, (b,k)=(3,23)')),
] + [
    _entry(FamilyTag.S7, k, (a, b), _root(k, c, f"S7 table, (a,b,k)=({a},{b},{k})"))
    for a, b, k, c in ((4, 1, 7, Rational(3, 4)), (4, 1, 11, Rational(3, 4)),
                       (8, 3, 7, Rational(19, 64)), (8, 3, 11, Rational(49, 64)))
] + [
    _entry(FamilyTag.S8, k, (7, 2), _rational(k, value, f"S8 table, (a,b,k)=(7,2,{k})"))
    for k, value in ((7, -57), (11, -64), (13, -64), (19, -64))
] + [
    _entry(FamilyTag.S9, k, (7, 3), _rational(k, value, f"S9 table, (a,b,k)=(7,3,{k})"))
    for k, value in ((7, -1369), (11, -2162), (13, -2555), (19, -3734))
]


def run_paper_tables(threads: int = 1, **verify_kwargs) -> List[VerificationReport]:
    """
    One report per printed value, with the printed value attached and compared
    """
    families = [make_family(entry.tag, entry.k, entry.params) for entry in PAPER_TABLE]
    reports = run_grid(families, threads=threads, **verify_kwargs)

    for entry, report in zip(PAPER_TABLE, reports):
        report.paper_expected = entry.expected
        report.paper_citation = entry.citation
        report.known_erratum = entry.known_erratum
        if report.lhs_exact is not None:
            report.matches_paper = report.lhs_exact == entry.expected
        if report.suspected_erratum:
            logger.warning(f"{report.family.label}: computed {report.lhs_exact}, printed {entry.expected}"
                           f" (suspected erratum)")
    return reports

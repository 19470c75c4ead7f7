"""Signed representation counts P_e(n) - P_o(n) of the general product sums.

The counts are the coefficients of the generating series

    prod_l (1 - mu^b_l) / (1 - mu^c_l) * prod_j (1 + mu^d_j) * (1 + mu)^(-a)

(times 1/(1 - mu) for the odd-character sums), which is how they are computed here.
"""
from typing import List

from sympy import Poly, Symbol, ZZ

from src.closedform._types import GeneralParams
from src.closedform.coefficients import binom

MU = Symbol('mu')


def _truncated(poly: Poly, length: int) -> Poly:
    return poly.rem(Poly(MU ** length, MU, domain=ZZ))


def _geometric(step: int, length: int) -> Poly:
    """1/(1 - mu^step) up to mu^(length-1)"""
    return Poly.from_dict({(m,): 1 for m in range(0, length, step)}, MU, domain=ZZ)


def _inverse_binomial_power(a: int, length: int) -> Poly:
    """(1 + mu)^(-a) up to mu^(length-1)"""
    return Poly.from_dict({(r,): (-1) ** r * binom(a - 1 + r, r) for r in range(length)}, MU, domain=ZZ)


def rep_count_series(p: GeneralParams, length: int, with_free_slot: bool = False) -> List[int]:
    """
    [P_e(n) - P_o(n) for n < length]; with_free_slot adds the unconstrained m0 >= 0 of the odd-character count
    """
    if length <= 0:
        return []
    series = Poly(1, MU, domain=ZZ)
    for b in p.b:
        series = _truncated(series * Poly(1 - MU ** b, MU, domain=ZZ), length)
    for c in p.c:
        series = _truncated(series * _geometric(c, length), length)
    for d in p.d:
        series = _truncated(series * Poly(1 + MU ** d, MU, domain=ZZ), length)
    if p.a:
        series = _truncated(series * _inverse_binomial_power(p.a, length), length)
    if with_free_slot:
        series = _truncated(series * _geometric(1, length), length)

    coefficients = [0] * length
    for (exponent,), coefficient in series.terms():
        coefficients[exponent] = int(coefficient)
    return coefficients


def rep_count_diff_even(n: int, p: GeneralParams) -> int:
    if n < 0:
        return 0
    return rep_count_series(p, n + 1)[n]


def rep_count_diff_odd(n: int, p: GeneralParams) -> int:
    if n < 0:
        return 0
    return rep_count_series(p, n + 1, with_free_slot=True)[n]

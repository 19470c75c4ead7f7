from itertools import product
from math import prod, sqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Rational

from src.characters.dirichlet import build_real_primitive
from src.closedform._types import ClosedFormValue, GeneralParams
from src.closedform.coefficients import (binom, class_number, coeff_C, coeff_E, coeff_F, coeff_H, coeff_I, coeff_S,
                                         coeff_T, g_of_chi)
from src.closedform.dispatch import AVAILABLE_CLOSED_FORMS, closed_form
from src.closedform.exceptions import HypothesisError
from src.closedform.general import general_even_rhs, validate_general
from src.closedform.representations import rep_count_diff_even, rep_count_diff_odd, rep_count_series
from src.cyclotomic.embeddings import as_sqrt_k_decomposition
from src.cyclotomic.field import get_context
from src.sums.base import FamilyTag
from src.sums.evaluation import sum_value
from src.sums.families import make_family
from tests.utils import float_character_sum, float_close


def test_binom():
    assert binom(5, 2) == 10
    assert binom(7, 0) == binom(7, 7) == 1
    assert binom(3, 5) == binom(-1, 0) == binom(4, -1) == 0


@pytest.mark.parametrize('k, h', [(7, 1), (11, 1), (15, 2), (19, 1), (23, 3), (31, 3), (35, 2), (43, 1), (47, 5)])
def test_class_number(k, h):
    assert class_number(k) == h


@pytest.mark.parametrize('k', [3, 5, 13])
def test_class_number_hypotheses(k):
    with pytest.raises(HypothesisError):
        class_number(k)


@pytest.mark.parametrize('k, g', [(5, 4), (13, 20), (17, -24), (29, 60)])
def test_g_of_chi(k, g):
    assert g_of_chi(build_real_primitive(k)) == g


def test_coefficients_enforce_parity(chi5, chi7):
    with pytest.raises(HypothesisError, match='odd character'):
        coeff_C(1, 2, chi5)
    with pytest.raises(HypothesisError, match='even character'):
        coeff_E(2, 2, chi7)
    with pytest.raises(HypothesisError):
        coeff_F(2, 1, chi5)
    with pytest.raises(HypothesisError):
        coeff_H(3, chi5)
    with pytest.raises(HypothesisError):
        coeff_I(2, 1, chi7)
    with pytest.raises(HypothesisError):
        coeff_T(2, 4, 7)


def test_coeff_H_by_hand(chi5):
    # chi(2)/2 + chi(1)
    assert coeff_H(4, chi5) == Rational(1, 2)


def test_coeff_S_and_T_reproduce_power_sums():
    # sum_{n<k/2} sin^a(2 pi b n/k)/sin^a(2 pi n/k) = -b^a/2 + k S/2
    for k, a, b in [(7, 2, 2), (11, 3, 3), (9, 4, 2)]:
        direct = sum((np.sin(2 * np.pi * b * n / k) / np.sin(2 * np.pi * n / k)) ** a for n in range(1, (k + 1) // 2))
        assert float_close(direct, -b ** a / 2 + k * float(coeff_S(a, b, k)) / 2)
    for k, a, b in [(7, 2, 3), (11, 3, 5), (9, 2, 3)]:
        direct = sum((np.cos(2 * np.pi * b * n / k) / np.cos(2 * np.pi * n / k)) ** a for n in range(1, (k + 1) // 2))
        assert float_close(direct, -0.5 + k * float(coeff_T(a, b, k)) / 2)


def _factor_options(p, n, with_free_slot):
    """(exponent, sign) choices of each factor of the generating product, exponents capped at n"""
    options = []
    for b_l, c_l in zip(p.b, p.c):
        options.append([(0, 1), (b_l, -1)])
        options.append([(m * c_l, 1) for m in range(n // c_l + 1)])
    options += [[(0, 1), (d_j, 1)] for d_j in p.d]
    options += [[(r, (-1) ** r) for r in range(n + 1)] for _ in range(p.a)]
    if with_free_slot:
        options.append([(m, 1) for m in range(n + 1)])
    return options


def _brute_force_count(p, n, with_free_slot):
    total = 0
    for choice in product(*_factor_options(p, n, with_free_slot)):
        if sum(e for e, _ in choice) == n:
            total += prod(s for _, s in choice)
    return total


general_params = st.builds(
    lambda a, bc, d: GeneralParams(a=a, b=tuple(b for b, _ in bc), c=tuple(c for _, c in bc), d=tuple(d)),
    st.integers(min_value=0, max_value=2),
    st.lists(st.tuples(st.integers(1, 4), st.integers(1, 4)), max_size=2),
    st.lists(st.integers(1, 4), max_size=2))


@settings(max_examples=40, deadline=None)
@given(p=general_params, n=st.integers(min_value=0, max_value=5))
def test_representation_counts_match_enumeration(p, n):
    assert rep_count_diff_even(n, p) == _brute_force_count(p, n, with_free_slot=False)
    assert rep_count_diff_odd(n, p) == _brute_force_count(p, n, with_free_slot=True)


def test_representation_counts_edges():
    p = GeneralParams(a=1, b=(3,), c=(1,), d=(1,))
    assert rep_count_diff_even(-1, p) == rep_count_diff_odd(-2, p) == 0
    assert rep_count_series(p, 0) == []
    assert rep_count_series(GeneralParams(a=0), 4) == [1, 0, 0, 0]


@pytest.mark.parametrize('value, text', [
    (ClosedFormValue(29, Rational(-60)), '-60*sqrt(29)'),
    (ClosedFormValue(7, Rational(1)), 'sqrt(7)'),
    (ClosedFormValue(7, Rational(-1)), '-sqrt(7)'),
    (ClosedFormValue(7, Rational(3, 4)), '3/4*sqrt(7)'),
    (ClosedFormValue(13, Rational(0), Rational(-64)), '-64'),
    (ClosedFormValue(5, Rational(2), Rational(-1, 2)), '2*sqrt(5) - 1/2'),
    (ClosedFormValue(5, Rational(2), Rational(1, 3)), '2*sqrt(5) + 1/3'),
    (ClosedFormValue(7, Rational(0)), '0'),
])
def test_render(value, text):
    assert value.render() == text == str(value)


def test_closed_form_value_float():
    assert float_close(ClosedFormValue(7, Rational(2), Rational(1)).to_float(), 2 * sqrt(7) + 1)


def test_general_params_flat_form():
    p = GeneralParams.from_flat((1, 2, 3, 5, 1, 1, 1, 3))
    assert p == GeneralParams(a=1, b=(3, 5), c=(1, 1), d=(3,))
    assert (p.L, p.J, p.parity_sum, p.c_lcm) == (2, 1, 8, 1)
    assert p.to_flat() == (1, 2, 3, 5, 1, 1, 1, 3)
    assert GeneralParams(a=0, b=(1, 1), c=(2, 3)).c_lcm == 6


@pytest.mark.parametrize('flat', [(1,), (0, 2, 3, 1, 0), (0, 1, 3, 1, 2, 1)])
def test_general_params_malformed(flat):
    with pytest.raises(HypothesisError, match='a,L,b'):
        GeneralParams.from_flat(flat)


@pytest.mark.parametrize('k, p, odd, message', [
    (5, GeneralParams(a=0, b=(3,), c=(5,)), False, 'coprime to k'),
    (13, GeneralParams(a=0, b=(1, 1), c=(2, 4)), False, 'pairwise coprime'),
    (5, GeneralParams(a=0, b=(2,), c=(1,)), False, 'must be even'),
    (7, GeneralParams(a=0, b=(3,), c=(1,)), True, 'must be even'),
    (5, GeneralParams(a=3, b=(), c=(), d=(1,)), False, 'J \\+ 1'),
    (5, GeneralParams(a=2, b=(), c=(), d=(2, 4)), False, 'must be odd'),
    (7, GeneralParams(a=1, b=(5,), c=(2,), d=(1,)), True, 'double pole'),
    (5, GeneralParams(a=-1), False, 'nonnegative'),
])
def test_validate_general_rejects(k, p, odd, message):
    with pytest.raises(HypothesisError, match=message):
        validate_general(k, p, odd=odd)


def _float_general_sum(k, p, odd):
    chi = build_real_primitive(k)

    def term(x):
        value = prod(np.sin(b * x) / np.sin(c * x) for b, c in zip(p.b, p.c))
        value *= prod(np.cos(d * x) for d in p.d) / np.cos(x) ** p.a
        return value / np.sin(x) if odd else value

    return float_character_sum(chi, term)


@pytest.mark.parametrize('k', [5, 13])
@pytest.mark.parametrize('p', [
    GeneralParams(a=0, b=(3,), c=(1,)),
    GeneralParams(a=1, b=(3,), c=(1,), d=(1,)),
    GeneralParams(a=2, b=(3,), c=(1,), d=(1, 3)),
    GeneralParams(a=0, b=(4,), c=(2,)),
    GeneralParams(a=1, b=(3,), c=(2,), d=(2,)),
    GeneralParams(a=0, b=(2, 3), c=(1, 3), d=(1,)),
])
def test_general_even_closed_form_against_float_sum(k, p):
    value = closed_form(make_family(FamilyTag.GENERAL_EVEN, k, p.to_flat()))
    assert float_close(value.to_float(), _float_general_sum(k, p, odd=False))


@pytest.mark.parametrize('k', [7, 11])
@pytest.mark.parametrize('p', [
    GeneralParams(a=0, b=(2,), c=(1,)),
    GeneralParams(a=1, b=(1,), c=(1,), d=(2,)),
    GeneralParams(a=0, b=(3,), c=(2,)),
    GeneralParams(a=1, b=(1,), c=(3,), d=(4,)),
    GeneralParams(a=0, b=(), c=(), d=(1,)),
])
def test_general_odd_closed_form_against_float_sum(k, p):
    value = closed_form(make_family(FamilyTag.GENERAL_ODD, k, p.to_flat()))
    assert float_close(value.to_float(), _float_general_sum(k, p, odd=True))


def test_general_rhs_respects_field_cap():
    with pytest.raises(ValueError):
        general_even_rhs(13, GeneralParams(a=0, b=(2, 3), c=(1, 3), d=(1,)), max_field_order=100)


@pytest.mark.parametrize('tag, k, params, expected', [
    ('S2', 29, (), ClosedFormValue(29, Rational(-60))),
    ('S3', 37, (), ClosedFormValue(37, Rational(13))),
    ('S4', 11, (1, 3), ClosedFormValue(11, Rational(-8))),
    ('S7', 7, (8, 3), ClosedFormValue(7, Rational(19, 64))),
    ('S8', 19, (7, 2), ClosedFormValue(19, Rational(0), Rational(-64))),
    ('S9', 13, (7, 3), ClosedFormValue(13, Rational(0), Rational(-2555))),
    ('Cot', 23, (), ClosedFormValue(23, Rational(3))),
    ('CosSq', 13, (), ClosedFormValue(13, Rational(1, 4))),
    ('CharOnly', 17, (), ClosedFormValue(17, Rational(0))),
    ('S1Even', 5, (1, 2), ClosedFormValue(5, Rational(4))),
    ('Ident1', 7, (), ClosedFormValue(7, Rational(2))),
])
def test_closed_form_values(tag, k, params, expected):
    assert closed_form(make_family(tag, k, params)) == expected


@pytest.mark.parametrize('tag, k, params, message', [
    ('S1Odd', 13, (1, 2), 'odd character'),
    ('S1Odd', 7, (2, 2), 'a must be odd'),
    ('S1Even', 5, (1, 3), 'b must be even'),
    ('S2', 7, (), 'even character'),
    ('S4', 3, (1, 1), 'k >= 7'),
    ('S7', 7, (3, 1), 'a must be even'),
    ('S9', 7, (2, 2), 'b > 1 odd'),
])
def test_closed_form_hypotheses(tag, k, params, message):
    with pytest.raises(HypothesisError, match=message):
        closed_form(make_family(tag, k, params))


def test_every_family_has_a_closed_form():
    assert set(AVAILABLE_CLOSED_FORMS) == set(FamilyTag)


def test_general_rhs_lives_in_the_right_field():
    p = GeneralParams(a=0, b=(4,), c=(2,))
    rhs = general_even_rhs(5, p)
    assert rhs.context.order == 40
    assert as_sqrt_k_decomposition(rhs, 5) is not None
    assert general_even_rhs(5, p, ctx=get_context(40)) == rhs


@pytest.mark.parametrize('k', [5, 13])
@pytest.mark.parametrize('a, b', [(1, 2), (1, 4), (1, 6), (2, 2), (3, 4)])
def test_cosine_power_closed_form_specialisations(k, a, b):
    family = make_family('S1Even', k, (a, b))
    assert closed_form(family) == sum_value(family)

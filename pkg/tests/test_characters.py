import warnings
from math import gcd, isqrt, prod, sqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import factorint

from src.characters._types import Parity
from src.characters.dirichlet import Character, build_real_primitive, is_squarefree, jacobi_symbol
from src.characters.exceptions import CharacterParityError, ModulusError
from src.characters.gauss import (check_primitive_factorization, cosine_gauss_sum, gauss_sum_at, gauss_sum_exact,
                                  gauss_sum_half, sqrt_sign_unit)
from src.cyclotomic.embeddings import sqrt_k_element
from src.cyclotomic.field import get_context
from tests.utils import EVEN_MODULI, ODD_MODULI, float_close, squares_symbol

SQUAREFREE_MODULI = (3, 5, 7, 11, 13, 15, 21, 33, 35, 39, 55)


def test_character_mod_7_table(chi7):
    assert chi7.values == (0, 1, 1, -1, 1, -1, -1)
    assert chi7.parity is Parity.ODD
    assert chi7(9) == chi7(2) == 1
    assert chi7(-1) == -1


def test_character_mod_5_table(chi5):
    assert chi5.values == (0, 1, -1, -1, 1)
    assert chi5.is_even and not chi5.is_odd


@given(n=st.integers(min_value=-500, max_value=500), k=st.sampled_from(SQUAREFREE_MODULI))
def test_jacobi_symbol_matches_tables_of_squares(n, k):
    expected = prod(squares_symbol(n, p) for p in factorint(k))
    assert jacobi_symbol(n, k) == expected


@pytest.mark.parametrize('k', [0, -3, 4, 10])
def test_jacobi_symbol_rejects_bad_modulus(k):
    with pytest.raises(ModulusError):
        jacobi_symbol(1, k)


def test_jacobi_symbol_modulus_one():
    assert jacobi_symbol(12, 1) == 1


def test_jacobi_symbol_raises_no_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter('error')
        assert [jacobi_symbol(n, 15) for n in range(-2, 3)] == [-1, -1, 0, 1, 1]


@pytest.mark.parametrize('k', SQUAREFREE_MODULI)
def test_real_primitive_character_is_a_character(k):
    chi = build_real_primitive(k)
    assert chi.invariant_violations() == []
    # parity follows k mod 4
    assert chi.is_even == (k % 4 == 1)


@pytest.mark.parametrize('k', [1, 2, 4, 9, 25, 45, 49])
def test_real_primitive_rejects_modulus(k):
    with pytest.raises(ModulusError):
        build_real_primitive(k)


def test_is_squarefree():
    assert is_squarefree(105)
    assert not is_squarefree(63)
    assert all(is_squarefree(k) == all(k % (p * p) for p in range(2, isqrt(k) + 1)) for k in range(2, 200))


def test_invariant_violations_reports_principal_and_parity():
    principal = Character(modulus=5, values=(0, 1, 1, 1, 1), parity=Parity.ODD)
    violations = principal.invariant_violations()
    assert 'character is principal' in violations
    assert any('parity flag' in v for v in violations)


def test_invariant_violations_reports_zero_mismatch():
    broken = Character(modulus=3, values=(1, 1, -1), parity=Parity.ODD)
    assert any('gcd(0, 3)' in v for v in broken.invariant_violations())


def test_require_parity(chi5, chi7):
    chi5.require_parity(Parity.EVEN, 'test')
    with pytest.raises(CharacterParityError, match='odd character'):
        chi5.require_parity(Parity.ODD, 'class number')
    with pytest.raises(ValueError):
        chi7.require_parity(Parity.EVEN, 'secant sum')


@pytest.mark.parametrize('k', EVEN_MODULI + ODD_MODULI + (15, 21))
def test_gauss_sum_squares_to_signed_modulus(k):
    chi = build_real_primitive(k)
    ctx = get_context(4 * k)
    assert gauss_sum_exact(1, chi, ctx) ** 2 == chi(-1) * k


@pytest.mark.slow
@pytest.mark.parametrize('k', [k for k in range(3, 61, 2) if is_squarefree(k)])
def test_primitive_factorization(k):
    assert check_primitive_factorization(build_real_primitive(k))


def test_principal_character_does_not_factor():
    principal = Character(5, (0, 1, 1, 1, 1), Parity.EVEN)
    assert not check_primitive_factorization(principal)


@pytest.mark.parametrize('k, expected', [(7, 2), (11, -6), (19, -6), (23, 6)])
def test_gauss_sum_half_odd(k, expected):
    chi = build_real_primitive(k)
    assert gauss_sum_half(chi) == expected
    assert gauss_sum_at(k, 2, chi).as_rational() == expected


@pytest.mark.parametrize('k', EVEN_MODULI)
def test_gauss_sum_half_vanishes_for_even_characters(k):
    assert gauss_sum_half(build_real_primitive(k)) == 0


def test_cosine_gauss_sum_is_sqrt_k(chi5):
    ctx = get_context(20)
    value = cosine_gauss_sum(chi5, ctx)
    assert value == sqrt_k_element(5, ctx)
    assert float_close(value.to_complex(), sqrt(5))


@pytest.mark.parametrize('k', (5, 7, 13, 11))
def test_sqrt_sign_unit_gives_positive_root(k):
    chi = build_real_primitive(k)
    ctx = get_context(4 * k)
    root = gauss_sum_exact(1, chi, ctx) * sqrt_sign_unit(chi, ctx)
    assert float_close(root.to_complex(), sqrt(k))


@settings(max_examples=25, deadline=None)
@given(n=st.integers(min_value=-30, max_value=30))
def test_gauss_sum_at_integer_shift(n):
    chi7, ctx28 = build_real_primitive(7), get_context(28)
    assert gauss_sum_exact(n, chi7, ctx28) == gauss_sum_exact(1, chi7, ctx28) * chi7(n)
    assert gcd(n, 7) > 1 or gauss_sum_exact(n, chi7, ctx28)

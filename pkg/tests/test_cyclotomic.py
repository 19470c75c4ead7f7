import cmath
from math import cos, pi, sin, sqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Rational, totient

from src.cyclotomic.embeddings import as_sqrt_k_decomposition, as_sqrt_k_multiple, sqrt_k_element, to_complex_float
from src.cyclotomic.exceptions import ContextMismatchError, CycloZeroDivisionError, FieldOrderError
from src.cyclotomic.field import get_context, make_context
from src.cyclotomic.trig import from_cos, from_sin, inv_cos, inv_root_minus_one, inv_sin
from tests.utils import float_close

ORDER = 60
small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7).map(
    lambda f: Rational(f.numerator, f.denominator))
elements = st.dictionaries(st.integers(min_value=0, max_value=ORDER - 1), small_rationals, max_size=6).map(
    lambda terms: get_context(ORDER).from_exponents(terms))


def test_context_degree_and_constants(ctx60):
    assert ctx60.degree == totient(60)
    assert ctx60.zeta(60) == ctx60.one
    assert ctx60.zeta(30) == -1
    assert ctx60.imaginary_unit ** 2 == -1
    assert ctx60.zeta(7) * ctx60.zeta(-7) == 1
    assert len(ctx60.coefficients) == ctx60.degree + 1


def test_get_context_is_shared_and_capped():
    assert get_context(44) is get_context(44)
    assert make_context(44) is not get_context(44)
    with pytest.raises(FieldOrderError, match='exceeds'):
        get_context(2004, max_order=2000)
    with pytest.raises(FieldOrderError):
        make_context(0)


def test_require_divisible(ctx28):
    ctx28.require_divisible(14)
    with pytest.raises(FieldOrderError, match='roots of unity'):
        ctx28.require_divisible(3, 'sin(pi/3)')


def test_context_mismatch(ctx28, ctx60):
    with pytest.raises(ContextMismatchError):
        ctx28.zeta() + ctx60.zeta()
    assert ctx28.one != ctx60.one


@pytest.mark.parametrize('exponent', [1, 2, 5, 15, 30, 59])
def test_reciprocal_of_root_minus_one(ctx60, exponent):
    reciprocal = ctx60.reciprocal_of_root_minus_one(exponent)
    assert reciprocal * (ctx60.zeta(exponent) - 1) == 1
    assert reciprocal == (ctx60.zeta(exponent) - 1).inv()


def test_reciprocal_of_one_minus_one_raises(ctx60):
    with pytest.raises(CycloZeroDivisionError):
        ctx60.reciprocal_of_root_minus_one(60)
    with pytest.raises(ZeroDivisionError):
        ctx60.zero.inv()


def test_rational_inverse_and_division(ctx60):
    assert ctx60.constant(Rational(3, 4)).inv() == Rational(4, 3)
    assert (ctx60.zeta(3) / ctx60.zeta(5)) == ctx60.zeta(-2)
    assert 1 / ctx60.zeta(1) == ctx60.zeta(59)
    assert ctx60.zeta(2) ** -3 == ctx60.zeta(-6)


@settings(max_examples=30, deadline=None)
@given(x=elements, y=elements, z=elements)
def test_field_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * x.inv() == 1


@settings(max_examples=30, deadline=None)
@given(x=elements, y=elements)
def test_embedding_is_a_ring_homomorphism(x, y):
    assert float_close((x * y).to_complex(), x.to_complex() * y.to_complex(), tol=1e-7)
    assert float_close((x + y).to_complex(), x.to_complex() + y.to_complex(), tol=1e-7)


def test_to_complex_modes(ctx60):
    expected = cmath.exp(2j * pi * 7 / 60)
    assert float_close(ctx60.zeta(7).to_complex(), expected, tol=1e-12)
    assert float_close(to_complex_float(ctx60.zeta(7), mode='mpmath', dps=40), expected, tol=1e-12)


@pytest.mark.parametrize('a', range(-4, 9))
def test_trig_values(a):
    ctx = get_context(28)
    assert float_close(from_sin(a, 7, ctx).to_complex(), sin(a * pi / 7), tol=1e-10)
    assert float_close(from_cos(a, 7, ctx).to_complex(), cos(a * pi / 7), tol=1e-10)
    assert from_sin(a, 7, ctx) ** 2 + from_cos(a, 7, ctx) ** 2 == 1


@pytest.mark.parametrize('a', [1, 2, 3, 6, 8, 13])
def test_trig_inverses(a):
    ctx = get_context(28)
    assert inv_sin(a, 7, ctx) * from_sin(a, 7, ctx) == 1
    assert inv_cos(a, 7, ctx) * from_cos(a, 7, ctx) == 1


def test_trig_needs_enough_roots_of_unity():
    with pytest.raises(FieldOrderError):
        from_sin(1, 7, get_context(14))
    with pytest.raises(FieldOrderError):
        from_cos(1, 5, get_context(28))


def test_inv_root_minus_one(ctx60):
    value = inv_root_minus_one(2, 5, ctx60)
    assert float_close(value.to_complex(), 1 / (cmath.exp(2j * pi * 2 / 5) - 1), tol=1e-10)


@pytest.mark.parametrize('k', [3, 5, 7, 13, 15])
def test_sqrt_k_element(k):
    ctx = get_context(4 * k)
    root = sqrt_k_element(k, ctx)
    assert root ** 2 == k
    assert float_close(root.to_complex(), sqrt(k))


def test_sqrt_k_decomposition(ctx28):
    root = sqrt_k_element(7, ctx28)
    assert as_sqrt_k_decomposition(root * 3 + Rational(1, 2), 7) == (3, Rational(1, 2))
    assert as_sqrt_k_decomposition(ctx28.constant(-64), 7) == (0, -64)
    assert as_sqrt_k_multiple(root * Rational(-3, 4), 7) == Rational(-3, 4)
    assert as_sqrt_k_decomposition(ctx28.zeta(1), 7) is None
    assert as_sqrt_k_multiple(ctx28.one, 7) is None

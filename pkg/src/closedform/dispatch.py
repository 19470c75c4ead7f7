from logging import getLogger
from typing import Callable, Optional

from sympy import Rational

from src.characters._types import Parity
from src.characters.dirichlet import Character, build_real_primitive
from src.characters.gauss import gauss_sum_half
from src.closedform._types import ClosedFormValue, GeneralParams
from src.closedform.coefficients import (binom, class_number, coeff_C, coeff_E, coeff_E_linear, coeff_F, coeff_H,
                                         coeff_I, coeff_J, coeff_S, coeff_T, g_of_chi)
from src.closedform.exceptions import HypothesisError
from src.closedform.general import general_even_rhs, general_odd_rhs
from src.cyclotomic.field import CycloElement
from src.sums.base import FamilyTag, SumFamily

logger = getLogger(__name__)

ZERO = Rational(0)


def _require(family: SumFamily, condition: bool, message: str):
    if not condition:
        raise HypothesisError(f"{family.label}: {message}")


def _character(family: SumFamily, parity: Parity) -> Character:
    chi = build_real_primitive(family.k)
    _require(family, chi.parity is parity,
             f"needs an {parity.value} character, the character mod {family.k} is {chi.parity.value}")
    if parity is Parity.ODD:
        _require(family, family.k >= 7, "odd-character closed forms need k >= 7")
    return chi


def _sqrt_multiple(family: SumFamily, coefficient) -> ClosedFormValue:
    return ClosedFormValue(family.k, Rational(coefficient), ZERO)


def _odd(value: int) -> bool:
    return value % 2 == 1


def _s1_odd(family: SumFamily) -> ClosedFormValue:
    a, b = family.params
    chi = _character(family, Parity.ODD)
    _require(family, a > 0 and _odd(a), f"a must be odd and positive, got a={a}")
    _require(family, b > 0 and not _odd(b), f"b must be even and positive, got b={b}")
    return _sqrt_multiple(family, b ** a * class_number(family.k) - 2 * coeff_C(a, b, chi))


def _s1_even(family: SumFamily) -> ClosedFormValue:
    a, b = family.params
    chi = _character(family, Parity.EVEN)
    _require(family, a >= 0, f"a must be nonnegative, got a={a}")
    _require(family, b > 0 and not _odd(b), f"b must be even and positive, got b={b}")
    if (a, b) == (1, 2):
        return _sqrt_multiple(family, g_of_chi(chi))
    correction = coeff_E_linear(b, chi) if a == 1 else coeff_E(a, b, chi)
    return _sqrt_multiple(family, -((-1) ** (a * b // 2) * g_of_chi(chi) + correction))


def _s2(family: SumFamily) -> ClosedFormValue:
    return _sqrt_multiple(family, -g_of_chi(_character(family, Parity.EVEN)))


def _s3(family: SumFamily) -> ClosedFormValue:
    chi = _character(family, Parity.EVEN)
    return _sqrt_multiple(family, sum(
        chi(m) * (binom(8 - m, 2) - binom(5 - m, 2) - binom(3 - m, 2)) for m in range(7)))


def _s4_value(family: SumFamily, b: int, d: int) -> ClosedFormValue:
    chi = _character(family, Parity.ODD)
    _require(family, b > 0 and d > 0 and _odd(b) and _odd(d), f"b and d must be odd and positive, got b={b}, d={d}")
    half = Rational((-1) ** ((b + d) // 2) * d * gauss_sum_half(chi), 2)
    return _sqrt_multiple(family, 4 * coeff_I(b, d, chi) + half + b * class_number(family.k))


def _s4(family: SumFamily) -> ClosedFormValue:
    b, d = family.params
    return _s4_value(family, b, d)


def _s5(family: SumFamily) -> ClosedFormValue:
    # sin(2bx) = 2 sin(bx) cos(bx) turns S5(b) into S4(b, b)
    b, = family.params
    return _s4_value(family, b, b)


def _s6_value(family: SumFamily, a: int, b: int, d: int) -> ClosedFormValue:
    chi = _character(family, Parity.ODD)
    _require(family, a >= 0, f"a must be nonnegative, got a={a}")
    _require(family, b >= 0 and not _odd(b), f"b must be even and nonnegative, got b={b}")
    _require(family, d > 0 and _odd(d), f"d must be odd and positive, got d={d}")
    h = class_number(family.k)
    if b > 0:
        return _sqrt_multiple(family, -Rational(2) ** (2 - b) * coeff_J(a, b, d, chi) + h)
    half = Rational((-1) ** (a * (d - 1) // 2) * d ** a * gauss_sum_half(chi), 2)
    return _sqrt_multiple(family, -4 * coeff_J(a, 0, d, chi) - half + h)


def _s6(family: SumFamily) -> ClosedFormValue:
    return _s6_value(family, *family.params)


def _s7(family: SumFamily) -> ClosedFormValue:
    a, b = family.params
    _require(family, a > 0 and not _odd(a), f"a must be even and positive, got a={a}")
    _require(family, b > 0 and _odd(b), f"b must be odd and positive, got b={b}")
    return _s6_value(family, 0, a, b)


def _cot(family: SumFamily) -> ClosedFormValue:
    _character(family, Parity.ODD)
    return _sqrt_multiple(family, class_number(family.k))


def _s8(family: SumFamily) -> ClosedFormValue:
    a, b = family.params
    _require(family, a > 0 and b > 1, f"needs a > 0 and b > 1, got a={a}, b={b}")
    k = family.k
    return ClosedFormValue(k, ZERO, Rational(-b ** a, 2) + Rational(k, 2) * coeff_S(a, b, k))


def _s9(family: SumFamily) -> ClosedFormValue:
    a, b = family.params
    _require(family, a > 0 and b > 1 and _odd(b), f"needs a > 0 and b > 1 odd, got a={a}, b={b}")
    k = family.k
    return ClosedFormValue(k, ZERO, Rational(-1, 2) + Rational(k, 2) * coeff_T(a, b, k))


def _cos_ratio(family: SumFamily) -> ClosedFormValue:
    a, b = family.params
    chi = _character(family, Parity.EVEN)
    _require(family, a > 0 and b > 0 and _odd(a) and _odd(b), f"a and b must be odd and positive, got a={a}, b={b}")
    return _sqrt_multiple(family, coeff_F(a, b, chi))


def _cos_power(family: SumFamily) -> ClosedFormValue:
    a, = family.params
    chi = _character(family, Parity.EVEN)
    _require(family, a > 0 and _odd(a), f"a must be odd and positive, got a={a}")
    return _sqrt_multiple(family, coeff_F(a, 1, chi))


def _char_only(family: SumFamily) -> ClosedFormValue:
    _character(family, Parity.EVEN)
    return _sqrt_multiple(family, 0)


def _sin_cot(family: SumFamily) -> ClosedFormValue:
    b, = family.params
    return _sqrt_multiple(family, coeff_H(b, _character(family, Parity.EVEN)))


def _cos_sq(family: SumFamily) -> ClosedFormValue:
    _character(family, Parity.EVEN)
    return _sqrt_multiple(family, Rational(1, 4))


def _triple_sine(family: SumFamily) -> ClosedFormValue:
    a, d, j_count = family.params
    _require(family, a >= 0 and d > 0 and j_count >= 0, f"needs a >= 0, d > 0, J >= 0, got {family.params}")
    p = GeneralParams(a=a, b=(3, 5, 7), c=(1, 1, 1), d=(d,) * j_count)
    return _from_rhs(family, general_even_rhs(family.k, p))


def _ident1(family: SumFamily) -> ClosedFormValue:
    # the k = 7 case of the S1Odd sum with a = 1, b = 4: sqrt(7) * (4 h(-7) - 2)
    return _sqrt_multiple(family, 4 * class_number(7) - 2)


def _ident2(family: SumFamily) -> ClosedFormValue:
    return ClosedFormValue(family.k, ZERO, ZERO)


def _from_rhs(family: SumFamily, rhs: CycloElement) -> ClosedFormValue:
    value = ClosedFormValue.from_element(rhs, family.k)
    if value is None:
        logger.error(f"{family.label}: right-hand side {rhs} is not of the form c*sqrt(k) + t")
        raise ArithmeticError(f"{family.label}: right-hand side outside Q + Q*sqrt({family.k})")
    return value


def _general_even(family: SumFamily) -> ClosedFormValue:
    return _from_rhs(family, general_even_rhs(family.k, family.general_params))


def _general_odd(family: SumFamily) -> ClosedFormValue:
    return _from_rhs(family, general_odd_rhs(family.k, family.general_params))


AVAILABLE_CLOSED_FORMS = {
    FamilyTag.S1_ODD: _s1_odd,
    FamilyTag.S1_EVEN: _s1_even,
    FamilyTag.S2: _s2,
    FamilyTag.S3: _s3,
    FamilyTag.S4: _s4,
    FamilyTag.S5: _s5,
    FamilyTag.S6: _s6,
    FamilyTag.S7: _s7,
    FamilyTag.S8: _s8,
    FamilyTag.S9: _s9,
    FamilyTag.GENERAL_EVEN: _general_even,
    FamilyTag.GENERAL_ODD: _general_odd,
    FamilyTag.IDENT1: _ident1,
    FamilyTag.IDENT2: _ident2,
    FamilyTag.COS_POWER: _cos_power,
    FamilyTag.SIN_COT: _sin_cot,
    FamilyTag.COS_SQ: _cos_sq,
    FamilyTag.CHAR_ONLY: _char_only,
    FamilyTag.COS_RATIO: _cos_ratio,
    FamilyTag.TRIPLE_SINE: _triple_sine,
    FamilyTag.COT: _cot,
}


def closed_form(family: SumFamily) -> ClosedFormValue:
    """
    Exact closed-form value of the family's sum; HypothesisError names the failed condition
    """
    evaluate: Optional[Callable[[SumFamily], ClosedFormValue]] = AVAILABLE_CLOSED_FORMS.get(family.tag)
    if evaluate is None:
        raise HypothesisError(f"no closed form for {family.tag}")
    return evaluate(family)

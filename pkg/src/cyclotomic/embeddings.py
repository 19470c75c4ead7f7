from functools import lru_cache
from logging import getLogger
from math import lcm
from typing import Optional, Tuple

from sympy import Rational

from src.characters.dirichlet import build_real_primitive
from src.characters.gauss import gauss_sum_exact, sqrt_sign_unit
from src.cyclotomic._types import FloatMode
from src.cyclotomic.field import CycloElement, FieldContext

logger = getLogger(__name__)

SIGN_TOLERANCE = 1e-9


@lru_cache(maxsize=None)
def sqrt_k_element(k: int, ctx: FieldContext) -> CycloElement:
    """
    The positive real sqrt(k) inside Q(zeta_M), built from the Gauss sum of the
    real primitive character mod k (G = sqrt(k) for even, i*sqrt(k) for odd characters)
    """
    ctx.require_divisible(lcm(4, 2 * k), f"sqrt({k})")
    chi = build_real_primitive(k)
    root = gauss_sum_exact(1, chi, ctx) * sqrt_sign_unit(chi, ctx)

    value = root.to_complex()
    if value.real <= 0 or abs(value.imag) > SIGN_TOLERANCE:
        logger.error(f"sqrt({k}) in Q(zeta_{ctx.order}) embeds as {value}")
        raise ArithmeticError(f"Gauss-sum square root of {k} is not the positive real root")
    return root


def as_rational(x: CycloElement) -> Optional[Rational]:
    return x.as_rational()


def as_sqrt_k_multiple(x: CycloElement, k: int) -> Optional[Rational]:
    """
    c with x = c*sqrt(k), or None when x is not a rational multiple of sqrt(k)
    """
    root = sqrt_k_element(k, x.context)
    return (x * root * Rational(1, k)).as_rational()


def as_sqrt_k_decomposition(x: CycloElement, k: int) -> Optional[Tuple[Rational, Rational]]:
    """
    (c, t) with x = c*sqrt(k) + t, or None when x lies outside Q + Q*sqrt(k)
    """
    rational = x.as_rational()
    if rational is not None:
        return Rational(0), rational

    root_coeffs = sqrt_k_element(k, x.context).coeffs
    pivot = next((j for j in range(1, len(root_coeffs)) if root_coeffs[j] != 0), None)
    if pivot is None:
        # k = 1 only, where sqrt(k) is rational itself
        return None
    sqrt_coeff = x.coeffs[pivot] / root_coeffs[pivot]
    rational_part = (x - sqrt_k_element(k, x.context) * sqrt_coeff).as_rational()
    if rational_part is None:
        return None
    return sqrt_coeff, rational_part


def to_complex_float(x: CycloElement, mode: FloatMode = 'double', dps: int = 50) -> complex:
    return x.to_complex(mode=mode, dps=dps)

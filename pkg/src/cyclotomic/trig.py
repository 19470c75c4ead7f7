"""Sines and cosines of rational multiples of pi as exact cyclotomic elements.

All angles are a*pi/k. With 2k | M, e^{i*a*pi/k} = zeta_M^(a*M/(2k)); the sine
additionally needs i, so lcm(4, 2k) | M.
"""
from math import lcm

from sympy import Rational

from src.cyclotomic.field import CycloElement, FieldContext

HALF = Rational(1, 2)


def _half_turn_exponent(a: int, k: int, ctx: FieldContext) -> int:
    ctx.require_divisible(2 * k, f"angles {a}*pi/{k}")
    return a * (ctx.order // (2 * k))


def from_cos(a: int, k: int, ctx: FieldContext) -> CycloElement:
    exponent = _half_turn_exponent(a, k, ctx)
    return (ctx.zeta(exponent) + ctx.zeta(-exponent)) * HALF


def from_sin(a: int, k: int, ctx: FieldContext) -> CycloElement:
    ctx.require_divisible(lcm(4, 2 * k), f"sin({a}*pi/{k})")
    exponent = _half_turn_exponent(a, k, ctx)
    # 1/(2i) = -i/2 = zeta^(-M/4)/2
    return (ctx.zeta(exponent) - ctx.zeta(-exponent)) * ctx.zeta(-ctx.order // 4) * HALF


def inv_sin(a: int, k: int, ctx: FieldContext) -> CycloElement:
    """
    1/sin(a*pi/k) = 2i * zeta^e / (zeta^(2e) - 1)
    """
    ctx.require_divisible(lcm(4, 2 * k), f"1/sin({a}*pi/{k})")
    exponent = _half_turn_exponent(a, k, ctx)
    return ctx.zeta(ctx.order // 4 + exponent) * ctx.reciprocal_of_root_minus_one(2 * exponent) * 2


def inv_cos(a: int, k: int, ctx: FieldContext) -> CycloElement:
    """
    1/cos(a*pi/k) = 2 * zeta^e / (zeta^(2e) + 1), and zeta^(2e) + 1 = zeta^(M/2) * (zeta^(2e - M/2) - 1)
    """
    exponent = _half_turn_exponent(a, k, ctx)
    half = ctx.order // 2
    return ctx.zeta(exponent - half) * ctx.reciprocal_of_root_minus_one(2 * exponent - half) * 2


def inv_root_minus_one(numer: int, denom: int, ctx: FieldContext) -> CycloElement:
    """1/(e^{2*pi*i*numer/denom} - 1)"""
    ctx.require_divisible(denom, f"e^(2*pi*i*{numer}/{denom})")
    return ctx.reciprocal_of_root_minus_one(numer * (ctx.order // denom))

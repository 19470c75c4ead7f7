from math import lcm
from typing import Optional

from src.characters.dirichlet import Character
from src.characters._types import Parity
from src.cyclotomic.field import CycloElement, FieldContext, get_context
from src.cyclotomic.trig import from_cos


def gauss_sum_at(numer: int, denom: int, chi: Character, ctx: Optional[FieldContext] = None) -> CycloElement:
    """
    G(z, chi) = sum_j chi(j) e^{2 pi i j z / k} at the rational point z = numer/denom

    Args:
        numer: numerator of z
        denom: denominator of z
        chi: character mod k
        ctx: field containing the (denom*k)-th roots of unity, Q(zeta_{4*denom*k}) by default
    """
    k = chi.modulus
    step = denom * k
    if ctx is None:
        ctx = get_context(4 * step)
    ctx.require_divisible(step, f"G({numer}/{denom}, chi mod {k})")
    scale = ctx.order // step
    terms = {}
    for j in range(1, k):
        if chi(j):
            exponent = scale * j * numer
            terms[exponent] = terms.get(exponent, 0) + chi(j)
    return ctx.from_exponents(terms)


def gauss_sum_exact(n: int, chi: Character, ctx: Optional[FieldContext] = None) -> CycloElement:
    return gauss_sum_at(n, 1, chi, ctx)


def gauss_sum_half(chi: Character) -> int:
    """G(k/2, chi) = sum_j chi(j) (-1)^j, an integer"""
    return sum(chi(j) * (-1) ** j for j in range(1, chi.modulus))


def check_primitive_factorization(chi: Character, ctx: Optional[FieldContext] = None) -> bool:
    """
    True iff G(n, chi) = chi(n) G(1, chi) for every residue n
    """
    if ctx is None:
        ctx = get_context(4 * chi.modulus)
    principal = gauss_sum_exact(1, chi, ctx)
    return all(gauss_sum_exact(n, chi, ctx) == principal * chi(n) for n in range(chi.modulus))


def cosine_gauss_sum(chi: Character, ctx: Optional[FieldContext] = None) -> CycloElement:
    """
    sum_{n<k} chi(n) cos(2 pi n / k), equal to sqrt(k) for even chi
    """
    k = chi.modulus
    if ctx is None:
        ctx = get_context(lcm(4, 2 * k))
    total = ctx.zero
    for n in range(1, k):
        if chi(n):
            total = total + from_cos(2 * n, k, ctx) * chi(n)
    return total


def sqrt_sign_unit(chi: Character, ctx: FieldContext) -> CycloElement:
    """Unit u with u * G(chi) = sqrt(k): 1 for even chi, -i for odd chi"""
    if chi.parity is Parity.EVEN:
        return ctx.one
    return -ctx.imaginary_unit

"""Right-hand sides of the general sine/cosine product sums.

For a character of modulus k the sum over 0 < n < k/2 of

    chi(n) * [1/sin(pi n/k), odd case only] * prod_l sin(b_l pi n/k)/sin(c_l pi n/k)
           * prod_j cos(d_j pi n/k) / cos^a(pi n/k)

equals sqrt(k) times a combination of the signed representation counts, one
residue term per pole n*k/c_l, the pole at k/2, and (odd case) the class number.
Everything is assembled exactly in Q(zeta_M) with M = 4*k*lcm(c).
"""
from logging import getLogger
from math import gcd, prod
from typing import Optional

from sympy import Rational

from src.characters._types import Parity
from src.characters.dirichlet import Character, build_real_primitive
from src.characters.gauss import gauss_sum_at, gauss_sum_half
from src.closedform._types import GeneralParams
from src.closedform.coefficients import class_number, g_of_chi
from src.closedform.exceptions import HypothesisError
from src.closedform.representations import rep_count_series
from src.cyclotomic.embeddings import sqrt_k_element
from src.cyclotomic.field import CycloElement, FieldContext, get_context
from src.cyclotomic.trig import from_cos, from_sin, inv_cos, inv_root_minus_one, inv_sin

logger = getLogger(__name__)


def _sin_half_turns(m: int) -> int:
    """sin(m*pi/2)"""
    return (0, 1, 0, -1)[m % 4]


def _cos_half_turns(m: int) -> int:
    """cos(m*pi/2)"""
    return (1, 0, -1, 0)[m % 4]


def field_order(k: int, p: GeneralParams) -> int:
    return 4 * k * p.c_lcm


def validate_general(k: int, p: GeneralParams, odd: bool):
    """
    Raises HypothesisError naming the first violated condition
    """
    label = 'odd-character product sum' if odd else 'even-character product sum'

    def require(condition: bool, message: str):
        if not condition:
            raise HypothesisError(f"{label}: {message}")

    require(p.a >= 0, f"a must be nonnegative, got {p.a}")
    require(len(p.b) == len(p.c), "b and c must have the same length L")
    require(all(x > 0 for x in p.b + p.c + p.d), "b, c and d must be positive")
    require(p.a <= p.J + 1, f"a <= J + 1 fails for a={p.a}, J={p.J}")
    require(all(dj % 2 == 1 for dj in p.d[:max(p.a - 1, 0)]), "d_1..d_(a-1) must be odd")
    require(all(gcd(cl, k) == 1 for cl in p.c), f"every c must be coprime to k={k}")
    require(all(gcd(p.c[i], p.c[j]) == 1 for i in range(p.L) for j in range(i + 1, p.L)),
            "the c must be pairwise coprime")
    parity_sum = p.parity_sum - 1 if odd else p.parity_sum
    require(parity_sum % 2 == 0, f"{'E - 1' if odd else 'E'} = {parity_sum} must be even")
    if odd:
        require(not (p.a >= 1 and any(cl % 2 == 0 for cl in p.c)),
                "an even c with a >= 1 puts a double pole at k/2")


def _character(k: int, parity: Parity) -> Character:
    chi = build_real_primitive(k)
    if chi.parity is not parity:
        raise HypothesisError(f"the {parity.value}-character product sum needs an {parity.value} character, "
                              f"the character mod {k} is {chi.parity.value}")
    return chi


def _representation_term(chi: Character, p: GeneralParams, half_degree: int, with_free_slot: bool) -> int:
    series = rep_count_series(p, half_degree + 1, with_free_slot=with_free_slot)
    return sum(chi(m) * series[half_degree - m] for m in range(half_degree + 1))


def _residue_terms(chi: Character, p: GeneralParams, ctx: FieldContext, odd: bool) -> CycloElement:
    """
    sum over poles n*k/c_M of (-1)^n/c_M * G(nk/c_M) * prod sin(n b/c_M) * prod cos(n d/c_M)
    / ((e^{2 pi i n k/c_M} - 1) [sin(n/c_M)] cos^a(n/c_M) prod_{l != M} sin(n c_l/c_M)), angles in units of pi
    """
    k = chi.modulus
    total = ctx.zero
    for index, c_m in enumerate(p.c):
        for n in range(1, c_m):
            if 2 * n == c_m and (p.a >= 1 or not odd):
                continue
            term = gauss_sum_at(n * k, c_m, chi, ctx) * inv_root_minus_one(n * k, c_m, ctx)
            for b_l in p.b:
                term = term * from_sin(n * b_l, c_m, ctx)
            for d_j in p.d:
                term = term * from_cos(n * d_j, c_m, ctx)
            for other, c_l in enumerate(p.c):
                if other != index:
                    term = term * inv_sin(n * c_l, c_m, ctx)
            if p.a:
                term = term * inv_cos(n, c_m, ctx) ** p.a
            if odd:
                term = term * inv_sin(n, c_m, ctx)
            total = total + term * Rational((-1) ** n, c_m)
    return total


def _half_turn_numerator(p: GeneralParams) -> int:
    """
    prod_{j<a} (-1)^((d_j-1)/2) d_j * prod_l sin(b_l pi/2) * prod_{j>=a} cos(d_j pi/2); 0 when a = 0
    """
    if p.a == 0:
        return 0
    leading = prod((-1) ** ((dj - 1) // 2) * dj for dj in p.d[:p.a - 1])
    return (leading
            * prod(_sin_half_turns(bl) for bl in p.b)
            * prod(_cos_half_turns(dj) for dj in p.d[p.a - 1:]))


def general_even_rhs(k: int, p: GeneralParams, ctx: Optional[FieldContext] = None,
                     max_field_order: Optional[int] = None) -> CycloElement:
    validate_general(k, p, odd=False)
    chi = _character(k, Parity.EVEN)
    if ctx is None:
        ctx = get_context(field_order(k, p), max_field_order)

    half_degree = p.parity_sum // 2
    bracket = ctx.constant(Rational(2) ** (p.a - p.J) * _representation_term(chi, p, half_degree, False))

    residues = _residue_terms(chi, p, ctx, odd=False)
    bracket = bracket - ctx.imaginary_unit * residues

    numerator = _half_turn_numerator(p)
    for index, c_m in enumerate(p.c):
        if c_m % 2 == 0 and numerator:
            others = prod(_sin_half_turns(c_l) for other, c_l in enumerate(p.c) if other != index)
            bracket = bracket + Rational((-1) ** (c_m // 2) * g_of_chi(chi) * numerator, c_m * others)

    logger.debug(f"even product sum rhs at k={k}, {p.to_flat()} assembled in Q(zeta_{ctx.order})")
    return sqrt_k_element(k, ctx) * bracket


def general_odd_rhs(k: int, p: GeneralParams, ctx: Optional[FieldContext] = None,
                    max_field_order: Optional[int] = None) -> CycloElement:
    validate_general(k, p, odd=True)
    chi = _character(k, Parity.ODD)
    h = class_number(k)
    if ctx is None:
        ctx = get_context(field_order(k, p), max_field_order)

    half_degree = (p.parity_sum - 1) // 2
    bracket = ctx.constant(-Rational(2) ** (1 + p.a - p.J) * _representation_term(chi, p, half_degree, True))
    bracket = bracket - _residue_terms(chi, p, ctx, odd=True)

    numerator = _half_turn_numerator(p)
    if numerator:
        denominator = 2 * prod(_sin_half_turns(c_l) for c_l in p.c)
        bracket = bracket - Rational(gauss_sum_half(chi) * numerator, denominator)

    bracket = bracket + Rational(h * prod(p.b), prod(p.c))

    logger.debug(f"odd product sum rhs at k={k}, {p.to_flat()} assembled in Q(zeta_{ctx.order})")
    return sqrt_k_element(k, ctx) * bracket

"""Combinatorial coefficients appearing in the closed forms.

Every sum with unbounded indices is enumerated over the finite lattice cut out
by its linear constraint. Characters are applied with periodic extension.
"""
from logging import getLogger

import gmpy2
from sympy import Rational

from src.characters._types import Parity
from src.characters.dirichlet import Character, build_real_primitive
from src.closedform.exceptions import HypothesisError

logger = getLogger(__name__)


def binom(n: int, r: int) -> int:
    """Combinatorial binomial: 0 unless 0 <= r <= n"""
    if n < 0 or r < 0 or r > n:
        return 0
    return int(gmpy2.comb(n, r))


def _require(condition: bool, message: str):
    if not condition:
        raise HypothesisError(message)


def _require_parity(chi: Character, parity: Parity, name: str):
    _require(chi.parity is parity,
             f"{name} needs an {parity.value} character, the character mod {chi.modulus} is {chi.parity.value}")


def class_number(k: int) -> int:
    """
    h(-k) = -(1/k) sum_{j<k} j chi(j) for the odd real primitive character mod k, k >= 7
    """
    _require(k >= 7, f"class number formula needs k >= 7, got k={k}")
    chi = build_real_primitive(k)
    _require_parity(chi, Parity.ODD, 'class number formula')
    h = Rational(-sum(j * chi(j) for j in range(1, k)), k)
    if not h.is_integer or h <= 0:
        logger.error(f"class number sum for k={k} gave {h}")
        raise ArithmeticError(f"class number sum for k={k} is not a positive integer: {h}")
    return int(h)


def g_of_chi(chi: Character) -> int:
    return sum((-1) ** j * j * chi(j) for j in range(1, chi.modulus))


def coeff_C(a: int, b: int, chi: Character) -> int:
    """
    sum over n + b*m + r = (ab - a - 1)/2 of (-1)^m chi(n) C(a, m) C(a + r, r)
    """
    _require_parity(chi, Parity.ODD, 'C coefficient')
    _require(a > 0 and a % 2 == 1, f"C coefficient needs a odd and positive, got a={a}")
    _require(b > 0 and b % 2 == 0, f"C coefficient needs b even and positive, got b={b}")
    total_degree = (a * b - a - 1) // 2
    total = 0
    for m in range(total_degree // b + 1):
        for r in range(total_degree - b * m + 1):
            n = total_degree - b * m - r
            total += (-1) ** m * chi(n) * binom(a, m) * binom(a + r, r)
    return total


def coeff_E(a: int, b: int, chi: Character) -> Rational:
    """
    2^(2-a) * sum over n + j + b*r = ab/2 of (-1)^j j chi(n) C(a, r)
    """
    _require_parity(chi, Parity.EVEN, 'E coefficient')
    _require(a >= 0, f"E coefficient needs a >= 0, got a={a}")
    _require(b > 0 and b % 2 == 0, f"E coefficient needs b even and positive, got b={b}")
    total_degree = a * b // 2
    total = 0
    for r in range(total_degree // b + 1):
        for j in range(total_degree - b * r + 1):
            n = total_degree - b * r - j
            total += (-1) ** j * j * chi(n) * binom(a, r)
    return Rational(4 * total, 2 ** a)


def coeff_E_linear(b: int, chi: Character) -> int:
    """E at a = 1: 2 * sum over n, j >= 1, n + j = b/2 of (-1)^j j chi(n)"""
    _require_parity(chi, Parity.EVEN, 'linear E coefficient')
    _require(b > 0 and b % 2 == 0, f"linear E coefficient needs b even and positive, got b={b}")
    half = b // 2
    return 2 * sum((-1) ** j * j * chi(half - j) for j in range(1, half))


def coeff_F(a: int, b: int, chi: Character) -> Rational:
    """
    2^(1-a) * sum over n + j + b*r = (ab - 1)/2 of (-1)^j chi(n) C(a, r)
    """
    _require_parity(chi, Parity.EVEN, 'F coefficient')
    _require(a > 0 and a % 2 == 1 and b > 0 and b % 2 == 1,
             f"F coefficient needs a and b odd and positive, got a={a}, b={b}")
    total_degree = (a * b - 1) // 2
    total = 0
    for r in range(total_degree // b + 1):
        for j in range(total_degree - b * r + 1):
            n = total_degree - b * r - j
            total += (-1) ** j * chi(n) * binom(a, r)
    return Rational(total, 2 ** (a - 1))


def coeff_H(b: int, chi: Character) -> Rational:
    _require_parity(chi, Parity.EVEN, 'H coefficient')
    _require(b > 0 and b % 2 == 0, f"H coefficient needs b even and positive, got b={b}")
    return Rational(chi(b // 2), 2) + sum(chi(n) for n in range(1, b // 2))


def _alternating_moment(top: int) -> int:
    """sum_{r=1}^{top} (-1)^r r (top - r), zero for top < 1"""
    return sum((-1) ** r * r * (top - r) for r in range(1, top + 1))


def coeff_I(b: int, d: int, chi: Character) -> int:
    _require_parity(chi, Parity.ODD, 'I coefficient')
    _require(b > 0 and b % 2 == 1 and d > 0 and d % 2 == 1,
             f"I coefficient needs b and d odd and positive, got b={b}, d={d}")
    total = 0
    for m in range((b + d) // 2 + 1):
        total += chi(m) * (_alternating_moment((b + d) // 2 - m)
                           + _alternating_moment((b - d) // 2 - m)
                           - _alternating_moment((d - b) // 2 - m))
    return total


def coeff_J(a: int, b: int, d: int, chi: Character) -> int:
    """
    sum over d*n + m + r + m0 = (d(a + b) - a - 2)/2 of chi(m) (-1)^r C(a + r, a) C(a + b, n)
    """
    _require_parity(chi, Parity.ODD, 'J coefficient')
    _require(a >= 0, f"J coefficient needs a >= 0, got a={a}")
    _require(b >= 0 and b % 2 == 0, f"J coefficient needs b even and nonnegative, got b={b}")
    _require(d > 0 and d % 2 == 1, f"J coefficient needs d odd and positive, got d={d}")
    total_degree = (d * (a + b) - a - 2) // 2
    total = 0
    for n in range(total_degree // d + 1):
        rest = total_degree - d * n
        # m0 takes up whatever m + r leaves of the rest
        inner = sum(chi(m) * (-1) ** r * binom(a + r, a)
                    for m in range(rest + 1) for r in range(rest - m + 1))
        total += binom(a + b, n) * inner
    return total


def _sine_power_coefficient(a: int, b: int, k: int, sign_on_n: bool) -> int:
    """
    2 * sum over 2bn + 2m + rk = ab - a with the r = 0 terms halved
    """
    target = a * b - a
    total = 0
    for r in range(target // k + 1):
        if (target - r * k) % 2:
            continue
        rest = (target - r * k) // 2
        weight = 1 if r == 0 else 2
        for n in range(rest // b + 1):
            m = rest - b * n
            sign = (-1) ** n if sign_on_n else (-1) ** m
            total += weight * sign * binom(a, n) * binom(a - 1 + m, m)
    return total


def coeff_S(a: int, b: int, k: int) -> Rational:
    _require(a > 0 and b > 1, f"S coefficient needs a > 0 and b > 1, got a={a}, b={b}")
    _require(k > 0 and k % 2 == 1, f"S coefficient needs k odd, got k={k}")
    return Rational(_sine_power_coefficient(a, b, k, sign_on_n=True))


def coeff_T(a: int, b: int, k: int) -> Rational:
    _require(a > 0 and b > 1 and b % 2 == 1, f"T coefficient needs a > 0 and b > 1 odd, got a={a}, b={b}")
    _require(k > 0 and k % 2 == 1, f"T coefficient needs k odd, got k={k}")
    return Rational(_sine_power_coefficient(a, b, k, sign_on_n=False))

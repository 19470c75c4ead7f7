from dataclasses import dataclass
from functools import lru_cache
from logging import getLogger
from math import gcd
from typing import List

import gmpy2
from sympy import factorint

from src.characters._types import CharacterValue, Parity, ValueTable
from src.characters.exceptions import CharacterParityError, ModulusError

logger = getLogger(__name__)


def jacobi_symbol(n: int, k: int) -> CharacterValue:
    """
    Jacobi symbol (n|k), the Legendre symbol when k is prime

    Args:
        n: any integer
        k: odd positive modulus
    Returns:
        one of -1, 0, 1
    """
    if k < 1 or k % 2 == 0:
        raise ModulusError(f"Jacobi symbol needs an odd positive modulus, got k={k}")
    if k == 1:
        return 1
    return int(gmpy2.jacobi(n % k, k))


def is_squarefree(k: int) -> bool:
    return all(exponent == 1 for exponent in factorint(k).values())


@dataclass(frozen=True)
class Character:
    """
    Real Dirichlet character stored as its value table over residues 0..k-1.

    Construction does not validate anything, use `build_real_primitive` for the
    checked constructor and `invariant_violations` to audit ad hoc tables.
    """
    modulus: int
    values: ValueTable
    parity: Parity

    def __call__(self, n: int) -> CharacterValue:
        return self.values[n % self.modulus]

    @property
    def is_even(self) -> bool:
        return self.parity is Parity.EVEN

    @property
    def is_odd(self) -> bool:
        return self.parity is Parity.ODD

    def require_parity(self, parity: Parity, purpose: str):
        if self.parity is not parity:
            raise CharacterParityError(f"{purpose} needs an {parity.value} character, "
                                       f"the character mod {self.modulus} is {self.parity.value}")

    def invariant_violations(self) -> List[str]:
        k = self.modulus
        violations = []
        if len(self.values) != k:
            violations.append(f"value table has length {len(self.values)}, expected {k}")
            return violations

        for n in range(k):
            if (self.values[n] == 0) != (gcd(n, k) > 1):
                violations.append(f"value at {n} is {self.values[n]} but gcd({n}, {k}) = {gcd(n, k)}")

        for n in range(k):
            for m in range(n, k):
                if self.values[n * m % k] != self.values[n] * self.values[m]:
                    violations.append(f"not multiplicative at ({n}, {m})")
                    break

        expected_parity = Parity.EVEN if self.values[k - 1] == 1 else Parity.ODD
        if self.parity is not expected_parity:
            violations.append(f"parity flag {self.parity.value} disagrees with value {self.values[k - 1]} at k-1")

        if all(self.values[n] == 1 for n in range(k) if gcd(n, k) == 1):
            violations.append("character is principal")
        return violations


@lru_cache(maxsize=None)
def build_real_primitive(k: int) -> Character:
    """
    The unique real nonprincipal primitive character mod an odd squarefree k >= 3,
    i.e. n -> (n|k)
    """
    if k < 3 or k % 2 == 0:
        raise ModulusError(f"no real primitive character in scope for k={k}: modulus must be odd and >= 3")
    if not is_squarefree(k):
        raise ModulusError(f"no real primitive character for k={k}: modulus is not squarefree")

    values = tuple(jacobi_symbol(n, k) for n in range(k))
    parity = Parity.EVEN if values[k - 1] == 1 else Parity.ODD
    logger.debug(f"built character mod {k} ({parity.value})")
    return Character(modulus=k, values=values, parity=parity)

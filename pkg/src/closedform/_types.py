from dataclasses import dataclass, field
from math import lcm
from typing import Optional, Sequence, Tuple

import numpy as np
from sympy import Rational

from src.closedform.exceptions import HypothesisError
from src.cyclotomic.embeddings import as_sqrt_k_decomposition
from src.cyclotomic.field import CycloElement

"""
    This file contains type definitions and aliases
"""


@dataclass(frozen=True)
class ClosedFormValue:
    """Exact value sqrt_coeff*sqrt(k) + rational_part"""
    k: int
    sqrt_coeff: Rational
    rational_part: Rational = field(default_factory=lambda: Rational(0))

    @classmethod
    def from_element(cls, x: CycloElement, k: int) -> Optional['ClosedFormValue']:
        decomposition = as_sqrt_k_decomposition(x, k)
        if decomposition is None:
            return None
        return cls(k, *decomposition)

    def render(self) -> str:
        parts = []
        if self.sqrt_coeff != 0:
            root = f"sqrt({self.k})"
            if self.sqrt_coeff == 1:
                parts.append(root)
            elif self.sqrt_coeff == -1:
                parts.append(f"-{root}")
            else:
                parts.append(f"{self.sqrt_coeff}*{root}")
        if self.rational_part != 0:
            if not parts:
                parts.append(str(self.rational_part))
            elif self.rational_part < 0:
                parts.append(f"- {-self.rational_part}")
            else:
                parts.append(f"+ {self.rational_part}")
        return ' '.join(parts) or '0'

    def to_float(self) -> float:
        return float(self.sqrt_coeff) * float(np.sqrt(self.k)) + float(self.rational_part)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class GeneralParams:
    """
    Parameters of the general sine/cosine product sums:
    prod_l sin(b_l x)/sin(c_l x) * prod_j cos(d_j x) / cos^a(x)

    Flat form (command line, reports): a, L, b_1..b_L, c_1..c_L, J, d_1..d_J
    """
    a: int
    b: Tuple[int, ...] = ()
    c: Tuple[int, ...] = ()
    d: Tuple[int, ...] = ()

    @property
    def L(self) -> int:
        return len(self.b)

    @property
    def J(self) -> int:
        return len(self.d)

    @property
    def parity_sum(self) -> int:
        """E = -a + sum(b - c) + sum(d); the odd-character sums use E - 1"""
        return -self.a + sum(self.b) - sum(self.c) + sum(self.d)

    @property
    def c_lcm(self) -> int:
        return lcm(*self.c) if self.c else 1

    def to_flat(self) -> Tuple[int, ...]:
        return (self.a, self.L) + self.b + self.c + (self.J,) + self.d

    @classmethod
    def from_flat(cls, values: Sequence[int]) -> 'GeneralParams':
        values = tuple(values)
        try:
            a, count = values[0], values[1]
            b, c = values[2:2 + count], values[2 + count:2 + 2 * count]
            j_count = values[2 + 2 * count]
            d = values[3 + 2 * count:]
        except IndexError:
            raise HypothesisError(f"general parameters must read a,L,b..,c..,J,d.., got {values}")
        if count < 0 or len(c) != count or len(d) != j_count:
            raise HypothesisError(f"general parameters must read a,L,b..,c..,J,d.., got {values}")
        return cls(a=a, b=b, c=c, d=d)

from typing import Literal, NamedTuple, Tuple, Union

from sympy import Rational

"""
    This file contains type definitions and aliases
"""
TrigFunction = Literal['sin', 'cos']
Params = Tuple[int, ...]


class Factor(NamedTuple):
    """function(multiple * pi / k) ** power"""
    function: TrigFunction
    multiple: int
    power: int = 1


class Term(NamedTuple):
    coefficient: Union[int, Rational]
    factors: Tuple[Factor, ...]

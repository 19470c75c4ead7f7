from typing import Literal, Union

from sympy import Rational

"""
    This file contains type definitions and aliases
"""
Scalar = Union[int, Rational]
FloatMode = Literal['double', 'mpmath']

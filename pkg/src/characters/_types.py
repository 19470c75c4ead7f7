from enum import Enum
from typing import Tuple

"""
    This file contains type definitions and aliases
"""
CharacterValue = int
ValueTable = Tuple[CharacterValue, ...]


class Parity(str, Enum):
    EVEN = 'even'
    ODD = 'odd'

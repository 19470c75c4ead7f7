from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional, Tuple

from src.characters._types import Parity
from src.characters.dirichlet import Character, build_real_primitive
from src.closedform._types import GeneralParams
from src.sums._types import Params, Term


class FamilyTag(str, Enum):
    S1_ODD = 'S1Odd'
    S1_EVEN = 'S1Even'
    S2 = 'S2'
    S3 = 'S3'
    S4 = 'S4'
    S5 = 'S5'
    S6 = 'S6'
    S7 = 'S7'
    S8 = 'S8'
    S9 = 'S9'
    GENERAL_EVEN = 'GeneralEven'
    GENERAL_ODD = 'GeneralOdd'
    IDENT1 = 'Ident1'
    IDENT2 = 'Ident2'
    COS_POWER = 'CosPower'
    SIN_COT = 'SinCot'
    COS_SQ = 'CosSq'
    CHAR_ONLY = 'CharOnly'
    COS_RATIO = 'CosRatio'
    TRIPLE_SINE = 'TripleSine'
    COT = 'Cot'


@dataclass(frozen=True)
class SumFamily:
    """
    One trigonometric sum: a family tag, the modulus k and the family's integer parameters
    (for the general families the flat form a,L,b..,c..,J,d..)
    """
    tag: FamilyTag
    k: int
    params: Params = ()

    @property
    def label(self) -> str:
        return f"{self.tag.value}({','.join(str(v) for v in self.params + (self.k,))})"

    @property
    def is_general(self) -> bool:
        return self.tag in (FamilyTag.GENERAL_EVEN, FamilyTag.GENERAL_ODD)

    @property
    def general_params(self) -> GeneralParams:
        return GeneralParams.from_flat(self.params)

    @property
    def field_order(self) -> int:
        if self.is_general:
            return 4 * self.k * self.general_params.c_lcm
        return 4 * self.k


TermBuilder = Callable[[SumFamily, Optional[Character]], Iterable[Term]]


@dataclass(frozen=True)
class FamilyDefinition:
    """
    Args:
        parameter_names: names of the integer parameters in order, None for the flat general form
        parity: parity of the character the closed form needs, None for character-free sums
        terms: builder of the summands, given the family and its character
        summary: the sum written out, for help texts
        fixed_modulus: the only modulus the family is defined at, if any
    """
    tag: FamilyTag
    parameter_names: Optional[Tuple[str, ...]]
    parity: Optional[Parity]
    terms: TermBuilder
    summary: str
    fixed_modulus: Optional[int] = None

    @property
    def uses_character(self) -> bool:
        return self.parity is not None

    def character(self, family: SumFamily) -> Optional[Character]:
        return build_real_primitive(family.k) if self.uses_character else None

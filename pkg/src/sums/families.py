from typing import Callable, Iterator, Optional, Sequence, Tuple, Union

from src.characters._types import Parity
from src.characters.dirichlet import Character, build_real_primitive
from src.closedform.exceptions import HypothesisError
from src.sums._types import Factor, Term
from src.sums.base import FamilyDefinition, FamilyTag, SumFamily
from src.sums.exceptions import FamilyError


def sin(multiple: int, power: int = 1) -> Factor:
    return Factor('sin', multiple, power)


def cos(multiple: int, power: int = 1) -> Factor:
    return Factor('cos', multiple, power)


def _half_range(k: int) -> range:
    """0 < n < k/2 for odd k"""
    return range(1, (k + 1) // 2)


def _character_sum(factors: Callable[[SumFamily, int], Tuple[Factor, ...]], scale: int = 1):
    def build(family: SumFamily, chi: Optional[Character]) -> Iterator[Term]:
        for n in _half_range(family.k):
            if chi(n):
                yield Term(scale * chi(n), factors(family, n))
    return build


def _plain_sum(factors: Callable[[SumFamily, int], Tuple[Factor, ...]]):
    def build(family: SumFamily, chi: Optional[Character]) -> Iterator[Term]:
        for n in _half_range(family.k):
            yield Term(1, factors(family, n))
    return build


def _literal_terms(terms: Tuple[Term, ...]):
    def build(family: SumFamily, chi: Optional[Character]) -> Iterator[Term]:
        return iter(terms)
    return build


def _general_factors(family: SumFamily, n: int, odd: bool) -> Tuple[Factor, ...]:
    p = family.general_params
    factors = tuple(sin(b * n) for b in p.b) + tuple(sin(c * n, -1) for c in p.c)
    factors += tuple(cos(d * n) for d in p.d)
    if p.a:
        factors += (cos(n, -p.a),)
    if odd:
        factors += (sin(n, -1),)
    return factors


def _triple_sine_factors(family: SumFamily, n: int) -> Tuple[Factor, ...]:
    a, d, j_count = family.params
    factors = (sin(3 * n), sin(5 * n), sin(7 * n), sin(n, -3))
    if j_count:
        factors += (cos(d * n, j_count),)
    if a:
        factors += (cos(n, -a),)
    return factors


AVAILABLE_FAMILIES = {
    FamilyTag.S1_ODD: FamilyDefinition(
        FamilyTag.S1_ODD, ('a', 'b'), Parity.ODD,
        _character_sum(lambda f, n: (sin(f.params[1] * n, f.params[0]), sin(n, -f.params[0] - 1))),
        'sum chi(n) sin^a(b pi n/k) / sin^(a+1)(pi n/k), a odd, b even'),
    FamilyTag.S1_EVEN: FamilyDefinition(
        FamilyTag.S1_EVEN, ('a', 'b'), Parity.EVEN,
        _character_sum(lambda f, n: (cos(f.params[1] * n, f.params[0]), cos(n, -2))),
        'sum chi(n) cos^a(b pi n/k) / cos^2(pi n/k), a >= 0, b even'),
    FamilyTag.S2: FamilyDefinition(
        FamilyTag.S2, (), Parity.EVEN,
        _character_sum(lambda f, n: (cos(n, -2),)),
        'sum chi(n) sec^2(pi n/k)'),
    FamilyTag.S3: FamilyDefinition(
        FamilyTag.S3, (), Parity.EVEN,
        _character_sum(lambda f, n: (sin(3 * n), sin(5 * n), sin(7 * n), sin(n, -3))),
        'sum chi(n) sin(3 pi n/k) sin(5 pi n/k) sin(7 pi n/k) / sin^3(pi n/k)'),
    FamilyTag.S4: FamilyDefinition(
        FamilyTag.S4, ('b', 'd'), Parity.ODD,
        _character_sum(lambda f, n: (sin(f.params[0] * n), cos(f.params[1] * n), sin(2 * n, -2)), scale=4),
        '4 sum chi(n) sin(b pi n/k) cos(d pi n/k) / sin^2(2 pi n/k), b and d odd'),
    FamilyTag.S5: FamilyDefinition(
        FamilyTag.S5, ('b',), Parity.ODD,
        _character_sum(lambda f, n: (sin(2 * f.params[0] * n), sin(2 * n, -2)), scale=2),
        '2 sum chi(n) sin(2 b pi n/k) / sin^2(2 pi n/k), b odd'),
    FamilyTag.S6: FamilyDefinition(
        FamilyTag.S6, ('a', 'b', 'd'), Parity.ODD,
        _character_sum(lambda f, n: (cos(f.params[2] * n, f.params[0] + f.params[1]), sin(2 * n, -1),
                                     cos(n, -f.params[0])), scale=2),
        '2 sum chi(n) cos^(a+b)(d pi n/k) / (sin(2 pi n/k) cos^a(pi n/k)), b even, d odd'),
    FamilyTag.S7: FamilyDefinition(
        FamilyTag.S7, ('a', 'b'), Parity.ODD,
        _character_sum(lambda f, n: (cos(f.params[1] * n, f.params[0]), sin(2 * n, -1)), scale=2),
        '2 sum chi(n) cos^a(b pi n/k) / sin(2 pi n/k), a even, b odd'),
    FamilyTag.S8: FamilyDefinition(
        FamilyTag.S8, ('a', 'b'), None,
        _plain_sum(lambda f, n: (sin(2 * f.params[1] * n, f.params[0]), sin(2 * n, -f.params[0]))),
        'sum sin^a(2 pi b n/k) / sin^a(2 pi n/k), b > 1'),
    FamilyTag.S9: FamilyDefinition(
        FamilyTag.S9, ('a', 'b'), None,
        _plain_sum(lambda f, n: (cos(2 * f.params[1] * n, f.params[0]), cos(2 * n, -f.params[0]))),
        'sum cos^a(2 pi b n/k) / cos^a(2 pi n/k), b > 1 odd'),
    FamilyTag.GENERAL_EVEN: FamilyDefinition(
        FamilyTag.GENERAL_EVEN, None, Parity.EVEN,
        _character_sum(lambda f, n: _general_factors(f, n, odd=False)),
        'sum chi(n) prod sin(b_l x)/sin(c_l x) prod cos(d_j x) / cos^a(x), x = pi n/k; '
        'params a,L,b..,c..,J,d..'),
    FamilyTag.GENERAL_ODD: FamilyDefinition(
        FamilyTag.GENERAL_ODD, None, Parity.ODD,
        _character_sum(lambda f, n: _general_factors(f, n, odd=True)),
        'sum chi(n) / sin(x) prod sin(b_l x)/sin(c_l x) prod cos(d_j x) / cos^a(x), x = pi n/k; '
        'params a,L,b..,c..,J,d..'),
    FamilyTag.IDENT1: FamilyDefinition(
        FamilyTag.IDENT1, (), None,
        _literal_terms((Term(1, (sin(2), sin(3, -2))),
                        Term(-1, (sin(1), sin(2, -2))),
                        Term(1, (sin(3), sin(1, -2))))),
        'sin(2pi/7)/sin^2(3pi/7) - sin(pi/7)/sin^2(2pi/7) + sin(3pi/7)/sin^2(pi/7)',
        fixed_modulus=7),
    FamilyTag.IDENT2: FamilyDefinition(
        FamilyTag.IDENT2, (), None,
        _literal_terms((Term(1, (sin(3, 2), sin(2, -1))),
                        Term(-1, (sin(2, 2), sin(1, -1))),
                        Term(1, (sin(1, 2), sin(3, -1))))),
        'sin^2(3pi/7)/sin(2pi/7) - sin^2(2pi/7)/sin(pi/7) + sin^2(pi/7)/sin(3pi/7)',
        fixed_modulus=7),
    FamilyTag.COS_POWER: FamilyDefinition(
        FamilyTag.COS_POWER, ('a',), Parity.EVEN,
        _character_sum(lambda f, n: (cos(n, f.params[0] - 1),)),
        'sum chi(n) cos^(a-1)(pi n/k), a odd'),
    FamilyTag.SIN_COT: FamilyDefinition(
        FamilyTag.SIN_COT, ('b',), Parity.EVEN,
        _character_sum(lambda f, n: (sin(f.params[0] * n), cos(n), sin(n, -1))),
        'sum chi(n) sin(b pi n/k) cot(pi n/k), b even'),
    FamilyTag.COS_SQ: FamilyDefinition(
        FamilyTag.COS_SQ, (), Parity.EVEN,
        _character_sum(lambda f, n: (cos(n, 2),)),
        'sum chi(n) cos^2(pi n/k)'),
    FamilyTag.CHAR_ONLY: FamilyDefinition(
        FamilyTag.CHAR_ONLY, (), Parity.EVEN,
        _character_sum(lambda f, n: ()),
        'sum chi(n)'),
    FamilyTag.COS_RATIO: FamilyDefinition(
        FamilyTag.COS_RATIO, ('a', 'b'), Parity.EVEN,
        _character_sum(lambda f, n: (cos(f.params[1] * n, f.params[0]), cos(n, -1))),
        'sum chi(n) cos^a(b pi n/k) / cos(pi n/k), a and b odd'),
    FamilyTag.TRIPLE_SINE: FamilyDefinition(
        FamilyTag.TRIPLE_SINE, ('a', 'd', 'J'), Parity.EVEN,
        _character_sum(_triple_sine_factors),
        'sum chi(n) sin(3x) sin(5x) sin(7x) cos^J(d x) / (sin^3(x) cos^a(x)), x = pi n/k'),
    FamilyTag.COT: FamilyDefinition(
        FamilyTag.COT, (), Parity.ODD,
        _character_sum(lambda f, n: (cos(n), sin(n, -1))),
        'sum chi(n) cot(pi n/k)'),
}


def parse_tag(tag: Union[str, FamilyTag]) -> FamilyTag:
    try:
        return FamilyTag(tag)
    except ValueError:
        raise FamilyError(f"unknown sum family {tag!r}, available: {', '.join(t.value for t in FamilyTag)}")


def definition_of(family: SumFamily) -> FamilyDefinition:
    return AVAILABLE_FAMILIES[family.tag]


def make_family(tag: Union[str, FamilyTag], k: int, params: Sequence[int] = ()) -> SumFamily:
    """
    Checked constructor: known tag, parameter arity, odd modulus, and a real
    primitive character for the character families
    """
    tag = parse_tag(tag)
    definition = AVAILABLE_FAMILIES[tag]
    family = SumFamily(tag=tag, k=k, params=tuple(int(v) for v in params))

    if definition.parameter_names is None:
        try:
            family.general_params
        except HypothesisError as e:
            raise FamilyError(str(e))
    elif len(family.params) != len(definition.parameter_names):
        names = ','.join(definition.parameter_names) or 'none'
        raise FamilyError(f"{tag.value} takes parameters ({names}), got {family.params}")

    if k < 3 or k % 2 == 0:
        raise FamilyError(f"{tag.value} needs an odd modulus k >= 3, got k={k}")
    if definition.fixed_modulus is not None and k != definition.fixed_modulus:
        raise FamilyError(f"{tag.value} is only defined at k={definition.fixed_modulus}")
    if definition.uses_character:
        build_real_primitive(k)
    return family

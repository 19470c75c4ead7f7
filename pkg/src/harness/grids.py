from itertools import combinations_with_replacement, product
from logging import getLogger
from math import gcd
from typing import Any, Iterator, List, Mapping

from src.closedform._types import GeneralParams
from src.closedform.exceptions import HypothesisError
from src.closedform.general import validate_general
from src.sums.base import FamilyTag, SumFamily
from src.sums.families import AVAILABLE_FAMILIES, make_family, parse_tag

logger = getLogger(__name__)


def general_params_grid(k: int, spec: Mapping[str, Any], odd: bool) -> Iterator[GeneralParams]:
    """
    Admissible general parameters at modulus k. The c are taken as increasing pairwise
    coprime tuples coprime to k, the d as nondecreasing tuples.

    Args:
        spec: max_L, b, c, max_J, d, a value lists
    """
    for count in range(spec['max_L'] + 1):
        for c in combinations_with_replacement(spec['c'], count):
            if any(gcd(cl, k) != 1 for cl in c):
                continue
            for b in product(spec['b'], repeat=count):
                for j_count in range(spec['max_J'] + 1):
                    for d in combinations_with_replacement(spec['d'], j_count):
                        for a in spec['a']:
                            p = GeneralParams(a=a, b=tuple(b), c=tuple(c), d=tuple(d))
                            try:
                                validate_general(k, p, odd=odd)
                            except HypothesisError:
                                continue
                            yield p


def families_from_grid(grid: Mapping[str, Mapping[str, Any]]) -> List[SumFamily]:
    """
    Expands a grid spec {family tag: {'k': [...], parameter: [...], ...}} into sum families,
    parameters combined as a full product in the family's parameter order
    """
    families = []
    for tag_name, spec in grid.items():
        tag = parse_tag(tag_name)
        definition = AVAILABLE_FAMILIES[tag]
        for k in spec['k']:
            if definition.parameter_names is None:
                odd = tag is FamilyTag.GENERAL_ODD
                families.extend(make_family(tag, k, p.to_flat()) for p in general_params_grid(k, spec, odd))
            else:
                value_lists = [spec[name] for name in definition.parameter_names]
                families.extend(make_family(tag, k, params) for params in product(*value_lists))
    logger.info(f"grid expands to {len(families)} sums")
    return families

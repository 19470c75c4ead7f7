from logging import getLogger
from typing import Dict, Optional, Tuple

import numpy as np

from src.closedform._types import ClosedFormValue
from src.cyclotomic.field import CycloElement, FieldContext, get_context
from src.cyclotomic.trig import from_cos, from_sin, inv_cos, inv_sin
from src.sums._types import Factor
from src.sums.base import SumFamily
from src.sums.exceptions import DecompositionError
from src.sums.families import definition_of

logger = getLogger(__name__)

_EXACT_FUNCTIONS = {
    ('sin', False): from_sin,
    ('cos', False): from_cos,
    ('sin', True): inv_sin,
    ('cos', True): inv_cos,
}
_FLOAT_FUNCTIONS = {'sin': np.sin, 'cos': np.cos}


class _FactorCache:
    """Exact values of sin/cos(m pi/k) and their inverses, shared by the terms of one sum"""

    def __init__(self, k: int, ctx: FieldContext):
        self.k = k
        self.ctx = ctx
        self._values: Dict[Tuple[str, int, bool], CycloElement] = {}

    def value(self, factor: Factor) -> CycloElement:
        if factor.power == 0:
            return self.ctx.one
        inverted = factor.power < 0
        key = (factor.function, factor.multiple % (2 * self.k), inverted)
        base = self._values.get(key)
        if base is None:
            base = _EXACT_FUNCTIONS[(factor.function, inverted)](key[1], self.k, self.ctx)
            self._values[key] = base
        return base ** abs(factor.power)


def eval_direct_exact(family: SumFamily, ctx: Optional[FieldContext] = None,
                      max_field_order: Optional[int] = None) -> CycloElement:
    """
    Exact left-hand side, summed term by term in Q(zeta_M)

    Args:
        family: the sum to evaluate
        ctx: field to work in, by default the shared Q(zeta_M) with M = family.field_order
        max_field_order: cap on M when the context is looked up
    """
    definition = definition_of(family)
    if ctx is None:
        ctx = get_context(family.field_order, max_field_order)
    cache = _FactorCache(family.k, ctx)

    total = ctx.zero
    for term in definition.terms(family, definition.character(family)):
        value = ctx.constant(term.coefficient)
        for factor in term.factors:
            value = value * cache.value(factor)
        total = total + value
    return total


def eval_direct_float(family: SumFamily) -> float:
    """
    Double-precision left-hand side; relative accuracy about 1e-6 or better for k <= 200
    """
    definition = definition_of(family)
    total = 0.0
    for term in definition.terms(family, definition.character(family)):
        value = float(term.coefficient)
        for factor in term.factors:
            value *= _FLOAT_FUNCTIONS[factor.function](factor.multiple * np.pi / family.k) ** factor.power
        total += value
    return float(total)


def sum_value(family: SumFamily, ctx: Optional[FieldContext] = None,
              max_field_order: Optional[int] = None) -> ClosedFormValue:
    exact = eval_direct_exact(family, ctx=ctx, max_field_order=max_field_order)
    value = ClosedFormValue.from_element(exact, family.k)
    if value is None:
        logger.warning(f"{family.label}: exact value {exact} is not of the form c*sqrt(k) + t")
        raise DecompositionError(f"{family.label} does not evaluate to c*sqrt({family.k}) + t")
    return value

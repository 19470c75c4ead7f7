from logging import getLogger
from threading import Lock
from typing import Dict, Mapping, Optional, Tuple, Union

import mpmath
import numpy as np
from sympy import Poly, QQ, Rational, Symbol, cyclotomic_poly

from src.cyclotomic._types import FloatMode, Scalar
from src.cyclotomic.exceptions import ContextMismatchError, CycloZeroDivisionError, FieldOrderError

ZETA = Symbol('zeta')


class FieldContext:
    """
    The cyclotomic field Q(zeta_M), elements kept as polynomials in zeta reduced mod Phi_M.

    A context is immutable once built; derived constants (powers of zeta and the
    reciprocals 1/(zeta^m - 1)) are memoized under a lock.
    """

    def __init__(self, order: int):
        if order < 1:
            raise FieldOrderError(f"field order must be positive, got {order}")
        self.order = order
        self.minimal_polynomial = Poly(cyclotomic_poly(order, ZETA), ZETA, domain=QQ)
        self.degree = self.minimal_polynomial.degree()

        self.logger = getLogger(self.__class__.__name__ + f"_{order}")
        self._lock = Lock()
        self._zeta_powers: Dict[int, 'CycloElement'] = {}
        self._reciprocals: Dict[int, 'CycloElement'] = {}
        self.logger.debug(f"Q(zeta_{order}) ready, degree {self.degree}")

    def __repr__(self):
        return f"FieldContext(order={self.order})"

    @property
    def coefficients(self) -> Tuple[Rational, ...]:
        """Coefficients of Phi_M, constant term first"""
        return tuple(Rational(c) for c in reversed(self.minimal_polynomial.all_coeffs()))

    def require_divisible(self, n: int, purpose: str = ''):
        if self.order % n != 0:
            raise FieldOrderError(f"Q(zeta_{self.order}) does not contain the {n}-th roots of unity"
                                  + (f" needed for {purpose}" if purpose else ''))

    def reduce(self, poly: Poly) -> 'CycloElement':
        return CycloElement(self, poly.rem(self.minimal_polynomial))

    def constant(self, value: Scalar) -> 'CycloElement':
        return CycloElement(self, Poly(Rational(value), ZETA, domain=QQ))

    @property
    def zero(self) -> 'CycloElement':
        return self.constant(0)

    @property
    def one(self) -> 'CycloElement':
        return self.constant(1)

    @property
    def imaginary_unit(self) -> 'CycloElement':
        self.require_divisible(4, 'the imaginary unit')
        return self.zeta(self.order // 4)

    def from_exponents(self, terms: Mapping[int, Scalar]) -> 'CycloElement':
        """
        Builds sum(coefficient * zeta^exponent) from an exponent -> coefficient mapping
        """
        collected: Dict[int, Rational] = {}
        for exponent, coefficient in terms.items():
            exponent %= self.order
            collected[exponent] = collected.get(exponent, Rational(0)) + Rational(coefficient)
        collected = {(e,): c for e, c in collected.items() if c != 0}
        if not collected:
            return self.zero
        return self.reduce(Poly.from_dict(collected, ZETA, domain=QQ))

    def zeta(self, exponent: int = 1) -> 'CycloElement':
        exponent %= self.order
        power = self._zeta_powers.get(exponent)
        if power is None:
            power = self.from_exponents({exponent: 1})
            with self._lock:
                self._zeta_powers.setdefault(exponent, power)
        return power

    def reciprocal_of_root_minus_one(self, exponent: int) -> 'CycloElement':
        """
        1 / (zeta^exponent - 1) without a gcd computation, using
        1/(w - 1) = (1/M) * sum_{j<M} j * w^j for any M-th root of unity w != 1
        """
        exponent %= self.order
        if exponent == 0:
            raise CycloZeroDivisionError(f"zeta^0 - 1 is zero in Q(zeta_{self.order})")
        reciprocal = self._reciprocals.get(exponent)
        if reciprocal is None:
            weights = {}
            for j in range(1, self.order):
                power = exponent * j % self.order
                weights[power] = weights.get(power, 0) + Rational(j, self.order)
            reciprocal = self.from_exponents(weights)
            with self._lock:
                self._reciprocals.setdefault(exponent, reciprocal)
        return reciprocal


_CONTEXTS: Dict[int, FieldContext] = {}
_CONTEXTS_LOCK = Lock()


def make_context(order: int) -> FieldContext:
    return FieldContext(order)


def get_context(order: int, max_order: Optional[int] = None) -> FieldContext:
    """
    Shared context for Q(zeta_order); built once, under the cache lock
    """
    if max_order is not None and order > max_order:
        raise FieldOrderError(f"field order {order} exceeds the configured cap {max_order}")
    context = _CONTEXTS.get(order)
    if context is None:
        with _CONTEXTS_LOCK:
            context = _CONTEXTS.get(order)
            if context is None:
                context = make_context(order)
                _CONTEXTS[order] = context
    return context


class CycloElement:
    __slots__ = ('context', 'poly')

    def __init__(self, context: FieldContext, poly: Poly):
        self.context = context
        self.poly = poly

    @property
    def coeffs(self) -> Tuple[Rational, ...]:
        """Length phi(M) coefficient vector, constant term first"""
        values = [Rational(0)] * self.context.degree
        for (exponent,), coefficient in self.poly.terms():
            values[exponent] = Rational(coefficient)
        return tuple(values)

    def _coerce(self, other: Union['CycloElement', Scalar]) -> 'CycloElement':
        if isinstance(other, CycloElement):
            if other.context.order != self.context.order:
                raise ContextMismatchError(f"cannot combine elements of Q(zeta_{self.context.order}) "
                                           f"and Q(zeta_{other.context.order})")
            return other
        return self.context.constant(other)

    def __add__(self, other):
        return CycloElement(self.context, self.poly + self._coerce(other).poly)

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.context, -self.poly)

    def __sub__(self, other):
        return CycloElement(self.context, self.poly - self._coerce(other).poly)

    def __rsub__(self, other):
        return CycloElement(self.context, self._coerce(other).poly - self.poly)

    def __mul__(self, other):
        other = self._coerce(other)
        if other.poly.is_ground or self.poly.is_ground:
            return CycloElement(self.context, self.poly * other.poly)
        return self.context.reduce(self.poly * other.poly)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inv() ** -exponent
        result = self.context.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (CycloElement, int, Rational)):
            try:
                return self.poly == self._coerce(other).poly
            except ContextMismatchError:
                return False
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return not self.poly.is_zero

    def __repr__(self):
        return f"CycloElement(M={self.context.order}, {self.poly.as_expr()})"

    def inv(self) -> 'CycloElement':
        """
        Multiplicative inverse via the extended gcd with Phi_M over QQ
        """
        if self.poly.is_zero:
            raise CycloZeroDivisionError(f"inverse of zero in Q(zeta_{self.context.order})")
        if self.poly.is_ground:
            return self.context.constant(1 / Rational(self.poly.as_expr()))
        return CycloElement(self.context, self.poly.invert(self.context.minimal_polynomial))

    def as_rational(self) -> Optional[Rational]:
        if self.poly.is_ground:
            return Rational(self.poly.as_expr())
        return None

    def to_complex(self, mode: FloatMode = 'double', dps: int = 50) -> complex:
        """
        Evaluates the representing polynomial at exp(2*pi*i/M)
        """
        coefficients = self.coeffs
        if mode == 'mpmath':
            with mpmath.workdps(dps):
                root = mpmath.expjpi(mpmath.mpf(2) / self.context.order)
                value = mpmath.polyval([mpmath.mpf(c.p) / c.q for c in reversed(coefficients)], root)
                return complex(value)
        root = np.exp(2j * np.pi / self.context.order)
        return complex(np.polynomial.polynomial.polyval(root, np.array([float(c) for c in coefficients])))

"""
Exact arithmetic on ordinals below epsilon_0 in hereditary Cantor normal form.

An ordinal is a tuple of (exponent, coefficient) pairs with strictly decreasing
exponents, each exponent itself a CnfOrdinal. The empty tuple is 0.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum

from classes.exceptions import InvalidOrdinal


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, difference):
        if difference < 0:
            return cls.LESS
        if difference > 0:
            return cls.GREATER
        return cls.EQUAL


class Cofinality(Enum):
    """
    Cofinality of a countable ordinal: 0, 1 (successor) or omega (limit)
    """
    ZERO = '0'
    ONE = '1'
    OMEGA = 'w'


class CofClass(Enum):
    """
    Cofinality / coinitiality class used for cuts and declared atoms
    """
    ONE = '1'
    OMEGA = 'w'
    OMEGA1 = 'w1'

    @classmethod
    def from_cofinality(cls, cofinality):
        if cofinality is Cofinality.ONE:
            return cls.ONE
        if cofinality is Cofinality.OMEGA:
            return cls.OMEGA
        raise ValueError('The empty order has no cofinality class')

    def __str__(self):
        return self.value


@functools.total_ordering
@dataclass(frozen=True)
class CnfOrdinal:
    terms: tuple = ()

    def __post_init__(self):
        for exponent, coefficient in self.terms:
            if not isinstance(exponent, CnfOrdinal):
                raise InvalidOrdinal(self.terms, f'exponent {exponent!r} is not an ordinal')
            if not isinstance(coefficient, int) or coefficient < 1:
                raise InvalidOrdinal(self.terms, f'coefficient {coefficient!r} is not a positive integer')
        for (left, _), (right, _) in zip(self.terms, self.terms[1:]):
            if ord_cmp(left, right) is not Ordering.GREATER:
                raise InvalidOrdinal(self.terms, f'exponents {left} and {right} are not strictly decreasing')

    @classmethod
    def _trusted(cls, terms):
        # results of ord_add / ord_mul are normal forms by construction
        ordinal = object.__new__(cls)
        object.__setattr__(ordinal, 'terms', terms)
        return ordinal

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_finite(self):
        return all(exponent.is_zero for exponent, _ in self.terms)

    @property
    def is_successor(self):
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def is_limit(self):
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def leading_exponent(self):
        return self.terms[0][0] if self.terms else None

    @property
    def finite_value(self):
        """
        Integer value of a finite ordinal
        :return: int, or None if the ordinal is infinite
        """
        if not self.is_finite:
            return None
        return self.terms[0][1] if self.terms else 0

    def __lt__(self, other):
        if not isinstance(other, CnfOrdinal):
            return NotImplemented
        return ord_cmp(self, other) is Ordering.LESS

    def __add__(self, other):
        return ord_add(self, other)

    def __mul__(self, other):
        return ord_mul(self, other)

    def __str__(self):
        if self.is_zero:
            return '0'
        return ' + '.join(_render_term(exponent, coefficient) for exponent, coefficient in self.terms)

    def __repr__(self):
        return f'CnfOrdinal({self})'


def _render_power(exponent):
    if exponent.is_finite:
        value = exponent.finite_value
        return 'w' if value == 1 else f'w^{value}'
    if exponent == OMEGA:
        return 'w^w'
    return f'w^({exponent})'


def _render_term(exponent, coefficient):
    if exponent.is_zero:
        return str(coefficient)
    power = _render_power(exponent)
    return power if coefficient == 1 else f'{power}*{coefficient}'


def natural(n):
    if n < 0:
        raise InvalidOrdinal((), f'{n} is negative')
    return CnfOrdinal(((ZERO, n),)) if n else ZERO


def omega_power(exponent, coefficient=1):
    """
    The ordinal omega^exponent * coefficient
    :param exponent: CnfOrdinal or non-negative int
    :param coefficient: positive int
    """
    if isinstance(exponent, int):
        exponent = natural(exponent)
    return CnfOrdinal(((exponent, coefficient),))


def ord_cmp(a, b):
    for (exponent_a, coefficient_a), (exponent_b, coefficient_b) in zip(a.terms, b.terms):
        order = ord_cmp(exponent_a, exponent_b)
        if order is not Ordering.EQUAL:
            return order
        if coefficient_a != coefficient_b:
            return Ordering.of(coefficient_a - coefficient_b)
    return Ordering.of(len(a.terms) - len(b.terms))


def ord_add(a, b):
    """
    Ordinal sum. Terms of a below the leading exponent of b are absorbed
    """
    if b.is_zero:
        return a
    lead, lead_coefficient = b.terms[0]
    kept = []
    for exponent, coefficient in a.terms:
        order = ord_cmp(exponent, lead)
        if order is Ordering.GREATER:
            kept.append((exponent, coefficient))
            continue
        if order is Ordering.EQUAL:
            return CnfOrdinal._trusted(tuple(kept) + ((lead, coefficient + lead_coefficient),) + b.terms[1:])
        break
    return CnfOrdinal._trusted(tuple(kept) + b.terms)


def ord_mul(a, b):
    """
    Ordinal product a*b (b copies of a), computed term by term over b
    """
    if a.is_zero or b.is_zero:
        return ZERO
    lead, lead_coefficient = a.terms[0]
    result = ZERO
    for exponent, coefficient in b.terms:
        if exponent.is_zero:
            part = CnfOrdinal._trusted(((lead, lead_coefficient * coefficient),) + a.terms[1:])
        else:
            part = CnfOrdinal._trusted(((ord_add(lead, exponent), coefficient),))
        result = ord_add(result, part)
    return result


def ord_cofinality(a):
    if a.is_zero:
        return Cofinality.ZERO
    if a.is_successor:
        return Cofinality.ONE
    # every countable limit ordinal has cofinality omega
    return Cofinality.OMEGA


ZERO = CnfOrdinal()
ONE = CnfOrdinal(((ZERO, 1),))
OMEGA = CnfOrdinal(((ONE, 1),))
OMEGA_OMEGA = CnfOrdinal(((OMEGA, 1),))

"""
Abstract syntax of order-type expressions.

LexProd(X, Y) replaces every point of X by a copy of Y. On ordinal leaves this is
the ordinal product Y*X, with the factors reversed.
"""
from __future__ import annotations

from dataclasses import dataclass

from classes.block_sum import ZBlockSum
from classes.exceptions import InvalidTerm
from classes.ordinal import ONE, ZERO, CnfOrdinal, CofClass
from classes.scattered import Rj4Order


class OrderTerm:
    """
    Base class of all expression nodes
    """
    __slots__ = ()

    @property
    def children(self):
        return ()


@dataclass(frozen=True)
class OrdLeaf(OrderTerm):
    value: CnfOrdinal


@dataclass(frozen=True)
class Atom(OrderTerm):
    name: str
    coinitiality: CofClass
    cofinality: CofClass


@dataclass(frozen=True)
class Reverse(OrderTerm):
    inner: OrderTerm

    @property
    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class FinSum(OrderTerm):
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2:
            raise InvalidTerm('FinSum', f'a sum needs at least two parts, got {len(self.parts)}')
        object.__setattr__(self, 'parts', tuple(self.parts))

    @property
    def children(self):
        return self.parts


@dataclass(frozen=True)
class LexProd(OrderTerm):
    left: OrderTerm
    right: OrderTerm

    @property
    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class FinPow(OrderTerm):
    base: OrderTerm
    exponent: int

    def __post_init__(self):
        if self.exponent < 1:
            raise InvalidTerm('FinPow', f'power exponent must be at least 1, got {self.exponent}')

    @property
    def children(self):
        return (self.base,)


@dataclass(frozen=True)
class Rj4Ref(OrderTerm):
    schema: Rj4Order


@dataclass(frozen=True)
class ZSumRef(OrderTerm):
    schema: ZBlockSum


# Opaque orders that may appear in expressions: name -> (coinitiality, cofinality)
KNOWN_ATOMS = {
    'w1': (CofClass.ONE, CofClass.OMEGA1),
}


def make_atom(name):
    coinitiality, cofinality = KNOWN_ATOMS[name]
    return Atom(name, coinitiality, cofinality)


EMPTY = OrdLeaf(ZERO)
UNIT = OrdLeaf(ONE)


def lex_prod(x, y):
    return LexProd(x, y)


def reverse(term):
    """
    Pushes reversal to the leaves: (X + Y)* = Y* + X*, (XY)* = X*Y*, (X^n)* = (X*)^n, X** = X
    """
    if isinstance(term, Reverse):
        return term.inner
    if isinstance(term, OrdLeaf):
        return term if term.value.is_finite else Reverse(term)
    if isinstance(term, FinSum):
        return FinSum(tuple(reverse(part) for part in reversed(term.parts)))
    if isinstance(term, LexProd):
        return LexProd(reverse(term.left), reverse(term.right))
    if isinstance(term, FinPow):
        return FinPow(reverse(term.base), term.exponent)
    return Reverse(term)


class TermVisitor:
    """
    Dispatches on the node class name to visit_<ClassName> methods
    """
    def visit(self, term):
        method = getattr(self, f'visit_{type(term).__name__}', None)
        if method is None:
            return self.generic_visit(term)
        return method(term)

    def generic_visit(self, term):
        raise TypeError(f'No visit_{type(term).__name__} method in {type(self).__name__}')

"""
Rewriting of order terms to normal form and the partial isomorphism dispatcher.

Rules, applied innermost-first until nothing changes:
  R1  (X + Y)Z -> XZ + YZ
  R2  LexProd(OrdLeaf a, OrdLeaf b) -> OrdLeaf(b*a)
  R3  adjacent ordinal summands fuse by ordinal addition
  R4  X^m X^n -> X^(m+n), a bare X counting as X^1
  R5  nested sums flatten, empty summands and unit factors vanish, X^1 -> X
  R6  L * w^k -> L with every exponent raised by k
  R7  Z-sum * w^k -> Z-sum with every block multiplied by w^k
There is no left-distributive rule: Z(X + Y) is in general not ZX + ZY.
"""
from __future__ import annotations

import logging
from enum import Enum

from classes.block_sum import gap_profile, zsum_iso
from classes.exceptions import NotLFamilyError
from classes.order_term import (
    EMPTY, UNIT, FinPow, FinSum, LexProd, OrdLeaf, Reverse, Rj4Ref, TermVisitor, ZSumRef, reverse,
)
from classes.ordinal import ONE, CofClass, ord_add, ord_mul
from classes.scattered import CutType, cut_types, rj4_mul_omega_power, slater_iso

logger = logging.getLogger(__name__)


class IsoVerdict(Enum):
    ISOMORPHIC = 'isomorphic'
    NOT_ISOMORPHIC = 'not_isomorphic'
    UNKNOWN = 'unknown'

    def __str__(self):
        return self.value


def _finite_omega_power(term):
    """
    k when term is the leaf w^k with finite k >= 1, else None
    """
    if not isinstance(term, OrdLeaf) or len(term.value.terms) != 1:
        return None
    exponent, coefficient = term.value.terms[0]
    if coefficient != 1 or not exponent.is_finite or exponent.is_zero:
        return None
    return exponent.finite_value


def _power_parts(term):
    if isinstance(term, FinPow):
        return term.base, term.exponent
    return term, 1


class Normalizer(TermVisitor):
    """
    One bottom-up rewriting pass per visit; normalize repeats passes to a fixed point
    """
    def __init__(self):
        self.passes = 0

    def normalize(self, term):
        while True:
            self.passes += 1
            rewritten = self.visit(term)
            if rewritten == term:
                logger.debug('Normal form after %d passes: %s', self.passes, rewritten)
                return rewritten
            term = rewritten

    def visit_OrdLeaf(self, term):
        return term

    def visit_Atom(self, term):
        return term

    def visit_Rj4Ref(self, term):
        return term

    def visit_ZSumRef(self, term):
        return term

    def visit_Reverse(self, term):
        return reverse(self.visit(term.inner))

    def visit_FinSum(self, term):
        parts = []
        for part in map(self.visit, term.parts):
            pieces = part.parts if isinstance(part, FinSum) else (part,)
            for piece in pieces:
                if piece == EMPTY:
                    continue
                if parts and isinstance(piece, OrdLeaf) and isinstance(parts[-1], OrdLeaf):
                    parts[-1] = OrdLeaf(ord_add(parts[-1].value, piece.value))
                else:
                    parts.append(piece)
        if not parts:
            return EMPTY
        if len(parts) == 1:
            return parts[0]
        return FinSum(tuple(parts))

    def visit_LexProd(self, term):
        return self.product(self.visit(term.left), self.visit(term.right))

    def visit_FinPow(self, term):
        base = self.visit(term.base)
        if term.exponent == 1 or base in (EMPTY, UNIT):
            return base
        return FinPow(base, term.exponent)

    def product(self, left, right):
        """
        Rewrites LexProd(left, right) for already normalized operands
        """
        if EMPTY in (left, right):
            return EMPTY
        if left == UNIT:
            return right
        if right == UNIT:
            return left
        if isinstance(left, FinSum):
            logger.debug('R1 on %s', left)
            return self.visit_FinSum(FinSum(tuple(self.product(part, right) for part in left.parts)))
        if isinstance(left, OrdLeaf) and isinstance(right, OrdLeaf):
            return OrdLeaf(ord_mul(right.value, left.value))

        (left_base, m), (right_base, n) = _power_parts(left), _power_parts(right)
        if left_base == right_base and (isinstance(left, FinPow) or isinstance(right, FinPow)):
            return FinPow(left_base, m + n)

        k = _finite_omega_power(right)
        if k is not None and isinstance(left, Rj4Ref):
            return Rj4Ref(rj4_mul_omega_power(left.schema, k))
        if k is not None and isinstance(left, ZSumRef):
            return ZSumRef(left.schema.with_lift(left.schema.lift + k))
        return LexProd(left, right)


def normalize(term):
    return Normalizer().normalize(term)


def evaluate_ordinal(term):
    """
    The ordinal denoted by a term over ordinal leaves, sums, products and finite powers
    :return: CnfOrdinal, or None if some leaf is not an ordinal
    """
    if isinstance(term, OrdLeaf):
        return term.value
    if isinstance(term, Reverse):
        inner = evaluate_ordinal(term.inner)
        return inner if inner is not None and inner.is_finite else None
    if isinstance(term, FinSum):
        values = [evaluate_ordinal(part) for part in term.parts]
        if None in values:
            return None
        result = values[0]
        for value in values[1:]:
            result = ord_add(result, value)
        return result
    if isinstance(term, LexProd):
        left, right = evaluate_ordinal(term.left), evaluate_ordinal(term.right)
        if left is None or right is None:
            return None
        return ord_mul(right, left)
    if isinstance(term, FinPow):
        base = evaluate_ordinal(term.base)
        if base is None:
            return None
        result = ONE
        for _ in range(term.exponent):
            result = ord_mul(base, result)
        return result
    return None


_GAP = CutType(CofClass.OMEGA, CofClass.OMEGA)


def _verdict(flag):
    return IsoVerdict.ISOMORPHIC if flag else IsoVerdict.NOT_ISOMORPHIC


def _iso_normal(s, t):
    if s == t:
        return IsoVerdict.ISOMORPHIC
    s_value, t_value = evaluate_ordinal(s), evaluate_ordinal(t)
    if s_value is not None and t_value is not None:
        return _verdict(s_value == t_value)
    if isinstance(s, Rj4Ref) and isinstance(t, Rj4Ref):
        return _verdict(slater_iso(s.schema, t.schema))
    if isinstance(s, ZSumRef) and isinstance(t, ZSumRef):
        try:
            return _verdict(zsum_iso(s.schema, t.schema))
        except NotLFamilyError as error:
            logger.debug('No block-sum verdict: %s', error)
            return IsoVerdict.UNKNOWN
    if isinstance(s, Reverse) and isinstance(t, Reverse):
        return _iso_normal(s.inner, t.inner)

    # an ordinal is well ordered, RJ4 orders and Z-sums have infinite descending chains
    for x, y in ((s, t), (t, s)):
        if evaluate_ordinal(x) is not None and isinstance(y, (Rj4Ref, ZSumRef)):
            return IsoVerdict.NOT_ISOMORPHIC
        if isinstance(x, Rj4Ref) and isinstance(y, ZSumRef):
            profile = gap_profile(y.schema)
            # a Z-sum has (w, w)-gaps at its block boundaries, an RJ4 order has none
            if profile.boundary == _GAP and _GAP not in cut_types(x.schema):
                return IsoVerdict.NOT_ISOMORPHIC
    return IsoVerdict.UNKNOWN


def iso_check(s, t):
    """
    Sound but partial isomorphism test on normal forms
    :return: IsoVerdict; UNKNOWN whenever no criterion applies
    """
    s, t = normalize(s), normalize(t)
    verdict = _iso_normal(s, t)
    logger.debug('iso_check(%s, %s) = %s', s, t, verdict)
    return verdict

"""
Z-indexed sums  ... + B_-1 + B_0 + B_1 + ...  of RJ4 blocks.

Blocks are L-family members, possibly multiplied on the right by w^lift. Since
L_m * w is isomorphic to L_(m+1) and the L_m are pairwise non-isomorphic, the
isomorphism class of every block is captured by one integer, its L-index.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum

from classes.exceptions import InvalidSchema
from classes.ordinal import CofClass
from classes.scattered import CutType, cut_types, end_data, l_family_index, make_L, rj4_mul_omega_power, slater_iso
from classes.sequences import Label

logger = logging.getLogger(__name__)


class IVariant(Enum):
    EVEN = 'even'
    ODD = 'odd'
    MID = 'mid'


class ZBlockSum(ABC):
    lift: int

    @abstractmethod
    def base_block(self, i):
        """
        Block i before the right multiplication by w^lift
        """

    @abstractmethod
    def with_lift(self, lift):
        pass

    @abstractmethod
    def index_profile(self):
        """
        ('affine', stride, constant) when block i is L-isomorphic to L_(stride*i + constant),
        ('periodic', indices) for a periodic table of L-indices
        """

    def block(self, i):
        return rj4_mul_omega_power(self.base_block(i), self.lift)

    def block_index(self, i):
        return l_family_index(self.base_block(i)) + self.lift

    @abstractmethod
    def representatives(self):
        """
        Block positions covering one full period of the block map
        """


@dataclass(frozen=True)
class AffineBlockSum(ZBlockSum):
    """
    Block i is L_(stride*i + offset) * w^lift
    """
    stride: int
    offset: int
    lift: int = 0

    def base_block(self, i):
        return make_L(self.stride * i + self.offset)

    def with_lift(self, lift):
        return AffineBlockSum(self.stride, self.offset, lift)

    def index_profile(self):
        return 'affine', self.stride, self.offset + self.lift

    def representatives(self):
        return range(max(abs(self.stride), 1))

    def __str__(self):
        if self.stride == 0:
            inner = f'L({self.offset})'
        else:
            head = 'i' if self.stride == 1 else f'{self.stride}*i'
            inner = f'L({head}{self.offset:+d})' if self.offset else f'L({head})'
        return f'zsum{{{inner}}}'


@dataclass(frozen=True)
class PeriodicBlockSum(ZBlockSum):
    """
    Block i is table[i mod len(table)] * w^lift
    """
    table: tuple
    lift: int = 0

    def __post_init__(self):
        if not self.table:
            raise InvalidSchema(list(self.table), 'block table must be nonempty')

    def base_block(self, i):
        return self.table[i % len(self.table)]

    def with_lift(self, lift):
        return PeriodicBlockSum(self.table, lift)

    def index_profile(self):
        indices = tuple(l_family_index(block) + self.lift for block in self.table)
        return 'periodic', _primitive(indices)

    def representatives(self):
        return range(len(self.table))

    def __str__(self):
        return 'zsum{[' + ', '.join(str(block) for block in self.table) + ']}'


def _primitive(values):
    n = len(values)
    for d in range(1, n + 1):
        if n % d == 0 and values == values[:d] * (n // d):
            return values[:d]
    return values


def make_I(variant):
    """
    I_even = ... + L_-2 + L_0 + L_2 + ..., I_odd = ... + L_-1 + L_1 + ..., I = ... + L_-1 + L_0 + L_1 + ...
    """
    variant = IVariant(variant)
    if variant is IVariant.EVEN:
        return AffineBlockSum(2, 0)
    if variant is IVariant.ODD:
        return AffineBlockSum(2, 1)
    return AffineBlockSum(1, 0)


@dataclass(frozen=True)
class GapProfile:
    interior: frozenset
    boundary: CutType

    @property
    def gaps_only_at_boundaries(self):
        gap = CutType(CofClass.OMEGA, CofClass.OMEGA)
        return self.boundary == gap and gap not in self.interior


def gap_profile(block_sum):
    interior = set()
    boundaries = set()
    for i in block_sum.representatives():
        block = block_sum.block(i)
        interior |= cut_types(block)
        left_end, right_end = end_data(block), end_data(block_sum.block(i + 1))
        boundaries.add(CutType(left_end.cofinality, right_end.coinitiality))
    if len(boundaries) != 1:
        raise AssertionError(f'block boundaries of {block_sum} classify differently: {boundaries}')
    return GapProfile(frozenset(interior), boundaries.pop())


def zsum_mul_omega(block_sum):
    """
    Right multiplication distributes over the Z-sum: every block is multiplied by w
    """
    return block_sum.with_lift(block_sum.lift + 1)


def _index_shift(first, second):
    """
    Integer d with index_first(i) == index_second(i + d) for all i, or None
    """
    kind_a, *data_a = first.index_profile()
    kind_b, *data_b = second.index_profile()
    if kind_a == 'periodic' and kind_b == 'affine':
        shift = _index_shift(second, first)
        return None if shift is None else -shift
    if kind_a == 'affine' and kind_b == 'affine':
        (stride_a, constant_a), (stride_b, constant_b) = data_a, data_b
        if stride_a != stride_b:
            return None
        if stride_a == 0:
            return 0 if constant_a == constant_b else None
        difference = constant_a - constant_b
        return difference // stride_a if difference % stride_a == 0 else None
    if kind_a == 'affine':
        stride, constant = data_a
        (indices,) = data_b
        return 0 if stride == 0 and indices == (constant,) else None
    (indices_a,), (indices_b,) = data_a, data_b
    if len(indices_a) != len(indices_b):
        return None
    for d in range(len(indices_b)):
        if indices_b[d:] + indices_b[:d] == indices_a:
            return d
    return None


def zsum_iso(first, second):
    """
    Isomorphic iff some shift d matches block i of first with block i + d of second.
    An isomorphism maps each block onto a block, since blocks contain no (w, w)-gap and
    every interval meeting two blocks does
    :raise NotLFamilyError: if a block is outside the L-family
    """
    d = _index_shift(first, second)
    if d is None:
        return False
    for i in first.representatives():
        if not slater_iso(first.block(i), second.block(i + d)):
            logger.warning('Index shift %d of %s and %s fails at block %d', d, first, second, i)
            return False
    return True


def variant_for_label(label):
    """
    Block sum assigned to a 2-tail class: even -> I_even, odd -> I_odd, full -> I
    """
    variants = {Label.EVEN: IVariant.EVEN, Label.ODD: IVariant.ODD, Label.FULL: IVariant.MID}
    return make_I(variants[Label(label)])

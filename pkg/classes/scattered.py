"""
omega*-sums of ordinals ending in omega^omega (RJ types of type 4) and their invariants.

An Rj4Order denotes  ... + l_2 w^(k_2) + l_1 w^(k_1) + w^w  where (l_j, k_j) is an
EvAffineSeq. Index 1 is the summand adjacent to the terminal w^w.

Isomorphism of two such orders holds exactly when their (l, k) sequences agree
eventually up to a shift of index. Necessity is the classical tail condition
for these types. Sufficiency: if the sequences agree from index N on, both
orders are  T + P + w^w  with the same omega*-tail T and a finite prefix sum P of
ordinals below w^w, and P + w^w = w^w absorbs the difference.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from classes.affine import AffineMap, EvAffineSeq
from classes.exceptions import InvalidCutIndex, NotLFamilyError
from classes.ordinal import OMEGA, OMEGA_OMEGA, CofClass, natural, omega_power, ord_cofinality

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rj4Order:
    seq: EvAffineSeq

    def summand(self, j):
        """
        The ordinal l_j * w^(k_j) (CNF coefficient form)
        """
        l, k = self.seq.term(j)
        return omega_power(k, l)

    def __str__(self):
        return f'rj4{{{self.seq}}}'


def make_L(i):
    """
    L_i = ... + 3w^(i+3) + 2w^(i+2) + w^(i+1) + w^w for i >= 0,
    L_-n = ... + (n+3)w^3 + (n+2)w^2 + (n+1)w + w^w
    """
    if i >= 0:
        return Rj4Order(EvAffineSeq.pure_tail(AffineMap(1, 0), AffineMap(1, i)))
    return Rj4Order(EvAffineSeq.pure_tail(AffineMap(1, -i), AffineMap(1, 0)))


def rj4_mul_omega(order):
    """
    Right product with w: every l w^k becomes l w^(k+1) and w^w * w = w^(1+w) = w^w
    """
    return Rj4Order(order.seq.with_exponents_raised(1))


def rj4_mul_omega_power(order, n):
    if n < 0:
        raise ValueError(f'power must be non-negative, got {n}')
    return Rj4Order(order.seq.with_exponents_raised(n))


@dataclass(frozen=True)
class SlaterWitness:
    """
    (k'_n, l'_n) = (k_{n+r}, l_{n+r}) for n >= onset; swapped says the roles of L and M are exchanged
    """
    shift: int
    onset: int
    swapped: bool


def slater_witness(first, second):
    r = first.seq.tail_shift(second.seq)
    if r is None:
        return None
    if r >= 0:
        # first_n = second_{n+r}: second plays the role of L
        return SlaterWitness(r, first.seq.agreement_onset(second.seq, r), swapped=True)
    return SlaterWitness(-r, second.seq.agreement_onset(first.seq, -r), swapped=False)


def slater_iso(first, second):
    return slater_witness(first, second) is not None


def l_family_index(order):
    """
    The unique i with slater_iso(order, L_i)
    :raise NotLFamilyError: when the tail slopes are not (1, 1)
    """
    tail_l, tail_k = order.seq.tail_l, order.seq.tail_k
    if tail_l.slope != 1 or tail_k.slope != 1:
        raise NotLFamilyError(order, f'tail slopes ({tail_l.slope}, {tail_k.slope}) differ from (1, 1)')
    return tail_k.offset - tail_l.offset


@dataclass(frozen=True)
class Spectrum:
    """
    Run-length schema: value k_j repeated l_j times, j increasing
    """
    runs: EvAffineSeq

    def expand(self, length):
        return self.runs.expanded(length)


def spectrum(order):
    return Spectrum(order.seq)


def spectra_tail_equivalent(u, v):
    """
    Expanded sequences share a tail. Run values strictly increase, so after the first
    compared run (which may be truncated) runs must match one-to-one
    """
    return u.runs.tail_shift(v.runs) is not None


@dataclass(frozen=True)
class CutType:
    left_cof: CofClass
    right_coin: CofClass

    def __str__(self):
        return f'({self.left_cof},{self.right_coin})'


@dataclass(frozen=True)
class EndData:
    coinitiality: CofClass
    cofinality: CofClass


@dataclass(frozen=True)
class Ladder:
    """
    Decreasing coinitial sequence of boundary cuts; each rung is the rightmost cut to
    the left with type at least the current type. Cuts inside a block w^k all have
    type < k, so only boundary cuts can be rungs
    """
    order: Rj4Order
    cuts: tuple

    @property
    def types(self):
        blocks = self.order.seq.expanded(self.cuts[-1] + 1)
        return [blocks[cut] for cut in self.cuts]

    def extended(self, steps):
        blocks = self.order.seq.expanded(self.cuts[-1] + 1)
        cuts = list(self.cuts)
        for _ in range(steps):
            current = cuts[-1]
            candidate = current + 1
            while True:
                if candidate >= len(blocks):
                    blocks = self.order.seq.expanded(2 * candidate + 2)
                if blocks[candidate] >= blocks[current]:
                    break
                candidate += 1
            cuts.append(candidate)
        return Ladder(self.order, tuple(cuts))

    def coalescence(self, other):
        """
        (k0, l0) with self.cuts[k0 + n] == other.cuts[l0 + n] for every n in the computed range
        :return: tuple, or None if the computed prefixes never meet
        """
        positions = {cut: index for index, cut in enumerate(other.cuts)}
        for k0, cut in enumerate(self.cuts):
            if cut in positions:
                l0 = positions[cut]
                overlap = min(len(self.cuts) - k0, len(other.cuts) - l0)
                if self.cuts[k0:k0 + overlap] == other.cuts[l0:l0 + overlap]:
                    return k0, l0
                return None
        return None


def ladder(order, start=0, depth=100):
    if start < 0:
        raise InvalidCutIndex(start)
    if depth < 1:
        raise ValueError(f'ladder depth must be positive, got {depth}')
    return Ladder(order, (start,)).extended(depth - 1)


def _ordinal_cut_classes(beta):
    """
    Cut classes (cofinality of the left part, coinitiality of the right part) for cuts
    whose left part ends with a nonzero initial segment gamma <= beta of an ordinal summand.
    The right part is a nonempty final segment of an ordinal, so its coinitiality is 1
    """
    classes = set()
    for gamma in (natural(1), OMEGA):
        if not beta < gamma:
            classes.add(CutType(CofClass.from_cofinality(ord_cofinality(gamma)), CofClass.ONE))
    return classes


def cut_types(order):
    """
    All classes of proper cuts. Every cut's left part ends inside or at the end of some
    summand (only finitely many summands lie to its right), so the classes are the union
    over summands; all tail summands w^k with k >= 1 classify alike
    """
    classes = set()
    representatives = range(1, order.seq.tail_onset + 1)
    for j in representatives:
        classes |= _ordinal_cut_classes(order.summand(j))
    # cuts inside the terminal w^w, after a nonempty initial segment of it
    classes |= _ordinal_cut_classes(OMEGA_OMEGA)
    return frozenset(classes)


def end_data(order):
    """
    Coinitiality w from the omega*-indexing; cofinality of the terminal w^w
    """
    return EndData(CofClass.OMEGA, CofClass.from_cofinality(ord_cofinality(OMEGA_OMEGA)))

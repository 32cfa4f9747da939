"""
Eventually-affine integer sequences indexed from 1.

A schema lists finitely many explicit (l, k) pairs and then continues with
affine maps j -> a*j + b for every j from the tail onset on. These encode the
coefficients l_j and exponents k_j of omega*-sums of ordinal terms.
"""
from __future__ import annotations

from dataclasses import dataclass

from classes.exceptions import InvalidSchema


@dataclass(frozen=True)
class AffineMap:
    slope: int
    offset: int

    def __call__(self, j):
        return self.slope * j + self.offset

    def shifted(self, r):
        """
        The map j -> f(j + r)
        """
        return AffineMap(self.slope, self.slope * r + self.offset)

    def __str__(self):
        if self.slope == 0:
            return str(self.offset)
        head = 'j' if self.slope == 1 else f'{self.slope}*j'
        if self.offset == 0:
            return head
        return f'{head}{self.offset:+d}'


@dataclass(frozen=True)
class EvAffineSeq:
    initial: tuple
    tail_onset: int
    tail_l: AffineMap
    tail_k: AffineMap

    def __post_init__(self):
        if self.tail_onset != len(self.initial) + 1:
            raise InvalidSchema(self, f'tail onset {self.tail_onset} must follow the '
                                      f'{len(self.initial)} initial terms')
        for l, k in self.initial:
            if l < 1 or k < 1:
                raise InvalidSchema(self, f'initial term ({l}, {k}) is not positive')
        onset = self.tail_onset
        if self.tail_l.slope < 0 or self.tail_l(onset) < 1:
            raise InvalidSchema(self, 'coefficients must stay positive along the tail')
        if self.tail_k.slope < 1 or self.tail_k(onset) < 1:
            raise InvalidSchema(self, 'exponents must be positive and strictly increasing along the tail')
        exponents = [k for _, k in self.initial] + [self.tail_k(onset)]
        if any(left >= right for left, right in zip(exponents, exponents[1:])):
            raise InvalidSchema(self, f'exponents {exponents} are not strictly increasing')

    @classmethod
    def pure_tail(cls, tail_l, tail_k):
        return cls((), 1, tail_l, tail_k)

    def l(self, j):
        if j < self.tail_onset:
            return self.initial[j - 1][0]
        return self.tail_l(j)

    def k(self, j):
        if j < self.tail_onset:
            return self.initial[j - 1][1]
        return self.tail_k(j)

    def term(self, j):
        if j < 1:
            raise IndexError(f'schema indices start at 1, got {j}')
        return self.l(j), self.k(j)

    def terms(self, count):
        return [self.term(j) for j in range(1, count + 1)]

    def with_exponents_raised(self, amount):
        """
        Adds amount to every exponent k_j
        """
        initial = tuple((l, k + amount) for l, k in self.initial)
        tail_k = AffineMap(self.tail_k.slope, self.tail_k.offset + amount)
        return EvAffineSeq(initial, self.tail_onset, self.tail_l, tail_k)

    def expanded(self, length):
        """
        First length entries of k_1 repeated l_1 times, k_2 repeated l_2 times, ...
        """
        values = []
        j = 1
        while len(values) < length:
            l, k = self.term(j)
            values.extend([k] * l)
            j += 1
        return values[:length]

    def tail_shift(self, other):
        """
        Signed shift r such that self_j == other_{j + r} for every large j
        :return: int, or None if the tails never align
        """
        if self.tail_k.slope != other.tail_k.slope or self.tail_l.slope != other.tail_l.slope:
            return None
        difference = self.tail_k.offset - other.tail_k.offset
        if difference % other.tail_k.slope:
            return None
        r = difference // other.tail_k.slope
        if other.tail_l.shifted(r) != self.tail_l:
            return None
        return r

    def agreement_onset(self, other, r):
        """
        Least N such that self_n == other_{n + r} for every n >= N
        """
        lowest = max(1, 1 - r)
        onset = max(self.tail_onset, other.tail_onset - r, lowest)
        while onset - 1 >= lowest and self.term(onset - 1) == other.term(onset - 1 + r):
            onset -= 1
        return onset

    def __str__(self):
        initial = ','.join(f'({l},{k})' for l, k in self.initial)
        return (f'init=[{initial}]; tail j>={self.tail_onset}: '
                f'l={self.tail_l}, k={self.tail_k}')

"""
Eventually periodic sequences over nonzero integers.

Symbols stand in for points of w1* + w1: the sign gives the side, the magnitude
the rank. Zero is the identified midpoint and never occurs.
"""
from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from classes.exceptions import InvalidSequence, ZeroSymbol

logger = logging.getLogger(__name__)


def _rotate(word, t):
    t %= len(word)
    return word[t:] + word[:t]


def _primitive_root(word):
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


def least_rotation(word):
    return min(_rotate(word, t) for t in range(len(word)))


@functools.total_ordering
@dataclass(frozen=True)
class EvPeriodicSeq:
    """
    preperiod followed by period repeated forever, kept canonical: the period is primitive
    and the preperiod does not end with the last symbol of the period
    """
    preperiod: tuple
    period: tuple

    def __post_init__(self):
        preperiod, period = tuple(self.preperiod), tuple(self.period)
        if not period:
            raise InvalidSequence(preperiod, period, 'period must be nonempty')
        if 0 in preperiod or 0 in period:
            raise ZeroSymbol(f'preperiod={list(preperiod)}, period={list(period)}')
        period = _primitive_root(period)
        while preperiod and preperiod[-1] == period[-1]:
            preperiod = preperiod[:-1]
            period = _rotate(period, -1)
        object.__setattr__(self, 'preperiod', preperiod)
        object.__setattr__(self, 'period', period)

    @classmethod
    def periodic(cls, *period):
        return cls((), period)

    def __getitem__(self, index):
        if index < len(self.preperiod):
            return self.preperiod[index]
        return self.period[(index - len(self.preperiod)) % len(self.period)]

    def prefix(self, length):
        return tuple(self[index] for index in range(length))

    def comparison_length(self, other):
        # two distinct sequences already differ within this many symbols
        return 2 * max(len(self.preperiod) + len(self.period), len(other.preperiod) + len(other.period))

    def __lt__(self, other):
        if not isinstance(other, EvPeriodicSeq):
            return NotImplemented
        length = self.comparison_length(other)
        return self.prefix(length) < other.prefix(length)

    def __str__(self):
        return f'seq{{pre=[{",".join(map(str, self.preperiod))}]; per=[{",".join(map(str, self.period))}]}}'


class Label(Enum):
    EVEN = 'even'
    ODD = 'odd'
    FULL = 'full'


def cons(a, u):
    if a == 0:
        raise ZeroSymbol('cons')
    return EvPeriodicSeq((a,) + u.preperiod, u.period)


def _phase(u, v):
    """
    t with v.period == rotation of u.period by t, or None
    """
    if len(u.period) != len(v.period):
        return None
    for t in range(len(u.period)):
        if _rotate(u.period, t) == v.period:
            return t
    return None


def tail_equiv(u, v):
    return _phase(u, v) is not None


def tail_equiv2(u, v):
    """
    u[m:] == v[m':] exactly when m - m' = len(u.pre) - len(v.pre) + t modulo the period n;
    an even difference exists iff that residue is even or n is odd
    """
    t = _phase(u, v)
    if t is None:
        return False
    n = len(u.period)
    delta = len(u.preperiod) - len(v.preperiod) + t
    return delta % math.gcd(n, 2) == 0


def odd_period_char(u):
    return len(u.period) % 2 == 1


def canonical_representative(u):
    return EvPeriodicSeq.periodic(*least_rotation(u.period))


def label(u):
    if odd_period_char(u):
        return Label.FULL
    return Label.EVEN if tail_equiv2(u, canonical_representative(u)) else Label.ODD


@dataclass(frozen=True)
class FlattenReport:
    checked: int
    violations: int
    density_checked: int
    density_failures: int
    first_witness: dict = None

    @property
    def passed(self):
        return self.violations == 0 and self.density_failures == 0

    def as_record(self):
        return {
            'checked': self.checked,
            'violations': self.violations,
            'density_checked': self.density_checked,
            'density_failures': self.density_failures,
            'first_witness': self.first_witness,
        }


def _random_sequences(rng, count, alphabet_bound):
    pre_lengths = rng.integers(0, 4, size=count)
    per_lengths = rng.integers(1, 5, size=count)
    magnitudes = rng.integers(1, alphabet_bound + 1, size=(count, 8))
    signs = rng.choice(np.array([-1, 1]), size=(count, 8))
    symbols = (magnitudes * signs).tolist()
    return [EvPeriodicSeq(tuple(row[:pre]), tuple(row[4:4 + per]))
            for row, pre, per in zip(symbols, pre_lengths.tolist(), per_lengths.tolist())]


def between(u, v):
    """
    An eventually periodic w with u < w < v: agree with u through the first difference,
    then repeat a symbol above u's next one
    """
    length = u.comparison_length(v)
    m = next(index for index in range(length) if u[index] != v[index])
    above = u[m + 1] + 1
    return EvPeriodicSeq(u.prefix(m + 1), (above if above != 0 else 1,))


def flatten_check(alphabet_bound, samples, seed):
    """
    Checks that (a, u) -> au preserves the product order of A x A^w, and that between
    any two sampled sequences a third one can be built
    :param alphabet_bound: symbols are drawn from -bound..-1, 1..bound
    :param samples: number of sampled pairs
    :param seed: seed of the numpy generator
    :return: FlattenReport
    """
    if alphabet_bound < 2:
        raise ValueError(f'alphabet_bound must be at least 2, got {alphabet_bound}')
    rng = np.random.default_rng(seed)
    firsts = _random_sequences(rng, samples, alphabet_bound)
    seconds = _random_sequences(rng, samples, alphabet_bound)
    heads = (rng.integers(1, alphabet_bound + 1, size=(samples, 2)) * rng.choice([-1, 1], size=(samples, 2))).tolist()

    violations = density_checked = density_failures = 0
    witness = None
    for (a, b), u, v in zip(heads, firsts, seconds):
        if (a, u) == (b, v):
            continue
        if (b, v) < (a, u):
            (a, u), (b, v) = (b, v), (a, u)
        if not cons(a, u) < cons(b, v):
            violations += 1
            witness = witness or {'kind': 'order', 'left': f'({a}, {u})', 'right': f'({b}, {v})'}

        if u == v:
            continue
        low, high = (u, v) if u < v else (v, u)
        density_checked += 1
        w = between(low, high)
        if not low < w < high:
            density_failures += 1
            witness = witness or {'kind': 'density', 'low': str(low), 'high': str(high), 'between': str(w)}

    report = FlattenReport(samples, violations, density_checked, density_failures, witness)
    logger.debug('Flatten check: %s', report.as_record())
    return report

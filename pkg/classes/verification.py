"""
End-to-end replay of the construction: every countable computation becomes a check.

Check groups, in order:
  C1  ordinal law suite and identity table
  C2  L_i * w is isomorphic to L_(i+1)
  C3  L_i, L_j pairwise non-isomorphic, the two invariants agreeing
  C4  displayed spectra of L_0 and L_1
  C5  ladder coalescence
  C6  cut and gap profiles
  C7  relations between I_even, I_odd and I
  C8  tail classes of eventually periodic sequences and the flattening map
"""
from __future__ import annotations

import functools
import itertools
import json
import logging
import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np
import pandas as pd

import config
from classes.block_sum import IVariant, gap_profile, make_I, variant_for_label, zsum_iso, zsum_mul_omega
from classes.exceptions import ConfigurationError, OrderTypeError
from classes.law_suite import LawSuite
from classes.normalizer import IsoVerdict, iso_check
from classes.order_term import LexProd, OrdLeaf, Rj4Ref, ZSumRef
from classes.ordinal import OMEGA, CofClass, omega_power, ord_mul
from classes.scattered import (
    CutType, cut_types, ladder, make_L, rj4_mul_omega, slater_iso, spectra_tail_equivalent, spectrum,
)
from classes.sequences import (
    EvPeriodicSeq, Label, cons, flatten_check, label, least_rotation, odd_period_char, tail_equiv, tail_equiv2,
)

logger = logging.getLogger(__name__)

CONCLUSION = (
    'C2-C8 replay every countable computation in the construction of two non-isomorphic '
    'orders that divide each other on both sides. The fixed-point step that produces '
    'the uncountable orders themselves is cited, not computed.'
)


@dataclass(frozen=True)
class Config:
    range_i: tuple = config.DEFAULT_RANGE_I
    pair_range: tuple = config.DEFAULT_PAIR_RANGE
    ladder_range: tuple = config.DEFAULT_LADDER_RANGE
    ladder_starts: int = config.DEFAULT_LADDER_STARTS
    ladder_depth: int = config.DEFAULT_LADDER_DEPTH
    law_samples: int = config.DEFAULT_LAW_SAMPLES
    flatten_samples: int = config.DEFAULT_FLATTEN_SAMPLES
    alphabet_bound: int = config.DEFAULT_ALPHABET_BOUND
    seed: int = config.DEFAULT_SEED

    def validate(self):
        for name in ('range_i', 'pair_range', 'ladder_range'):
            bounds = getattr(self, name)
            if len(bounds) != 2 or bounds[0] > bounds[1]:
                raise ConfigurationError(name, bounds, 'range must be a nonempty interval [low, high]')
        for name in ('ladder_starts', 'ladder_depth', 'law_samples', 'flatten_samples'):
            if getattr(self, name) < 1:
                raise ConfigurationError(name, getattr(self, name), 'must be positive')
        if self.alphabet_bound < 2:
            raise ConfigurationError('alphabet_bound', self.alphabet_bound, 'must be at least 2')
        return self


@dataclass(frozen=True)
class CheckRecord:
    id: str
    claim: str
    locus: str
    passed: bool
    witness: dict = field(default_factory=dict)
    duration: float = 0.0

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple
    conclusion: str = CONCLUSION

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def as_record(self):
        return {
            'passed': self.passed,
            'checks': [{**asdict(check), 'verdict': check.verdict} for check in self.checks],
            'conclusion': self.conclusion,
        }

    def to_json(self):
        return json.dumps(self.as_record(), indent=2, default=str)

    def to_text(self):
        lines = [f'[{check.verdict.upper()}] {check.id} — {check.claim} ({check.locus})' for check in self.checks]
        lines.append(f'overall: {"PASS" if self.passed else "FAIL"}')
        lines.append(self.conclusion)
        return '\n'.join(lines)

    def to_frame(self):
        return pd.DataFrame(
            [(check.id, check.claim, check.locus, check.verdict, check.duration) for check in self.checks],
            columns=['id', 'claim', 'locus', 'verdict', 'duration'],
        ).set_index('id')


def _interval(bounds):
    low, high = bounds
    return range(low, high + 1)


def check_laws(cfg, make_l):
    report = LawSuite.run(cfg.law_samples, cfg.seed)
    # operand-swapped multiplication must be caught by the same suite
    mutant = LawSuite.run(min(cfg.law_samples, 100), cfg.seed, mul=lambda a, b: ord_mul(b, a))
    witness = {'samples': report.checked, 'mutation_caught': not mutant.passed}
    if not report.passed:
        witness.update(law=report.law, counterexample=list(report.witnesses))
    return report.passed and not mutant.passed, witness


def check_product_law(cfg, make_l):
    omega = OrdLeaf(OMEGA)
    for i in _interval(cfg.range_i):
        lifted, successor = make_l(i), make_l(i + 1)
        if not slater_iso(rj4_mul_omega(lifted), successor):
            return False, {'i': i, 'reason': 'slater criterion rejects L_i*w vs L_(i+1)'}
        if iso_check(LexProd(Rj4Ref(lifted), omega), Rj4Ref(successor)) is not IsoVerdict.ISOMORPHIC:
            return False, {'i': i, 'reason': 'normalizer does not identify L_i*w with L_(i+1)'}
    return True, {'indices': len(_interval(cfg.range_i))}


def verdict_matrices(cfg, make_l):
    """
    Pairwise slater_iso and spectrum tail-equivalence verdicts over pair_range
    :return: (slater, spectra) DataFrames indexed by i (rows) and j (columns)
    """
    indices = list(_interval(cfg.pair_range))
    orders = {i: make_l(i) for i in indices}
    spectra = {i: spectrum(orders[i]) for i in indices}
    slater = pd.DataFrame([[slater_iso(orders[i], orders[j]) for j in indices] for i in indices],
                          index=indices, columns=indices)
    tails = pd.DataFrame([[spectra_tail_equivalent(spectra[i], spectra[j]) for j in indices] for i in indices],
                         index=indices, columns=indices)
    return slater, tails


def check_pairwise(cfg, make_l):
    slater, tails = verdict_matrices(cfg, make_l)
    expected = np.eye(len(slater), dtype=bool)
    for name, matrix in (('slater_iso', slater), ('spectra_tail_equivalent', tails)):
        wrong = np.argwhere(matrix.to_numpy() != expected)
        if len(wrong):
            row, column = wrong[0]
            return False, {'invariant': name, 'i': int(slater.index[row]), 'j': int(slater.columns[column])}
    disagreements = int((slater.to_numpy() != tails.to_numpy()).sum())
    pairs = len(slater) * (len(slater) - 1)
    return disagreements == 0, {'ordered_pairs': pairs, 'disagreements': disagreements}


def displayed_spectrum(i, length):
    """
    1, 2, 2, 3, 3, 3, ... for L_0 and 2, 3, 3, 4, 4, 4, ... for L_1: value n + i repeated n times
    """
    values = (n + i for n in itertools.count(1) for _ in range(n))
    return list(itertools.islice(values, length))


def _windows_disjoint(u, v, start, width, max_shift):
    return all(u[start:start + width] != v[start + s:start + s + width] for s in range(-max_shift, max_shift + 1))


def check_spectra(cfg, make_l):
    length = config.SPECTRUM_PREFIX_LENGTH
    first, second = spectrum(make_l(0)), spectrum(make_l(1))
    u, v = first.expand(length), second.expand(length)
    for i, observed in ((0, u), (1, v)):
        expected = displayed_spectrum(i, length)
        if observed != expected:
            return False, {'i': i, 'observed': observed[:12], 'expected': expected[:12]}
    if spectra_tail_equivalent(first, second):
        return False, {'reason': 'spectra of L_0 and L_1 reported tail-equivalent'}
    long_u, long_v = first.expand(4 * length), second.expand(4 * length)
    if not _windows_disjoint(long_u, long_v, length, length, length // 2):
        return False, {'reason': 'expanded spectra share a window'}
    return True, {'prefix_length': length}


def check_ladders(cfg, make_l):
    for i in _interval(cfg.ladder_range):
        order = make_l(i)
        ladders = [ladder(order, start, cfg.ladder_depth) for start in range(cfg.ladder_starts)]
        for a, b in itertools.combinations(range(len(ladders)), 2):
            if ladders[a].coalescence(ladders[b]) is None:
                return False, {'i': i, 'starts': [a, b]}
    return True, {'orders': len(_interval(cfg.ladder_range)), 'starts': cfg.ladder_starts}


def check_cut_profiles(cfg, make_l):
    expected = {CutType(CofClass.ONE, CofClass.ONE), CutType(CofClass.OMEGA, CofClass.ONE)}
    for i in _interval(cfg.pair_range):
        observed = cut_types(make_l(i))
        if observed != expected:
            return False, {'i': i, 'cut_types': sorted(map(str, observed))}
    for variant in IVariant:
        profile = gap_profile(make_I(variant))
        if not profile.gaps_only_at_boundaries:
            return False, {'variant': variant.value, 'boundary': str(profile.boundary)}
    return True, {'orders': len(_interval(cfg.pair_range)), 'variants': len(IVariant)}


def _term_verdict(x, y, power):
    term = ZSumRef(x) if power == 0 else LexProd(ZSumRef(x), OrdLeaf(omega_power(power)))
    return iso_check(term, ZSumRef(y)) is IsoVerdict.ISOMORPHIC


def check_block_sums(cfg, make_l):
    even, odd, mid = (make_I(variant) for variant in IVariant)
    claims = [
        ('I_even*w ~ I_odd', even, odd, 1, True),
        ('I_odd*w ~ I_even', odd, even, 1, True),
        ('I*w ~ I', mid, mid, 1, True),
        ('I_even*w^2 ~ I_even', even, even, 2, True),
        ('I_odd*w^2 ~ I_odd', odd, odd, 2, True),
        ('I*w^2 ~ I', mid, mid, 2, True),
        ('I_even !~ I_odd', even, odd, 0, False),
        ('I_even !~ I', even, mid, 0, False),
        ('I_odd !~ I', odd, mid, 0, False),
    ]
    for description, x, y, power, expected in claims:
        lifted = x
        for _ in range(power):
            lifted = zsum_mul_omega(lifted)
        if zsum_iso(lifted, y) != expected or zsum_iso(y, lifted) != expected:
            return False, {'claim': description, 'criterion': 'zsum_iso'}
        if _term_verdict(x, y, power) != expected:
            return False, {'claim': description, 'criterion': 'iso_check'}
    return True, {'relations': len(claims)}


def exhaustive_family(alphabet=config.EXHAUSTIVE_ALPHABET,
                      max_preperiod=config.EXHAUSTIVE_MAX_PREPERIOD,
                      max_period=config.EXHAUSTIVE_MAX_PERIOD):
    """
    Every canonical sequence with preperiod and period lengths within the bounds
    """
    family = set()
    for pre_length in range(max_preperiod + 1):
        for per_length in range(1, max_period + 1):
            for preperiod in itertools.product(alphabet, repeat=pre_length):
                for period in itertools.product(alphabet, repeat=per_length):
                    family.add(EvPeriodicSeq(preperiod, period))
    return sorted(family, key=lambda u: (len(u.preperiod), len(u.period), u.preperiod, u.period))


def shift_oracle(u, v):
    """
    Brute force over deletions: (u, v tail-equivalent, with deleted prefixes of equal parity)
    """
    n = math.lcm(len(u.period), len(v.period))
    start_u, start_v = len(u.preperiod), len(v.preperiod)
    target = v.prefix(start_v + n)[start_v:]
    word = u.prefix(start_u + 3 * n)
    parities = {(m - start_v) % 2 for m in range(start_u, start_u + 2 * n) if word[m:m + n] == target}
    return bool(parities), 0 in parities


@functools.lru_cache(maxsize=None)
def variant_step(u_label, au_label):
    """
    Block sums I_u and I_au selected by the labels of u and au
    :return: (I_u * w ~ I_au, I_u ~ I_au)
    """
    block, successor = variant_for_label(u_label), variant_for_label(au_label)
    return zsum_iso(zsum_mul_omega(block), successor), zsum_iso(block, successor)


def check_sequences(cfg, make_l):
    family = exhaustive_family()
    alphabet = config.EXHAUSTIVE_ALPHABET
    discrepancies = []
    swapped = {Label.EVEN: Label.ODD, Label.ODD: Label.EVEN, Label.FULL: Label.FULL}

    for u in family:
        u_label = label(u)
        for a in alphabet:
            v = cons(a, u)
            equivalent, even = shift_oracle(u, v)
            if not equivalent or tail_equiv2(u, v) != even or even != odd_period_char(u):
                discrepancies.append({'kind': 'odd period', 'u': str(u), 'a': a})
            if label(v) != swapped[u_label]:
                discrepancies.append({'kind': 'label parity', 'u': str(u), 'a': a})
            lifted, same = variant_step(u_label, label(v))
            if not lifted or same != odd_period_char(u):
                discrepancies.append({'kind': 'block variant', 'u': str(u), 'a': a})

    classes = {}
    for u in family:
        classes.setdefault(least_rotation(u.period), []).append(u)
    for members in classes.values():
        u = members[0]
        for a, v in itertools.product(alphabet, members):
            if not tail_equiv(u, v) or not (tail_equiv2(v, u) or tail_equiv2(v, cons(a, u))):
                discrepancies.append({'kind': 'class split', 'u': str(u), 'a': a, 'v': str(v)})

    # even period: I_u and I_au differ
    fixed = EvPeriodicSeq.periodic(1, -1)
    fixed_split = not variant_step(label(fixed), label(cons(1, fixed)))[1]

    flatten = flatten_check(cfg.alphabet_bound, cfg.flatten_samples, cfg.seed)
    witness = {
        'family': len(family),
        'tail_classes': len(classes),
        'discrepancies': len(discrepancies),
        'fixed_point_split': fixed_split,
        'flatten': flatten.as_record(),
    }
    if discrepancies:
        witness['first_discrepancy'] = discrepancies[0]
    return not discrepancies and fixed_split and flatten.passed, witness


CHECKS = [
    ('C1', 'ordinal arithmetic satisfies its laws and the identity table', 'ordinal arithmetic', check_laws),
    ('C2', 'L_i*w is isomorphic to L_(i+1)', 'product law of the L-family', check_product_law),
    ('C3', 'L_i and L_j are not isomorphic for i != j', 'tail criterion and spectra', check_pairwise),
    ('C4', 'spectra of L_0 and L_1 match and are not tail-equivalent', 'spectra of the L-family', check_spectra),
    ('C5', 'any two ladders eventually coalesce', 'ladders', check_ladders),
    ('C6', 'L_i has only (1,1)- and (w,1)-cuts; block sums have (w,w)-gaps only at boundaries',
     'cut and gap analysis', check_cut_profiles),
    ('C7', 'I_even*w ~ I_odd, I_odd*w ~ I_even, I*w ~ I, w^2-invariance, pairwise distinct',
     'block sums over Z', check_block_sums),
    ('C8', 'odd periods characterise u ~2 au; [u] splits into [u]_2 and [au]_2; labels swap and select I_u with I_u*w ~ I_au; flattening',
     'tail-equivalence and flattening', check_sequences),
]


def verify_all(cfg=None, make_l=make_L):
    """
    Runs every check group in order
    :param cfg: Config, defaults when None
    :param make_l: constructor of the L-family, replaceable to test that mutations are caught
    :raise ConfigurationError: before any check runs
    """
    cfg = (cfg or Config()).validate()
    records = []
    for check_id, claim, locus, check in CHECKS:
        started = time.perf_counter()
        try:
            passed, witness = check(cfg, make_l)
        except OrderTypeError as e:
            passed, witness = False, {'error': type(e).__name__, 'message': str(e).strip()}
        duration = time.perf_counter() - started
        if passed:
            logger.info('%s passed in %.3fs', check_id, duration)
        else:
            logger.warning('%s failed: %s', check_id, witness)
        records.append(CheckRecord(check_id, claim, locus, passed, witness, round(duration, 6)))
    return VerificationReport(tuple(records))

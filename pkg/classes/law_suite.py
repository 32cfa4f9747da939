import logging
from dataclasses import dataclass, field

import numpy as np

from classes.exceptions import OrderTypeError
from classes.ordinal import OMEGA, OMEGA_OMEGA, ONE, CnfOrdinal, natural, omega_power, ord_add, ord_mul

logger = logging.getLogger(__name__)

# Samples stay below omega^SAMPLE_EXPONENT_BOUND
SAMPLE_EXPONENT_BOUND = 6
SAMPLE_COEFFICIENT_BOUND = 5


@dataclass(frozen=True)
class LawReport:
    passed: bool
    checked: int
    law: str = None
    witnesses: tuple = field(default_factory=tuple)
    detail: str = None

    def summary(self):
        if self.passed:
            return f'{self.checked} samples, all laws hold'
        return f"law '{self.law}' violated by {', '.join(self.witnesses)}"


class LawSuite:
    """
    Checks ordinal arithmetic against its algebraic laws and a table of hand-verified identities
    """
    # (identity, builder of both sides from the operations under test, whether the sides are equal)
    identity_table = [
        ('1 + w = w', lambda add, mul: (add(ONE, OMEGA), OMEGA), True),
        ('3 + w = w', lambda add, mul: (add(natural(3), OMEGA), OMEGA), True),
        ('w + w^w = w^w', lambda add, mul: (add(OMEGA, OMEGA_OMEGA), OMEGA_OMEGA), True),
        ('(w*2 + 3) + (w + 1) = w*3 + 1',
         lambda add, mul: (add(add(omega_power(1, 2), natural(3)), add(OMEGA, ONE)),
                           add(omega_power(1, 3), ONE)), True),
        ('w*2 != 2*w', lambda add, mul: (mul(OMEGA, natural(2)), mul(natural(2), OMEGA)), False),
        ('2*w = w', lambda add, mul: (mul(natural(2), OMEGA), OMEGA), True),
        ('(w + 1)*w = w*w', lambda add, mul: (mul(add(OMEGA, ONE), OMEGA), mul(OMEGA, OMEGA)), True),
        ('w^w*w = w^(w + 1)', lambda add, mul: (mul(OMEGA_OMEGA, OMEGA), omega_power(add(OMEGA, ONE))), True),
        ('w*w^w = w^w', lambda add, mul: (mul(OMEGA, OMEGA_OMEGA), OMEGA_OMEGA), True),
        ('(w^2 + w)*w = w^3', lambda add, mul: (mul(add(omega_power(2), OMEGA), OMEGA), omega_power(3)), True),
    ]

    @staticmethod
    def sample_triples(sample_budget, seed, density=0.4):
        """
        Draws random ordinal triples below omega^6
        :param sample_budget: number of triples
        :param seed: seed of the numpy generator
        :param density: probability that a given exponent occurs; 0 yields all-zero samples
        :return: list of (a, b, c) triples
        """
        rng = np.random.default_rng(seed)
        present = rng.random((sample_budget, 3, SAMPLE_EXPONENT_BOUND)) < density
        coefficients = rng.integers(1, SAMPLE_COEFFICIENT_BOUND + 1, size=(sample_budget, 3, SAMPLE_EXPONENT_BOUND))
        exponents = [natural(e) for e in range(SAMPLE_EXPONENT_BOUND)]

        triples = []
        for row_present, row_coefficients in zip(present, coefficients):
            triple = []
            for mask, values in zip(row_present, row_coefficients):
                terms = tuple((exponents[e], int(values[e]))
                              for e in reversed(range(SAMPLE_EXPONENT_BOUND)) if mask[e])
                triple.append(CnfOrdinal(terms))
            triples.append(tuple(triple))
        return triples

    @staticmethod
    def laws(add, mul):
        """
        Sampled laws as (name, predicate over a triple)
        """
        def right_monotone(op, a, b, c):
            if b == c:
                return True
            low, high = (b, c) if b < c else (c, b)
            return op(a, low) < op(a, high)

        return [
            ('associativity of +', lambda a, b, c: add(add(a, b), c) == add(a, add(b, c))),
            ('associativity of *', lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c))),
            ('left distributivity', lambda a, b, c: mul(a, add(b, c)) == add(mul(a, b), mul(a, c))),
            ('a + b >= b', lambda a, b, c: not add(a, b) < b),
            ('strict monotonicity of + on the right', lambda a, b, c: right_monotone(add, a, b, c)),
            ('strict monotonicity of * on the right',
             lambda a, b, c: a.is_zero or right_monotone(mul, a, b, c)),
            ('absorption n + limit = limit',
             lambda a, b, c: not b.is_limit or add(natural(len(a.terms) + 1), b) == b),
            ('absorption a + w^w = w^w', lambda a, b, c: add(a, OMEGA_OMEGA) == OMEGA_OMEGA),
        ]

    @classmethod
    def check_identities(cls, add, mul):
        for description, build, expected in cls.identity_table:
            try:
                left, right = build(add, mul)
            except OrderTypeError as e:
                return LawReport(False, 0, description, (description,), str(e))
            if (left == right) != expected:
                return LawReport(False, 0, description, (str(left), str(right)))
        return None

    @classmethod
    def run(cls, sample_budget, seed=0, add=ord_add, mul=ord_mul, density=0.4):
        """
        Runs the identity table, then every sampled law on every sampled triple
        :param sample_budget: number of random triples, at least 1
        :param add: ordinal addition under test
        :param mul: ordinal multiplication under test
        :return: LawReport with the first violated law and its witnesses
        """
        if sample_budget < 1:
            raise ValueError('sample_budget must be at least 1')

        failure = cls.check_identities(add, mul)
        if failure is not None:
            logger.debug('Identity table failed: %s', failure.summary())
            return failure

        laws = cls.laws(add, mul)
        for checked, triple in enumerate(cls.sample_triples(sample_budget, seed, density)):
            for name, predicate in laws:
                try:
                    holds = predicate(*triple)
                except OrderTypeError as e:
                    return LawReport(False, checked, name, tuple(str(x) for x in triple), str(e))
                if not holds:
                    logger.debug('Law %s violated by %s', name, triple)
                    return LawReport(False, checked, name, tuple(str(x) for x in triple))

        logger.debug('Law suite passed on %d samples', sample_budget)
        return LawReport(True, sample_budget)


def law_suite(sample_budget, seed=0):
    return LawSuite.run(sample_budget, seed)

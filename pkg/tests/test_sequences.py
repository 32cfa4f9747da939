import pytest
from hypothesis import given
from hypothesis import strategies as st

from classes.exceptions import InvalidSequence, ZeroSymbol
from classes.sequences import (
    EvPeriodicSeq, Label, between, canonical_representative, cons, flatten_check, label, least_rotation,
    odd_period_char, tail_equiv, tail_equiv2,
)
from classes.verification import shift_oracle
from tests.strategies import sequences, symbols


def test_canonical_form():
    assert EvPeriodicSeq((), (1, 2, 1, 2)).period == (1, 2)
    trimmed = EvPeriodicSeq((1, 2), (2,))
    assert (trimmed.preperiod, trimmed.period) == ((1,), (2,))
    rotated = EvPeriodicSeq((2,), (1, 2))
    assert (rotated.preperiod, rotated.period) == ((), (2, 1))
    assert rotated == EvPeriodicSeq.periodic(2, 1)


def test_invalid_sequences():
    with pytest.raises(ZeroSymbol):
        EvPeriodicSeq((0,), (1,))
    with pytest.raises(ZeroSymbol):
        cons(0, EvPeriodicSeq.periodic(1))
    with pytest.raises(InvalidSequence):
        EvPeriodicSeq((1,), ())


def test_indexing_and_text():
    u = EvPeriodicSeq((3,), (1, -2))
    assert u.prefix(6) == (3, 1, -2, 1, -2, 1)
    assert str(u) == 'seq{pre=[3]; per=[1,-2]}'


def test_lexicographic_order():
    assert EvPeriodicSeq.periodic(-1) < EvPeriodicSeq.periodic(1) < EvPeriodicSeq.periodic(2)
    assert EvPeriodicSeq.periodic(1, 2) < EvPeriodicSeq((1,), (2,))


def test_tail_equivalence():
    assert tail_equiv(EvPeriodicSeq.periodic(1, 2), EvPeriodicSeq.periodic(2, 1))
    assert not tail_equiv2(EvPeriodicSeq.periodic(1, 2), EvPeriodicSeq.periodic(2, 1))
    assert tail_equiv2(EvPeriodicSeq.periodic(1, 2), EvPeriodicSeq((-1, 2), (1, 2)))
    assert not tail_equiv(EvPeriodicSeq.periodic(1), EvPeriodicSeq.periodic(2))


def test_labels():
    assert label(EvPeriodicSeq.periodic(1, 2)) is Label.EVEN
    assert label(EvPeriodicSeq.periodic(2, 1)) is Label.ODD
    assert label(EvPeriodicSeq.periodic(1, 1, 2)) is Label.FULL
    assert label(cons(-1, EvPeriodicSeq.periodic(1, 2))) is Label.ODD
    assert canonical_representative(EvPeriodicSeq((5,), (2, 1))) == EvPeriodicSeq.periodic(1, 2)
    assert least_rotation((2, 1, 1)) == (1, 1, 2)


@given(sequences, sequences)
def test_tail_relations_match_shift_oracle(u, v):
    equivalent, even = shift_oracle(u, v)
    assert tail_equiv(u, v) == equivalent
    assert tail_equiv2(u, v) == even


@given(sequences, symbols)
def test_prepending_changes_parity_exactly_for_even_periods(u, a):
    assert tail_equiv2(u, cons(a, u)) == odd_period_char(u)


@given(sequences, symbols)
def test_labels_swap_under_prepending(u, a):
    swapped = {Label.EVEN: Label.ODD, Label.ODD: Label.EVEN, Label.FULL: Label.FULL}
    assert label(cons(a, u)) is swapped[label(u)]


@given(sequences, sequences)
def test_labels_are_2_tail_invariants(u, v):
    if tail_equiv2(u, v):
        assert label(u) is label(v)


@given(sequences, sequences)
def test_between_is_strictly_between(u, v):
    if u != v:
        low, high = (u, v) if u < v else (v, u)
        assert low < between(low, high) < high


@given(st.integers(0, 2 ** 16))
def test_flatten_check_passes_for_any_seed(seed):
    assert flatten_check(3, 20, seed).passed


def test_flatten_check_report():
    report = flatten_check(5, 500, 0)
    assert report.passed
    assert report.checked == 500
    assert report.first_witness is None
    assert report == flatten_check(5, 500, 0)


def test_flatten_check_needs_two_symbols():
    with pytest.raises(ValueError):
        flatten_check(1, 10, 0)

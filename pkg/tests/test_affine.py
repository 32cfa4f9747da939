import pytest

from classes.affine import AffineMap, EvAffineSeq
from classes.exceptions import InvalidSchema


@pytest.mark.parametrize('affine_map, text', [
    (AffineMap(2, -1), '2*j-1'),
    (AffineMap(1, 0), 'j'),
    (AffineMap(0, 5), '5'),
    (AffineMap(1, 2), 'j+2'),
])
def test_affine_map_text(affine_map, text):
    assert str(affine_map) == text


def test_shifted_map():
    f = AffineMap(2, 1)
    assert all(f.shifted(3)(j) == f(j + 3) for j in range(-5, 5))


def test_terms_and_expansion():
    seq = EvAffineSeq.pure_tail(AffineMap(1, 0), AffineMap(1, 0))
    assert seq.terms(3) == [(1, 1), (2, 2), (3, 3)]
    assert seq.expanded(6) == [1, 2, 2, 3, 3, 3]
    with pytest.raises(IndexError):
        seq.term(0)


def test_initial_terms_precede_the_tail():
    seq = EvAffineSeq(((5, 1),), 2, AffineMap(1, 0), AffineMap(1, 0))
    assert seq.terms(3) == [(5, 1), (2, 2), (3, 3)]
    assert seq.expanded(7) == [1, 1, 1, 1, 1, 2, 2]


@pytest.mark.parametrize('initial, onset, tail_l, tail_k', [
    ((), 2, AffineMap(1, 0), AffineMap(1, 0)),
    (((1, 3),), 2, AffineMap(1, 0), AffineMap(1, 0)),
    ((), 1, AffineMap(-1, 5), AffineMap(1, 0)),
    ((), 1, AffineMap(1, 0), AffineMap(0, 4)),
    (((0, 1),), 2, AffineMap(1, 0), AffineMap(1, 0)),
])
def test_invalid_schemas(initial, onset, tail_l, tail_k):
    with pytest.raises(InvalidSchema):
        EvAffineSeq(initial, onset, tail_l, tail_k)


def test_raising_exponents():
    seq = EvAffineSeq.pure_tail(AffineMap(1, 0), AffineMap(1, 0)).with_exponents_raised(2)
    assert seq.terms(2) == [(1, 3), (2, 4)]


def test_tail_shift():
    base = EvAffineSeq.pure_tail(AffineMap(1, 0), AffineMap(1, 0))
    ahead = EvAffineSeq.pure_tail(AffineMap(1, 1), AffineMap(1, 1))
    assert ahead.tail_shift(base) == 1
    assert base.tail_shift(ahead) == -1
    assert base.tail_shift(base) == 0
    skewed = EvAffineSeq.pure_tail(AffineMap(1, 0), AffineMap(1, 1))
    assert base.tail_shift(skewed) is None
    steep = EvAffineSeq.pure_tail(AffineMap(1, 0), AffineMap(2, 0))
    assert base.tail_shift(steep) is None


def test_agreement_onset():
    base = EvAffineSeq.pure_tail(AffineMap(1, 0), AffineMap(1, 0))
    prefixed = EvAffineSeq(((5, 1),), 2, AffineMap(1, 0), AffineMap(1, 0))
    assert prefixed.agreement_onset(base, 0) == 2
    assert base.agreement_onset(base, 0) == 1


def test_schema_text():
    seq = EvAffineSeq(((1, 1),), 2, AffineMap(2, 0), AffineMap(1, 0))
    assert str(seq) == 'init=[(1,1)]; tail j>=2: l=2*j, k=j'

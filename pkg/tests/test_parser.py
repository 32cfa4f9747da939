import pytest

from classes.affine import AffineMap
from classes.block_sum import IVariant, PeriodicBlockSum, make_I
from classes.exceptions import ExpressionSyntaxError, InvalidSchema, UnknownBlockName, ZeroSymbol
from classes.order_term import FinPow, FinSum, LexProd, OrdLeaf, Reverse, Rj4Ref, ZSumRef, make_atom
from classes.ordinal import OMEGA, ONE, natural, omega_power, ord_add
from classes.parser import (
    Tokenizer, l_index_of, parse, parse_affine, parse_ordinal, parse_rj4, parse_sequence, parse_zsum, render,
)
from classes.scattered import make_L, rj4_mul_omega
from classes.sequences import EvPeriodicSeq


def leaf(n):
    return OrdLeaf(natural(n))


@pytest.mark.parametrize('text, term', [
    ('w + 1', FinSum((OrdLeaf(OMEGA), leaf(1)))),
    ('2*w^3', LexProd(leaf(2), OrdLeaf(omega_power(3)))),
    ('2 * 3 * 4', LexProd(LexProd(leaf(2), leaf(3)), leaf(4))),
    ('rev(L(-1))', Reverse(Rj4Ref(make_L(-1)))),
    ('pow(w1, 2)', FinPow(make_atom('w1'), 2)),
    ('I', ZSumRef(make_I(IVariant.MID))),
    ('I_even', ZSumRef(make_I(IVariant.EVEN))),
    ('w^w', OrdLeaf(omega_power(OMEGA))),
    ('w^(w+1)', OrdLeaf(omega_power(ord_add(OMEGA, ONE)))),
    ('w^(2*w)', OrdLeaf(omega_power(omega_power(1, 2)))),
    ('zsum{L(2*i+1)}', ZSumRef(make_I(IVariant.ODD))),
    ('rj4{init=[]; tail j>=1: l=j, k=j+1}', Rj4Ref(make_L(1))),
])
def test_parse(text, term):
    assert parse(text) == term


@pytest.mark.parametrize('text, position', [
    ('w +', 3),
    ('w # 1', 2),
    ('(w + 1', 6),
    ('w 1', 2),
    ('pow(w1, 0)', 8),
    ('w^(L(0))', 2),
    ('w^', 2),
    ('L(x)', 2),
])
def test_syntax_errors_report_the_position(text, position):
    with pytest.raises(ExpressionSyntaxError) as error:
        parse(text)
    assert error.value.position == position
    assert str(error.value).splitlines()[2] == ' ' * position + '^'


def test_unknown_names():
    with pytest.raises(UnknownBlockName) as error:
        parse('w + foo')
    assert error.value.name == 'foo'
    assert error.value.position == 4


def test_sequence_literal_is_not_a_term():
    with pytest.raises(ExpressionSyntaxError):
        parse('seq{pre=[]; per=[1]}')


def test_tokens():
    kinds = [token.kind for token in Tokenizer('2*L(-1) + I_even').tokens()]
    assert kinds == ['NUMBER', 'OP', 'NAME', 'OP', 'OP', 'NUMBER', 'OP', 'OP', 'NAME', 'END']


@pytest.mark.parametrize('text, value', [
    ('w^3*2 + 1', ord_add(omega_power(3, 2), ONE)),
    ('2*w', OMEGA),
    ('(w + 1)*2', ord_add(omega_power(1, 2), ONE)),
    ('w^(w + 1)', omega_power(ord_add(OMEGA, ONE))),
    ('0', natural(0)),
])
def test_parse_ordinal(text, value):
    assert parse_ordinal(text) == value


def test_ordinal_text_reads_back():
    value = parse_ordinal('w^(w^2*3 + 1)*2 + w^w + w*4 + 7')
    assert parse_ordinal(str(value)) == value


@pytest.mark.parametrize('text, affine_map', [
    ('2*j-1', AffineMap(2, -1)),
    ('j', AffineMap(1, 0)),
    ('j + 3', AffineMap(1, 3)),
    ('5', AffineMap(0, 5)),
])
def test_parse_affine(text, affine_map):
    assert parse_affine(text) == affine_map


def test_parse_affine_rejects_other_variables():
    assert parse_affine('2*i+1', variable='i') == AffineMap(2, 1)
    with pytest.raises(ExpressionSyntaxError):
        parse_affine('2*i+1')


@pytest.mark.parametrize('i', range(-4, 5))
def test_schema_text_reads_back(i):
    assert parse_rj4(str(make_L(i))) == make_L(i)
    assert parse_rj4(str(rj4_mul_omega(make_L(i)))) == rj4_mul_omega(make_L(i))


def test_parse_rj4_checks_the_schema():
    assert parse_rj4('rj4{init=[(5,1)]; tail j>=2: l=j, k=j}').seq.terms(2) == [(5, 1), (2, 2)]
    with pytest.raises(InvalidSchema):
        parse_rj4('rj4{init=[(1,3)]; tail j>=2: l=j, k=j}')
    with pytest.raises(ExpressionSyntaxError):
        parse_rj4('rj4{l=j}')


def test_parse_zsum():
    assert parse_zsum('zsum{L(2*i)}') == make_I(IVariant.EVEN)
    assert parse_zsum('zsum{L(i)}') == make_I(IVariant.MID)
    assert parse_zsum('zsum{[L(0), L(-1)]}') == PeriodicBlockSum((make_L(0), make_L(-1)))
    with pytest.raises(ExpressionSyntaxError):
        parse_zsum('zsum{[]}')
    with pytest.raises(ExpressionSyntaxError):
        parse_zsum('zsum{I}')


def test_parse_sequence():
    assert parse_sequence('seq{pre=[1]; per=[2,-1]}') == EvPeriodicSeq((1,), (2, -1))
    assert parse_sequence('1,2') == EvPeriodicSeq.periodic(1, 2)
    assert parse_sequence('[2, -1]') == EvPeriodicSeq.periodic(2, -1)
    with pytest.raises(ExpressionSyntaxError):
        parse_sequence('1,x')
    with pytest.raises(ExpressionSyntaxError):
        parse_sequence('')
    with pytest.raises(ZeroSymbol):
        parse_sequence('0,1')


def test_l_index_of():
    assert [l_index_of(make_L(i)) for i in range(-3, 4)] == list(range(-3, 4))
    assert l_index_of(rj4_mul_omega(make_L(-1))) is None


@pytest.mark.parametrize('text', [
    '2*w^3 + w + 5',
    'rev(L(-2))',
    'L(0)*I_even + w1*I_even',
    'I_even*(L(0) + w1)',
    'pow(w1 + 1, 3)',
    'I_odd*w',
    'zsum{[L(0), L(1)]}',
    'w^(w + 1)*L(3)',
])
def test_render_reads_back(text):
    assert render(parse(text)) == text

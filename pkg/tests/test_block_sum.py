import pytest

from classes.affine import AffineMap, EvAffineSeq
from classes.block_sum import (
    AffineBlockSum, IVariant, PeriodicBlockSum, gap_profile, make_I, variant_for_label, zsum_iso, zsum_mul_omega,
)
from classes.exceptions import InvalidSchema, NotLFamilyError
from classes.ordinal import CofClass
from classes.scattered import CutType, Rj4Order, make_L, slater_iso
from classes.sequences import EvPeriodicSeq, Label, cons, label, odd_period_char

I_EVEN, I_ODD, I_MID = (make_I(variant) for variant in IVariant)


def lifted(block_sum, times):
    for _ in range(times):
        block_sum = zsum_mul_omega(block_sum)
    return block_sum


def test_variants():
    assert I_EVEN == AffineBlockSum(2, 0)
    assert I_ODD == AffineBlockSum(2, 1)
    assert I_MID == AffineBlockSum(1, 0)
    assert make_I('odd') == I_ODD
    assert [I_EVEN.block_index(i) for i in range(-2, 3)] == [-4, -2, 0, 2, 4]
    assert [I_ODD.block_index(i) for i in range(-2, 3)] == [-3, -1, 1, 3, 5]


def test_blocks_carry_the_lift():
    assert slater_iso(zsum_mul_omega(I_EVEN).block(0), make_L(1))
    assert zsum_mul_omega(I_MID).block_index(-4) == -3


def test_text():
    assert str(I_EVEN) == 'zsum{L(2*i)}'
    assert str(I_ODD) == 'zsum{L(2*i+1)}'
    assert str(I_MID) == 'zsum{L(i)}'
    assert str(PeriodicBlockSum((make_L(0), make_L(1)))).startswith('zsum{[rj4{')


@pytest.mark.parametrize('x, times, y, expected', [
    (I_EVEN, 1, I_ODD, True),
    (I_ODD, 1, I_EVEN, True),
    (I_MID, 1, I_MID, True),
    (I_EVEN, 2, I_EVEN, True),
    (I_ODD, 2, I_ODD, True),
    (I_MID, 2, I_MID, True),
    (I_EVEN, 0, I_ODD, False),
    (I_EVEN, 0, I_MID, False),
    (I_ODD, 0, I_MID, False),
    (I_EVEN, 1, I_EVEN, False),
])
def test_relations_between_variants(x, times, y, expected):
    assert zsum_iso(lifted(x, times), y) == expected
    assert zsum_iso(y, lifted(x, times)) == expected


def test_periodic_tables():
    table = PeriodicBlockSum((make_L(0), make_L(1)))
    rotated = PeriodicBlockSum((make_L(1), make_L(0)))
    constant = PeriodicBlockSum((make_L(0), make_L(0)))
    assert zsum_iso(table, rotated)
    assert zsum_iso(constant, AffineBlockSum(0, 0))
    assert zsum_iso(AffineBlockSum(0, 0), constant)
    assert not zsum_iso(table, I_MID)
    assert not zsum_iso(table, constant)
    assert zsum_iso(zsum_mul_omega(constant), AffineBlockSum(0, 1))


def test_non_family_blocks_are_rejected():
    steep = Rj4Order(EvAffineSeq.pure_tail(AffineMap(1, 0), AffineMap(2, 0)))
    with pytest.raises(NotLFamilyError):
        zsum_iso(PeriodicBlockSum((steep,)), I_MID)


def test_empty_table_is_rejected():
    with pytest.raises(InvalidSchema):
        PeriodicBlockSum(())


@pytest.mark.parametrize('variant', list(IVariant))
def test_gaps_only_at_block_boundaries(variant):
    profile = gap_profile(make_I(variant))
    assert profile.gaps_only_at_boundaries
    assert profile.boundary == CutType(CofClass.OMEGA, CofClass.OMEGA)
    assert profile.interior == {CutType(CofClass.ONE, CofClass.ONE), CutType(CofClass.OMEGA, CofClass.ONE)}


@pytest.mark.parametrize('label, variant', [
    (Label.EVEN, IVariant.EVEN),
    (Label.ODD, IVariant.ODD),
    (Label.FULL, IVariant.MID),
    ('full', IVariant.MID),
])
def test_variant_for_label(label, variant):
    assert variant_for_label(label) == make_I(variant)


@pytest.mark.parametrize('u', [
    EvPeriodicSeq.periodic(1, -1),
    EvPeriodicSeq.periodic(2, 1),
    EvPeriodicSeq((1,), (1, 1, 2)),
    EvPeriodicSeq((-1, 2), (2,)),
])
def test_label_variants_follow_prepending(u):
    block = variant_for_label(label(u))
    for a in (-1, 1, 2):
        successor = variant_for_label(label(cons(a, u)))
        assert zsum_iso(zsum_mul_omega(block), successor)
        assert zsum_iso(block, successor) == odd_period_char(u)

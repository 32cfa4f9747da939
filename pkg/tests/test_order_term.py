import pytest
from hypothesis import given

from classes.exceptions import InvalidTerm
from classes.order_term import (
    EMPTY, UNIT, Atom, FinPow, FinSum, LexProd, OrdLeaf, Reverse, Rj4Ref, TermVisitor, lex_prod, make_atom, reverse,
)
from classes.ordinal import OMEGA, CofClass, natural, ord_add
from classes.scattered import make_L
from tests.finite_order import evaluate_finite
from tests.strategies import finite_terms, reverse_free_terms, terms


def leaf(n):
    return OrdLeaf(natural(n))


@given(reverse_free_terms)
def test_reverse_is_an_involution(term):
    assert reverse(reverse(term)) == term


@given(terms)
def test_reverse_undoes_a_reverse_node(term):
    assert reverse(Reverse(term)) == term


def test_reverse_reaches_the_leaves():
    omega_plus_one = OrdLeaf(ord_add(OMEGA, natural(1)))
    assert reverse(omega_plus_one) == Reverse(omega_plus_one)
    assert reverse(FinSum((OrdLeaf(OMEGA), leaf(1)))) == FinSum((leaf(1), Reverse(OrdLeaf(OMEGA))))
    assert reverse(LexProd(OrdLeaf(OMEGA), leaf(2))) == LexProd(Reverse(OrdLeaf(OMEGA)), leaf(2))
    assert reverse(FinPow(Rj4Ref(make_L(0)), 2)) == FinPow(Reverse(Rj4Ref(make_L(0))), 2)
    assert reverse(leaf(3)) == leaf(3)


@given(finite_terms)
def test_reversal_matches_the_finite_model(term):
    assert evaluate_finite(reverse(term)).is_isomorphic(evaluate_finite(Reverse(term)))


def test_product_reversal_is_not_a_swap():
    left, right = FinSum((leaf(1), leaf(2))), leaf(2)
    reversed_product = evaluate_finite(Reverse(LexProd(left, right))).labels
    assert reversed_product == evaluate_finite(LexProd(Reverse(left), Reverse(right))).labels
    assert reversed_product != evaluate_finite(LexProd(Reverse(right), Reverse(left))).labels


def test_node_validation():
    with pytest.raises(InvalidTerm):
        FinSum((leaf(1),))
    with pytest.raises(InvalidTerm):
        FinPow(leaf(2), 0)


def test_units_and_atoms():
    assert EMPTY == OrdLeaf(natural(0))
    assert UNIT == leaf(1)
    assert make_atom('w1') == Atom('w1', CofClass.ONE, CofClass.OMEGA1)
    with pytest.raises(KeyError):
        make_atom('w2')


def test_visitor_dispatch():
    class LeafCounter(TermVisitor):
        def visit_OrdLeaf(self, term):
            return 1

        def visit_FinSum(self, term):
            return sum(map(self.visit, term.parts))

    assert LeafCounter().visit(FinSum((leaf(1), leaf(2), leaf(3)))) == 3
    with pytest.raises(TypeError):
        LeafCounter().visit(Reverse(leaf(1)))
def test_lex_prod_builds_a_node():
    assert lex_prod(leaf(2), OrdLeaf(OMEGA)) == LexProd(leaf(2), OrdLeaf(OMEGA))

"""
Text syntax of order terms, ordinals and eventually periodic sequences.

Order-term grammar (whitespace insensitive, '*' is the lexicographic product):

    term    := sum
    sum     := prod ('+' prod)*
    prod    := factor ('*' factor)*
    factor  := 'rev(' term ')' | 'pow(' term ',' nat ')' | 'L(' int ')'
             | 'I_even' | 'I_odd' | 'I_mid' | 'w^w' | 'w^' nat | 'w^(' term ')' | 'w'
             | nat | '(' term ')' | atom | rj4-literal | zsum-literal

Ordinal syntax (parse_ordinal, str(CnfOrdinal)) reads '*' as the ordinal product,
so 'w^3*2 + 1' there is the term '2*w^3 + 1' here.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from classes.affine import AffineMap, EvAffineSeq
from classes.block_sum import AffineBlockSum, IVariant, PeriodicBlockSum, make_I
from classes.exceptions import ExpressionSyntaxError, UnknownBlockName
from classes.normalizer import evaluate_ordinal, normalize
from classes.order_term import (
    KNOWN_ATOMS, FinPow, FinSum, LexProd, OrdLeaf, Reverse, Rj4Ref, TermVisitor, ZSumRef, lex_prod, make_atom,
)
from classes.ordinal import OMEGA, ONE, natural, omega_power, ord_add, ord_mul
from classes.scattered import Rj4Order, make_L
from classes.sequences import EvPeriodicSeq

TOKEN_SPEC = [
    ('LITERAL', r'(?:rj4|zsum|seq)\{[^{}]*\}'),
    ('NUMBER', r'\d+'),
    ('NAME', r'[A-Za-z_][A-Za-z0-9_]*'),
    ('OP', r'[-+*^(),]'),
    ('SKIP', r'\s+'),
    ('MISMATCH', r'.'),
]
TOKEN_PATTERN = re.compile('|'.join(f'(?P<{kind}>{pattern})' for kind, pattern in TOKEN_SPEC))

RJ4_PATTERN = re.compile(
    r'rj4\{\s*init\s*=\s*\[(?P<init>[^\]]*)\]\s*;\s*tail\s+j\s*>=\s*(?P<onset>\d+)\s*:'
    r'\s*l\s*=\s*(?P<l>[^,]+),\s*k\s*=\s*(?P<k>[^}]+)\}'
)
PAIR_PATTERN = re.compile(r'\(\s*(\d+)\s*,\s*(\d+)\s*\)')
ZSUM_AFFINE_PATTERN = re.compile(r'zsum\{\s*L\((?P<map>[^)]*)\)\s*\}')
ZSUM_TABLE_PATTERN = re.compile(r'zsum\{\s*\[(?P<entries>[^\]]*)\]\s*\}')
TABLE_ENTRY_PATTERN = re.compile(r'L\(\s*(-?\d+)\s*\)')
SEQ_PATTERN = re.compile(r'seq\{\s*pre\s*=\s*\[(?P<pre>[^\]]*)\]\s*;\s*per\s*=\s*\[(?P<per>[^\]]*)\]\s*\}')

BLOCK_NAMES = {
    'I_even': IVariant.EVEN,
    'I_odd': IVariant.ODD,
    'I_mid': IVariant.MID,
    'I': IVariant.MID,
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


class Tokenizer:
    def __init__(self, text):
        self.text = text

    def tokens(self):
        result = []
        for match in TOKEN_PATTERN.finditer(self.text):
            kind = match.lastgroup
            if kind == 'SKIP':
                continue
            if kind == 'MISMATCH':
                raise ExpressionSyntaxError(self.text, match.start(), 'a term')
            result.append(Token(kind, match.group(), match.start()))
        result.append(Token('END', '', len(self.text)))
        return result


class _Parser:
    """
    Token cursor shared by the term and ordinal parsers
    """
    def __init__(self, text):
        self.text = text
        self.tokens = Tokenizer(text).tokens()
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1
        return token

    def at(self, text):
        return self.current.text == text and self.current.kind in ('OP', 'NAME')

    def expect(self, text):
        if not self.at(text):
            raise ExpressionSyntaxError(self.text, self.current.position, f"'{text}'")
        return self.advance()

    def expect_number(self):
        if self.current.kind != 'NUMBER':
            raise ExpressionSyntaxError(self.text, self.current.position, 'a natural number')
        return int(self.advance().text)

    def expect_integer(self):
        if self.at('-'):
            self.advance()
            return -self.expect_number()
        return self.expect_number()

    def finish(self, result):
        if self.current.kind != 'END':
            raise ExpressionSyntaxError(self.text, self.current.position, 'end of input')
        return result


class TermParser(_Parser):
    def parse(self):
        return self.finish(self.sum())

    def sum(self):
        parts = [self.product()]
        while self.at('+'):
            self.advance()
            parts.append(self.product())
        return parts[0] if len(parts) == 1 else FinSum(tuple(parts))

    def product(self):
        left = self.factor()
        while self.at('*'):
            self.advance()
            left = lex_prod(left, self.factor())
        return left

    def factor(self):
        token = self.current
        if token.kind == 'NUMBER':
            return OrdLeaf(natural(int(self.advance().text)))
        if token.kind == 'LITERAL':
            self.advance()
            return self.literal(token)
        if self.at('('):
            self.advance()
            inner = self.sum()
            self.expect(')')
            return inner
        if token.kind != 'NAME':
            raise ExpressionSyntaxError(self.text, token.position, 'a factor')

        name = self.advance().text
        if name == 'w':
            return OrdLeaf(self.omega_power())
        if name == 'rev':
            self.expect('(')
            inner = self.sum()
            self.expect(')')
            return Reverse(inner)
        if name == 'pow':
            self.expect('(')
            base = self.sum()
            self.expect(',')
            position = self.current.position
            exponent = self.expect_number()
            if exponent < 1:
                raise ExpressionSyntaxError(self.text, position, 'a positive exponent')
            self.expect(')')
            return FinPow(base, exponent)
        if name == 'L':
            self.expect('(')
            index = self.expect_integer()
            self.expect(')')
            return Rj4Ref(make_L(index))
        if name in BLOCK_NAMES:
            return ZSumRef(make_I(BLOCK_NAMES[name]))
        if name in KNOWN_ATOMS:
            return make_atom(name)
        raise UnknownBlockName(name, token.position)

    def omega_power(self):
        if not self.at('^'):
            return OMEGA
        self.advance()
        if self.current.kind == 'NUMBER':
            return omega_power(int(self.advance().text))
        if self.at('w'):
            self.advance()
            return omega_power(OMEGA)
        if self.at('('):
            position = self.advance().position
            exponent = evaluate_ordinal(normalize(self.sum()))
            self.expect(')')
            if exponent is None:
                raise ExpressionSyntaxError(self.text, position, 'an ordinal exponent')
            return omega_power(exponent)
        raise ExpressionSyntaxError(self.text, self.current.position, "an exponent after 'w^'")

    def literal(self, token):
        if token.text.startswith('rj4'):
            return Rj4Ref(parse_rj4(token.text))
        if token.text.startswith('zsum'):
            return ZSumRef(parse_zsum(token.text))
        raise ExpressionSyntaxError(self.text, token.position, 'an order term, not a sequence')


class OrdinalParser(_Parser):
    """
    Ordinal syntax: sums of products of nat, w, w^nat, w^w and w^(ordinal)
    """
    def parse(self):
        return self.finish(self.sum())

    def sum(self):
        result = self.product()
        while self.at('+'):
            self.advance()
            result = ord_add(result, self.product())
        return result

    def product(self):
        result = self.factor()
        while self.at('*'):
            self.advance()
            result = ord_mul(result, self.factor())
        return result

    def factor(self):
        if self.current.kind == 'NUMBER':
            return natural(int(self.advance().text))
        if self.at('('):
            self.advance()
            inner = self.sum()
            self.expect(')')
            return inner
        self.expect('w')
        if not self.at('^'):
            return OMEGA
        self.advance()
        if self.current.kind == 'NUMBER':
            return omega_power(int(self.advance().text))
        if self.at('w'):
            self.advance()
            return omega_power(OMEGA)
        self.expect('(')
        exponent = self.sum()
        self.expect(')')
        return omega_power(exponent)


def parse(text):
    return TermParser(text).parse()


def parse_ordinal(text):
    return OrdinalParser(text).parse()


def parse_affine(text, variable='j'):
    """
    Affine map from text such as '2*j-1', 'j', 'j+3' or '5'
    """
    compact = text.replace(' ', '')
    match = re.fullmatch(rf'(?:(?P<slope>-?\d+)\*)?(?P<var>{variable})(?P<offset>[+-]\d+)?|(?P<constant>-?\d+)', compact)
    if match is None:
        raise ExpressionSyntaxError(text, 0, f'an affine expression in {variable}')
    if match.group('constant') is not None:
        return AffineMap(0, int(match.group('constant')))
    return AffineMap(int(match.group('slope') or 1), int(match.group('offset') or 0))


def parse_rj4(text):
    """
    rj4{init=[(l,k),...]; tail j>=J: l=a*j+b, k=c*j+d}
    :raise InvalidSchema: if the schema breaks positivity or monotonicity
    """
    match = RJ4_PATTERN.fullmatch(text.strip())
    if match is None:
        raise ExpressionSyntaxError(text, 0, 'rj4{init=[...]; tail j>=J: l=..., k=...}')
    initial = tuple((int(l), int(k)) for l, k in PAIR_PATTERN.findall(match.group('init')))
    return Rj4Order(EvAffineSeq(initial, int(match.group('onset')),
                                parse_affine(match.group('l')), parse_affine(match.group('k'))))


def parse_zsum(text):
    text = text.strip()
    match = ZSUM_AFFINE_PATTERN.fullmatch(text)
    if match is not None:
        block_map = parse_affine(match.group('map'), variable='i')
        return AffineBlockSum(block_map.slope, block_map.offset)
    match = ZSUM_TABLE_PATTERN.fullmatch(text)
    if match is None:
        raise ExpressionSyntaxError(text, 0, 'zsum{L(p*i+q)} or zsum{[L(a), ...]}')
    entries = TABLE_ENTRY_PATTERN.findall(match.group('entries'))
    if not entries:
        raise ExpressionSyntaxError(text, 0, 'a nonempty block table')
    return PeriodicBlockSum(tuple(make_L(int(entry)) for entry in entries))


def _integers(text, source):
    try:
        return tuple(int(item) for item in text.replace(' ', '').split(',') if item)
    except ValueError:
        raise ExpressionSyntaxError(source, 0, 'comma-separated integers') from None


def parse_sequence(text):
    """
    seq{pre=[..]; per=[..]}, or a bare comma list read as a purely periodic sequence
    :raise ZeroSymbol: if a symbol is 0
    """
    match = SEQ_PATTERN.fullmatch(text.strip())
    if match is not None:
        preperiod, period = _integers(match.group('pre'), text), _integers(match.group('per'), text)
    else:
        preperiod, period = (), _integers(text.strip().strip('[]'), text)
    if not period:
        raise ExpressionSyntaxError(text, 0, 'a nonempty period')
    return EvPeriodicSeq(preperiod, period)


def l_index_of(schema):
    """
    i when schema is exactly make_L(i), else None
    """
    seq = schema.seq
    if seq.initial or seq.tail_l.slope != 1 or seq.tail_k.slope != 1:
        return None
    if seq.tail_l.offset == 0:
        index = seq.tail_k.offset
    elif seq.tail_k.offset == 0:
        index = -seq.tail_l.offset
    else:
        return None
    return index if make_L(index) == schema else None


_VARIANT_NAMES = {make_I(variant): name for name, variant in BLOCK_NAMES.items() if name != 'I'}


def _render_ordinal(value):
    if value.is_zero:
        return '0'
    return ' + '.join(_render_ordinal_term(exponent, coefficient) for exponent, coefficient in value.terms)


def _render_ordinal_term(exponent, coefficient):
    if exponent.is_zero:
        return str(coefficient)
    if exponent == ONE:
        power = 'w'
    elif exponent.is_finite:
        power = f'w^{exponent.finite_value}'
    elif exponent == OMEGA:
        power = 'w^w'
    else:
        power = f'w^({_render_ordinal(exponent)})'
    return power if coefficient == 1 else f'{coefficient}*{power}'


def _is_compound_leaf(term):
    if not isinstance(term, OrdLeaf):
        return False
    terms = term.value.terms
    return len(terms) > 1 or (len(terms) == 1 and terms[0][1] > 1 and not terms[0][0].is_zero)


class TermRenderer(TermVisitor):
    """
    Deterministic text of a term in the order-term grammar
    """
    def visit_OrdLeaf(self, term):
        return _render_ordinal(term.value)

    def visit_Atom(self, term):
        return term.name

    def visit_Reverse(self, term):
        return f'rev({self.visit(term.inner)})'

    def visit_FinSum(self, term):
        return ' + '.join(self.wrap(part, isinstance(part, FinSum)) for part in term.parts)

    def visit_LexProd(self, term):
        left = self.wrap(term.left, isinstance(term.left, FinSum) or _is_compound_leaf(term.left))
        right = self.wrap(term.right, isinstance(term.right, (FinSum, LexProd)) or _is_compound_leaf(term.right))
        return f'{left}*{right}'

    def visit_FinPow(self, term):
        return f'pow({self.visit(term.base)}, {term.exponent})'

    def visit_Rj4Ref(self, term):
        index = l_index_of(term.schema)
        return f'L({index})' if index is not None else str(term.schema)

    def visit_ZSumRef(self, term):
        schema = term.schema
        base = schema.with_lift(0)
        if base in _VARIANT_NAMES:
            text = _VARIANT_NAMES[base]
        elif isinstance(base, PeriodicBlockSum):
            text = 'zsum{[' + ', '.join(self.visit_Rj4Ref(Rj4Ref(block)) for block in base.table) + ']}'
        else:
            text = str(base)
        if schema.lift == 0:
            return text
        power = 'w' if schema.lift == 1 else f'w^{schema.lift}'
        return f'({text}*{power})'

    def wrap(self, term, needed):
        text = self.visit(term)
        return f'({text})' if needed else text


def render(term):
    return TermRenderer().visit(term)

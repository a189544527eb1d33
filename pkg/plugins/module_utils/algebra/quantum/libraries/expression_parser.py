# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Recursive descent parser for the expression grammar shared by the
command line and the Ansible modules"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import re
from collections import namedtuple
from fractions import Fraction

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum \
    import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.kernel \
    import LaurentScalar, NCPoly, ONE, q_power, render_word, word_sort_key, join_signed, render_term
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.quantum_spaces \
    import HopfH, render_t_power

LOG = utils.get_logger('expression_parser')

TOKEN_PATTERN = re.compile(
    r'(?P<space>\s+)|(?P<number>\d+)|(?P<generator>zs\d+|z\d+)|(?P<q>q)|(?P<t>t)'
    r'|(?P<op>[-+*^/@()])')

Token = namedtuple('Token', ['kind', 'text', 'position'])

# longest power expanded by repeated multiplication
MAX_EXPANDED_POWER = 64


def tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if not match:
            raise utils.ExpressionParseError(f"Unexpected character {text[position]!r}", position)
        if match.lastgroup != 'space':
            tokens.append(Token(match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


def _leg_sort_key(leg):
    word, t_exponent = leg
    return (word_sort_key(word), t_exponent)


def render_leg(leg):
    word, t_exponent = leg
    if t_exponent == 0:
        return render_word(word)
    if not word:
        return render_t_power(t_exponent)
    return f"{render_word(word)}*{render_t_power(t_exponent)}"


class TensorExpr:

    """Parsed value: a linear combination of simple tensors with `arity` legs

    Each leg of a key is a pair (word, t-exponent); scalars are collected in
    the coefficient. A leg carrying t must carry no sphere generators.
    """

    def __init__(self, arity, terms=None):
        self.arity = arity
        cleaned = {}
        for key, coefficient in (terms or {}).items():
            cleaned[key] = cleaned.get(key, LaurentScalar()) + coefficient
        self.terms = {k: c for k, c in cleaned.items() if c}

    @classmethod
    def atom(cls, word=(), t_exponent=0, coefficient=ONE):
        return cls(1, {((tuple(word), t_exponent),): coefficient})

    def items(self):
        return self.terms.items()

    def add(self, other, sign=1):
        terms = dict(self.terms)
        for key, coefficient in other.terms.items():
            terms[key] = terms.get(key, LaurentScalar()) + (coefficient if sign > 0 else -coefficient)
        return TensorExpr(self.arity, terms)

    def negate(self):
        return TensorExpr(self.arity, {k: -c for k, c in self.terms.items()})

    def multiply(self, other):
        terms = {}
        for (left,), c1 in self.terms.items():
            for (right,), c2 in other.terms.items():
                key = ((left[0] + right[0], left[1] + right[1]),)
                terms[key] = terms.get(key, LaurentScalar()) + c1 * c2
        return TensorExpr(1, terms)

    def tensor(self, other):
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, LaurentScalar()) + c1 * c2
        return TensorExpr(self.arity + other.arity, terms)

    def invert_monomial(self):
        if len(self.terms) != 1:
            return None
        ((leg,), coefficient), = self.terms.items()
        if leg[0] or not coefficient.is_unit():
            return None
        return TensorExpr(1, {(((), -leg[1]),): coefficient.inverse()})

    def max_length(self):
        return max((len(leg[0]) for key in self.terms for leg in key), default=0)

    def leg_kind(self, index):
        """'H' when the leg carries t, otherwise 'A'"""
        if any(key[index][1] != 0 for key in self.terms):
            return 'H'
        return 'A'

    def is_mixed_leg(self, index):
        return any(key[index][1] != 0 and key[index][0] for key in self.terms)

    def leg_kinds(self):
        return tuple(self.leg_kind(index) for index in range(self.arity))

    def to_ncpoly(self):
        return NCPoly({key[0][0]: c for key, c in self.terms.items()})

    def to_hopf(self):
        return HopfH({key[0][1]: c for key, c in self.terms.items()})

    def evaluate(self, q0):
        """Specialise every coefficient at q = q0"""
        return TensorExpr(self.arity, {key: LaurentScalar.constant(c.evaluate(q0))
                                       for key, c in self.terms.items()})

    def sorted_items(self):
        return sorted(self.terms.items(),
                      key=lambda item: tuple(_leg_sort_key(leg) for leg in item[0]),
                      reverse=True)

    def render(self):
        if not self.terms:
            return "0"
        return join_signed([render_term(c, " @ ".join(render_leg(leg) for leg in key))
                             for key, c in self.sorted_items()])

    def __eq__(self, other):
        if not isinstance(other, TensorExpr):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        return f"TensorExpr({self.render()})"


class ExpressionParser:

    """
    expr   := term (("+"|"-") term)*   with an optional leading "-"
    term   := product ("@" product)*
    product:= factor ("*" factor)*
    factor := atom ("^" ["-"] integer)?
    atom   := "q" | rational | "z"index | "zs"index | "t" | "(" expr ")"
    """

    def __init__(self, text, n=None, degree_cap=utils.DEFAULT_DEGREE_CAP):
        self.text = text
        self.n = n
        self.degree_cap = degree_cap
        self.tokens = tokenize(text)
        self.index = 0
        self.t_position = None

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, text):
        token = self.peek()
        if token.kind == 'op' and token.text == text:
            self.index += 1
            return token
        return None

    def expect(self, kind, text=None):
        token = self.peek()
        if token.kind != kind or (text is not None and token.text != text):
            wanted = text or kind
            found = token.text or 'end of input'
            raise utils.ExpressionParseError(f"Expected {wanted} but found {found!r}", token.position)
        return self.advance()

    def parse(self):
        if self.peek().kind == 'end':
            raise utils.ExpressionParseError("Empty expression", 0)
        value = self.parse_sum()
        self.expect('end')
        return value

    def parse_sum(self):
        negate = self.accept('-') is not None
        value = self.parse_tensor_term()
        if negate:
            value = value.negate()
        while self.peek().kind == 'op' and self.peek().text in '+-':
            operator = self.advance()
            rhs = self.parse_tensor_term()
            if rhs.arity != value.arity:
                raise utils.ExpressionParseError(
                    f"Cannot add tensors with {value.arity} and {rhs.arity} legs", operator.position)
            value = value.add(rhs, 1 if operator.text == '+' else -1)
        return value

    def parse_tensor_term(self):
        value = self.parse_product()
        while self.accept('@'):
            value = value.tensor(self.parse_product())
        return value

    def parse_product(self):
        start = self.peek().position
        value = self.parse_factor()
        while self.accept('*'):
            rhs = self.parse_factor()
            if value.arity != 1 or rhs.arity != 1:
                raise utils.ExpressionParseError("Tensors cannot be multiplied", start)
            value = value.multiply(rhs)
        return value

    def parse_factor(self):
        start = self.peek().position
        base = self.parse_atom()
        if not self.accept('^'):
            return base
        negative = self.accept('-') is not None
        exponent = int(self.expect('number').text)
        if base.arity != 1:
            raise utils.ExpressionParseError("Tensors cannot be raised to a power", start)
        if negative:
            base = base.invert_monomial()
            if base is None:
                raise utils.ExpressionParseError(
                    "Negative powers are only defined for monomials in q and t", start)
        return self.power(base, exponent, start)

    def power(self, base, exponent, position):
        """base^exponent; monomials with coefficient +-q^k are raised in one step"""
        if not base.terms:
            return TensorExpr.atom() if exponent == 0 else base
        degree = base.max_length() * exponent
        if degree > self.degree_cap:
            error_msg = f"Power of degree {degree} exceeds the degree cap {self.degree_cap}"
            LOG.error(error_msg)
            raise utils.PowerTooLarge(error_msg, position)
        if len(base.terms) == 1:
            ((leg,), coefficient), = base.terms.items()
            if coefficient.is_unit() and abs(coefficient.unit_parts()[0]) == 1:
                word, t_exponent = leg
                return TensorExpr(1, {((word * exponent, t_exponent * exponent),): coefficient ** exponent})
        if exponent > MAX_EXPANDED_POWER:
            error_msg = f"Exponent {exponent} of a non-monomial factor exceeds {MAX_EXPANDED_POWER}"
            LOG.error(error_msg)
            raise utils.PowerTooLarge(error_msg, position)
        result = TensorExpr.atom()
        for _ in range(exponent):
            result = result.multiply(base)
        return result

    def parse_atom(self):
        token = self.advance()
        if token.kind == 'number':
            value = Fraction(int(token.text))
            if self.accept('/'):
                denominator = self.expect('number')
                if int(denominator.text) == 0:
                    raise utils.ExpressionParseError("Zero denominator", denominator.position)
                value /= int(denominator.text)
            return TensorExpr.atom(coefficient=LaurentScalar.constant(value))
        if token.kind == 'generator':
            return TensorExpr.atom(word=(self.generator_code(token),))
        if token.kind == 'q':
            return TensorExpr.atom(coefficient=q_power(1))
        if token.kind == 't':
            if self.t_position is None:
                self.t_position = token.position
            return TensorExpr.atom(t_exponent=1)
        if token.kind == 'op' and token.text == '(':
            value = self.parse_sum()
            self.expect('op', ')')
            return value
        found = token.text or 'end of input'
        raise utils.ExpressionParseError(f"Unexpected {found!r}", token.position)

    def generator_code(self, token):
        star = token.text.startswith('zs')
        index = int(token.text[2:] if star else token.text[1:])
        if index < 1 or (self.n is not None and index > self.n):
            bound = f"1..{self.n}" if self.n is not None else "1 or more"
            raise utils.ExpressionParseError(
                f"Unknown generator {token.text}, index must be {bound}", token.position)
        return -index if star else index


def parse(text, n=None, degree_cap=utils.DEFAULT_DEGREE_CAP):
    """Parse text into an NCPoly, a HopfH or, when '@' occurs, a TensorExpr

    Powers whose expansion passes degree_cap are rejected before they are built.
    """
    parser = ExpressionParser(text, n, degree_cap)
    value = parser.parse()
    for index in range(value.arity):
        if value.is_mixed_leg(index):
            error_msg = "The Hopf generator t may only appear in a leg without z generators"
            LOG.error(error_msg)
            raise utils.ExpressionParseError(error_msg, parser.t_position or 0)
    if value.arity > 1:
        return value
    if value.leg_kind(0) == 'H':
        return value.to_hopf()
    return value.to_ncpoly()


def normalize_value(value, sphere):
    """Normal form of a parsed value; every sphere leg of a tensor is
    normalized on its own and the legs are expanded back into simple tensors"""
    if isinstance(value, NCPoly):
        return sphere.normalize(value)
    if isinstance(value, HopfH):
        return value
    terms = {}
    for key, coefficient in value.items():
        expanded = {(): coefficient}
        for word, t_exponent in key:
            if t_exponent:
                leg_forms = {word: ONE}
            else:
                leg_forms = dict(sphere.normalize(NCPoly.from_word(word)).items())
            expanded = {prefix + ((leg_word, t_exponent),): c * leg_c
                        for prefix, c in expanded.items()
                        for leg_word, leg_c in leg_forms.items()}
        for new_key, c in expanded.items():
            terms[new_key] = terms[new_key] + c if new_key in terms else c
    return TensorExpr(value.arity, terms)


def normalize_expression(text, sphere):
    """Parse text at the rank of sphere and return its normal form"""
    return normalize_value(parse(text, sphere.n, sphere.rewrite.degree_cap), sphere)


def evaluate_expression(text, sphere, q0):
    """Normal form of text specialised at q = q0

    The result is also recomputed in the algebra specialised at q0 and the two
    must agree; a mismatch means the scalar arithmetic is inconsistent.
    """
    q0 = utils.parse_nonzero_q(q0)
    value = parse(text, sphere.n, sphere.rewrite.degree_cap)
    symbolic = normalize_value(value, sphere).evaluate(q0)
    if sphere.q_value is None:
        specialised = type(sphere)(sphere.n, q_value=q0, degree_cap=sphere.rewrite.degree_cap)
        numeric = normalize_value(value, specialised).evaluate(q0)
        if numeric != symbolic:
            error_msg = (f"Spot evaluation of {text!r} at q = {utils.format_rational(q0)} "
                         f"disagrees: {symbolic.render()} vs {numeric.render()}")
            LOG.error(error_msg)
            raise utils.QuantumAlgebraError(error_msg)
    return symbolic

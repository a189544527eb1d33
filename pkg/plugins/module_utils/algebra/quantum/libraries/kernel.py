# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Exact scalars, noncommutative polynomials and the rewriting engine
deciding equality in the quantum sphere algebra"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import functools
import itertools
from collections import namedtuple
from fractions import Fraction

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum \
    import utils

LOG = utils.get_logger('kernel')

"""importing sympy field of fractions"""
try:
    from sympy import QQ
    from sympy.polys.fields import field
    Q_FIELD, Q_GEN = field("q", QQ)
except ImportError:
    Q_FIELD, Q_GEN = None, None


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {value!r}")


class LaurentScalar:

    """Laurent polynomial in q with rational coefficients, stored sparsely"""

    __slots__ = ('_coeffs', '_hash')

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for exponent, coefficient in dict(coeffs).items():
                coefficient = _as_fraction(coefficient)
                if coefficient:
                    cleaned[int(exponent)] = cleaned.get(int(exponent), 0) + coefficient
        self._coeffs = {k: c for k, c in cleaned.items() if c}
        self._hash = None

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LaurentScalar):
            return value
        return cls.constant(_as_fraction(value))

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def is_constant(self):
        return all(k == 0 for k in self._coeffs)

    def is_unit(self):
        """Units of the Laurent ring are the nonzero monomials c*q^k"""
        return len(self._coeffs) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self.render()} is not a constant")
        return self._coeffs.get(0, Fraction(0))

    def unit_parts(self):
        """Return (c, k) for a unit c*q^k"""
        if not self.is_unit():
            raise ValueError(f"{self.render()} is not a unit of the scalar ring")
        (exponent, coefficient), = self._coeffs.items()
        return coefficient, exponent

    def min_exponent(self):
        return min(self._coeffs) if self._coeffs else 0

    def max_exponent(self):
        return max(self._coeffs) if self._coeffs else 0

    def leading_coefficient(self):
        return self._coeffs[self.max_exponent()] if self._coeffs else Fraction(0)

    def shift(self, k):
        return LaurentScalar({e + k: c for e, c in self._coeffs.items()})

    def inverse(self):
        coefficient, exponent = self.unit_parts()
        return LaurentScalar({-exponent: 1 / coefficient})

    def _coerce_other(self, other):
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentScalar.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        result = dict(self._coeffs)
        for exponent, coefficient in other._coeffs.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return LaurentScalar(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        result = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentScalar(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = LaurentScalar.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def evaluate(self, q0):
        """Value at q = q0 as a Fraction"""
        q0 = _as_fraction(q0)
        if q0 == 0 and any(e < 0 for e in self._coeffs):
            raise utils.DomainError("Cannot evaluate a negative power of q at q = 0")
        return sum((c * q0 ** e for e, c in self._coeffs.items()), Fraction(0))

    def render(self):
        if not self._coeffs:
            return "0"
        pieces = []
        for exponent, coefficient in self.items():
            if exponent == 0:
                piece = utils.format_rational(coefficient)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                if coefficient == 1:
                    piece = power
                elif coefficient == -1:
                    piece = f"-{power}"
                else:
                    piece = f"{utils.format_rational(coefficient)}*{power}"
            pieces.append(piece)
        return join_signed(pieces)

    def __repr__(self):
        return f"LaurentScalar({self.render()})"

    def __str__(self):
        return self.render()


ZERO = LaurentScalar()
ONE = LaurentScalar.constant(1)


def q_power(k):
    return LaurentScalar.monomial(k)


def join_signed(pieces):
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith('-'):
            text += f" - {piece[1:]}"
        else:
            text += f" + {piece}"
    return text


def _from_sympy_poly(poly):
    return LaurentScalar({
        monom[0]: Fraction(int(coeff.numerator), int(coeff.denominator))
        for monom, coeff in poly.terms()
    })


def _to_field(scalar):
    element = Q_FIELD.zero
    for exponent, coefficient in scalar.items():
        element += Q_GEN ** exponent * QQ(coefficient.numerator, coefficient.denominator)
    return element


class RationalFn:

    """Element of the field of fractions Q(q)

    Backed by a sympy field element; num and den are exposed as Laurent
    polynomials with den monic and of lowest q-exponent 0.
    """

    __slots__ = ('_element', '_parts')

    def __init__(self, num, den=None):
        if Q_FIELD is None:
            raise utils.QuantumAlgebraError("sympy is required for rational functions")
        element = _to_field(LaurentScalar.coerce(num))
        if den is not None:
            den = LaurentScalar.coerce(den)
            if den.is_zero():
                raise ZeroDivisionError("Rational function with zero denominator")
            element = element / _to_field(den)
        self._element = element
        self._parts = None

    @classmethod
    def _wrap(cls, element):
        value = cls.__new__(cls)
        value._element = element
        value._parts = None
        return value

    def _normalized_parts(self):
        if self._parts is None:
            num = _from_sympy_poly(self._element.numer)
            den = _from_sympy_poly(self._element.denom)
            shift = -den.min_exponent()
            leading = den.shift(shift).leading_coefficient()
            scale = LaurentScalar.constant(1 / leading)
            self._parts = (num.shift(shift) * scale, den.shift(shift) * scale)
        return self._parts

    @property
    def num(self):
        return self._normalized_parts()[0]

    @property
    def den(self):
        return self._normalized_parts()[1]

    def _other(self, other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, (LaurentScalar, int, Fraction)):
            return RationalFn(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else RationalFn._wrap(self._element + other._element)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else RationalFn._wrap(self._element - other._element)

    def __neg__(self):
        return RationalFn._wrap(-self._element)

    def __mul__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else RationalFn._wrap(self._element * other._element)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero rational function")
        return RationalFn._wrap(self._element / other._element)

    def is_zero(self):
        return not self._element.numer

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def is_laurent(self):
        return self.den == ONE

    def to_laurent(self):
        if not self.is_laurent():
            raise ValueError(f"{self.render()} is not a Laurent polynomial")
        return self.num

    def evaluate(self, q0):
        denominator = self.den.evaluate(q0)
        if denominator == 0:
            raise utils.DomainError(f"Denominator of {self.render()} vanishes at q = {q0}")
        return self.num.evaluate(q0) / denominator

    def render(self):
        if self.is_laurent():
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __repr__(self):
        return f"RationalFn({self.render()})"


Z = 'z'
ZSTAR = 'zs'


class Letter(namedtuple('Letter', ['kind', 'index'])):

    """A generator z_i or z*_i; words store letters by signed code"""

    __slots__ = ()

    @property
    def code(self):
        return self.index if self.kind == Z else -self.index

    @classmethod
    def from_code(cls, code):
        return cls(Z, code) if code > 0 else cls(ZSTAR, -code)

    def render(self):
        return f"{self.kind}{self.index}"


def letter_weight(code):
    return 1 if code > 0 else -1


def word_weight(word):
    return sum(1 if code > 0 else -1 for code in word)


def letter_sort_key(code):
    return (0, code) if code > 0 else (1, code)


def word_sort_key(word):
    """Degree-lexicographic key with z_1 < ... < z_n < z*_n < ... < z*_1"""
    return (len(word), tuple(letter_sort_key(code) for code in word))


def star_word(word):
    return tuple(-code for code in reversed(word))


def render_word(word):
    if not word:
        return "1"
    return "*".join(Letter.from_code(code).render() for code in word)


def make_word(letters):
    """Build a word from Letter values or signed codes"""
    return tuple(letter.code if isinstance(letter, Letter) else int(letter) for letter in letters)


class SparseVector:

    """Finite linear combination of hashable keys with LaurentScalar coefficients"""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        accumulated = {}
        if terms:
            pairs = terms.items() if hasattr(terms, 'items') else terms
            for key, coefficient in pairs:
                coefficient = LaurentScalar.coerce(coefficient)
                if key in accumulated:
                    accumulated[key] = accumulated[key] + coefficient
                else:
                    accumulated[key] = coefficient
        self._terms = {k: c for k, c in accumulated.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        """Wrap an already cleaned dict without copying"""
        value = cls.__new__(cls)
        value._terms = terms
        value._hash = None
        return value

    @classmethod
    def zero(cls):
        return cls._raw({})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key):
        return self._terms.get(key, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def _combine(self, other, sign):
        if type(other) is not type(self):
            return NotImplemented
        result = dict(self._terms)
        for key, coefficient in other._terms.items():
            current = result.get(key)
            updated = coefficient if sign > 0 else -coefficient
            if current is not None:
                updated = current + updated
            if updated:
                result[key] = updated
            else:
                result.pop(key, None)
        return type(self)._raw(result)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self._terms.items()})

    def scale(self, scalar):
        scalar = LaurentScalar.coerce(scalar)
        if not scalar:
            return type(self)._raw({})
        result = {}
        for key, coefficient in self._terms.items():
            product = coefficient * scalar
            if product:
                result[key] = product
        return type(self)._raw(result)

    def map_keys(self, function):
        """Re-key the vector; colliding keys are summed"""
        return type(self)((function(key), c) for key, c in self._terms.items())

    def evaluate(self, q0):
        """Specialise every coefficient at q = q0"""
        q0 = _as_fraction(q0)
        if q0 == 0:
            raise utils.DomainError("Spot evaluation needs q0 != 0")
        return type(self)((key, LaurentScalar.constant(c.evaluate(q0)))
                          for key, c in self._terms.items())

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sort_key(self, key):
        return key

    def sorted_items(self, reverse=True):
        return sorted(self._terms.items(), key=lambda item: self.sort_key(item[0]), reverse=reverse)

    def render_key(self, key):
        return repr(key)

    def render(self):
        if not self._terms:
            return "0"
        return join_signed([render_term(c, self.render_key(key))
                             for key, c in self.sorted_items()])

    def __repr__(self):
        return f"{type(self).__name__}({self.render()})"

    def __str__(self):
        return self.render()


def render_term(coefficient, body):
    if body == "1":
        return coefficient.render() if coefficient.is_unit() else f"({coefficient.render()})"
    if coefficient == ONE:
        return body
    if coefficient == -ONE:
        return f"-{body}"
    if coefficient.is_unit():
        return f"{coefficient.render()}*{body}"
    return f"({coefficient.render()})*{body}"


class NCPoly(SparseVector):

    """Noncommutative polynomial in z_i, z*_i keyed by words"""

    __slots__ = ()

    @classmethod
    def from_word(cls, word, coefficient=ONE):
        return cls({tuple(word): coefficient})

    @classmethod
    def one(cls):
        return cls._raw({(): ONE})

    @classmethod
    def scalar(cls, value):
        return cls({(): value})

    def __mul__(self, other):
        """Concatenation product; the result is not normalized"""
        if isinstance(other, NCPoly):
            result = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    word = w1 + w2
                    product = c1 * c2
                    result[word] = result[word] + product if word in result else product
            return NCPoly(result)
        if isinstance(other, (LaurentScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def star(self):
        """Conjugate-linear anti-automorphism; q and rationals are real"""
        return NCPoly._raw({star_word(w): c for w, c in self._terms.items()})

    def weight_components(self):
        components = {}
        for word, coefficient in self._terms.items():
            components.setdefault(word_weight(word), {})[word] = coefficient
        return {k: NCPoly._raw(v) for k, v in components.items()}

    def weights(self):
        return sorted({word_weight(word) for word in self._terms})

    def is_homogeneous(self):
        return len(self.weights()) <= 1

    def max_length(self):
        return max((len(word) for word in self._terms), default=0)

    def max_index(self):
        return max((abs(code) for word in self._terms for code in word), default=0)

    def sort_key(self, key):
        return word_sort_key(key)

    def render_key(self, key):
        return render_word(key)


def _specialise(scalar, q_value):
    if q_value is None:
        return scalar
    return LaurentScalar.constant(scalar.evaluate(q_value))


class RewriteSystem:

    """Length-two rewrite rules of the quantum sphere for a fixed rank

    Letters are signed codes: z_i is i and z*_i is -i. With q_value set the
    rules are specialised at that rational value of q.

    Normal words are an ascending z-block followed by a descending z*-block
    without the adjacency z_n z*_n, so z_n and z*_n never both occur. The
    starred letters are ordered descending because with an ascending z*-block
    the overlap z*_1 z_n z*_n leaves z_n z*_1 z*_n irreducible and no finite
    set of length-two rules resolves it.

    Normal forms of single words are memoised for the lifetime of the system;
    the table is dropped once it holds memo_limit words.
    """

    def __init__(self, n, q_value=None, degree_cap=utils.DEFAULT_DEGREE_CAP, fuel=512,
                 memo_limit=200000):
        self.n = utils.validate_rank(n)
        self.q_value = None if q_value is None else _as_fraction(q_value)
        if self.q_value == 0:
            raise utils.DomainError("The rewrite system cannot be specialised at q = 0")
        self.degree_cap = degree_cap
        self.fuel = fuel
        self.memo_limit = memo_limit
        self.rules = tuple(self._build_rules())
        self._rule_map = {
            pattern: tuple(replacement.items()) for pattern, replacement in self.rules
        }
        self._memo = {}

    def q(self, k=1):
        """q^k in this system's scalar ring"""
        return _specialise(q_power(k), self.q_value)

    def scalar(self, value):
        return _specialise(LaurentScalar.coerce(value), self.q_value)

    def _build_rules(self):
        n = self.n
        one_minus_q2 = self.scalar(ONE - q_power(2))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                yield (j, i), NCPoly.from_word((i, j), self.q(-1))
                yield (-i, -j), NCPoly.from_word((-j, -i), self.q(-1))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    yield (-i, j), NCPoly.from_word((j, -i), self.q(1))
        for k in range(1, n + 1):
            terms = {(k, -k): ONE}
            for j in range(1, k):
                terms[(j, -j)] = one_minus_q2
            yield (-k, k), NCPoly(terms)
        terms = {(): ONE}
        for j in range(1, n):
            terms[(j, -j)] = -ONE
        yield (n, -n), NCPoly(terms)

    def patterns(self):
        return [pattern for pattern, _ in self.rules]

    def replacement(self, pattern):
        return self._rule_map.get(pattern)

    def first_redex(self, word):
        for position in range(len(word) - 1):
            if (word[position], word[position + 1]) in self._rule_map:
                return position
        return None

    def rewrite_at(self, word, position):
        """One rewrite step at position, as an unnormalized NCPoly"""
        replacement = self._rule_map[(word[position], word[position + 1])]
        prefix, suffix = word[:position], word[position + 2:]
        return NCPoly((prefix + rword + suffix, c) for rword, c in replacement)

    def _normal_form(self, word, depth):
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        if depth > self.fuel:
            error_msg = f"Rewriting fuel exhausted on word {render_word(word)}"
            LOG.error(error_msg)
            raise utils.RewritingFuelExhausted(error_msg)
        position = self.first_redex(word)
        if position is None:
            result = {word: ONE}
        else:
            prefix, suffix = word[:position], word[position + 2:]
            result = {}
            for rword, coefficient in self._rule_map[(word[position], word[position + 1])]:
                for nword, ncoeff in self._normal_form(prefix + rword + suffix, depth + 1).items():
                    product = coefficient * ncoeff
                    result[nword] = result[nword] + product if nword in result else product
            result = {w: c for w, c in result.items() if c}
        if len(self._memo) >= self.memo_limit:
            self._memo.clear()
        self._memo[word] = result
        return result

    def memo_size(self):
        return len(self._memo)

    def check_letters(self, p):
        for word in p.keys():
            for code in word:
                if code == 0 or abs(code) > self.n:
                    error_msg = (f"Generator index {abs(code)} is out of range 1..{self.n} "
                                 f"in {render_word(word)}")
                    LOG.error(error_msg)
                    raise utils.ConfigurationError(error_msg)
            if len(word) > self.degree_cap:
                error_msg = (f"Word {render_word(word)} of length {len(word)} exceeds "
                             f"the degree cap {self.degree_cap}")
                LOG.error(error_msg)
                raise utils.DegreeCapExceeded(error_msg)

    def normalize(self, p):
        """Unique normal form of p in the quotient algebra"""
        self.check_letters(p)
        result = {}
        for word, coefficient in p.items():
            coefficient = _specialise(coefficient, self.q_value)
            for nword, ncoeff in self._normal_form(word, 0).items():
                product = coefficient * ncoeff
                result[nword] = result[nword] + product if nword in result else product
        return NCPoly(result)

    def is_normal(self, word):
        return self.first_redex(word) is None


@functools.lru_cache(maxsize=32)
def rewrite_system(n, q_value=None):
    """Shared rewrite system per rank and specialisation; the 32 most recent are kept"""
    return RewriteSystem(n, q_value)


def normalize(p, rs):
    return rs.normalize(p)


class CriticalPair:

    def __init__(self, word, position, left, right):
        self.word = word
        self.position = position
        self.left = left
        self.right = right

    def to_dict(self):
        return dict(word=render_word(self.word), position=self.position,
                    left=self.left.render(), right=self.right.render())


class ConfluenceReport:

    def __init__(self, n, max_degree, words_checked, non_joinable):
        self.n = n
        self.max_degree = max_degree
        self.words_checked = words_checked
        self.non_joinable = list(non_joinable)

    @property
    def joinable(self):
        return not self.non_joinable


def _overlap_words(rs):
    patterns = rs.patterns()
    for (a, b), (b2, c) in itertools.product(patterns, patterns):
        if b == b2:
            yield (a, b, c)


def check_local_confluence(rs, max_deg):
    """Reduce both branches of every overlap ambiguity of the rule patterns

    Overlaps are also embedded in a left and a right context letter while the
    resulting word stays within max_deg.
    """
    if max_deg < 2:
        raise utils.ConfigurationError("max_deg must be at least 2")
    alphabet = [code for i in range(1, rs.n + 1) for code in (i, -i)]
    contexts = [((), ())]
    if max_deg >= 4:
        contexts += [((x,), ()) for x in alphabet] + [((), (x,)) for x in alphabet]
    if max_deg >= 5:
        contexts += [((x,), (y,)) for x in alphabet for y in alphabet]
    checked, failures = 0, []
    if max_deg >= 3:
        for overlap in _overlap_words(rs):
            for left, right in contexts:
                word = left + overlap + right
                position = len(left)
                first = rs.normalize(rs.rewrite_at(word, position))
                second = rs.normalize(rs.rewrite_at(word, position + 1))
                checked += 1
                if first != second:
                    failures.append(CriticalPair(word, position, first, second))
    LOG.info("Confluence check n=%s max_deg=%s: %s words, %s non-joinable",
             rs.n, max_deg, checked, len(failures))
    return ConfluenceReport(rs.n, max_deg, checked, failures)


def eval_at_q(p, q0):
    """Specialise the scalars of p at the rational q0"""
    q0 = utils.parse_rational(q0)
    if q0 == 0:
        error_msg = "Spot evaluation needs q0 != 0"
        LOG.error(error_msg)
        raise utils.DomainError(error_msg)
    return p.evaluate(q0)

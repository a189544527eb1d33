# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Unit Tests for scalars, polynomials and the rewriting engine"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.kernel \
    import (LaurentScalar, RationalFn, NCPoly, RewriteSystem, ONE, ZERO, q_power, rewrite_system,
            check_local_confluence, eval_at_q, word_sort_key, star_word, render_word, Letter)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.dictionaries(st.integers(min_value=-4, max_value=4), fractions, max_size=4).map(LaurentScalar)
nonzero_spots = st.sampled_from([Fraction(1, 2), Fraction(2, 3), Fraction(-3), Fraction(5, 7)])


def words(n, max_size=4):
    letters = st.sampled_from([code for i in range(1, n + 1) for code in (i, -i)])
    return st.lists(letters, max_size=max_size).map(tuple)


def polynomials(n):
    return st.dictionaries(words(n), scalars, max_size=3).map(NCPoly)


class TestLaurentScalar:

    @given(scalars, scalars, scalars)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO
        assert a * ONE == a

    @given(scalars, scalars, nonzero_spots)
    def test_evaluation_is_a_ring_map(self, a, b, q0):
        assert (a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0)
        assert (a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0)

    def test_units_and_inverse(self):
        unit = LaurentScalar.monomial(-3, Fraction(2, 5))
        assert unit.is_unit()
        assert unit * unit.inverse() == ONE
        assert q_power(2) ** -1 == q_power(-2)
        assert not (ONE - q_power(2)).is_unit()
        with pytest.raises(ValueError):
            (ONE + q_power(1)).inverse()

    def test_zero_coefficients_dropped(self):
        assert LaurentScalar({0: 1, 2: 0}) == ONE
        assert q_power(1) - q_power(1) == ZERO
        assert not ZERO

    @pytest.mark.parametrize("scalar, rendered", [
        (ONE - q_power(2), "1 - q^2"),
        (q_power(-1) + q_power(1), "q^-1 + q"),
        (LaurentScalar.monomial(3, Fraction(-2, 3)), "-2/3*q^3"),
        (ZERO, "0"),
    ])
    def test_render(self, scalar, rendered):
        assert scalar.render() == rendered

    def test_negative_power_at_zero_rejected(self):
        with pytest.raises(utils.DomainError):
            q_power(-1).evaluate(0)


class TestRationalFn:

    def test_normalized_parts(self):
        value = RationalFn(q_power(1) - q_power(3), q_power(2) - q_power(4))
        assert value.num == q_power(-1)
        assert value.den == ONE
        assert value.is_laurent()
        assert value.to_laurent() == q_power(-1)

    def test_proper_fraction(self):
        value = RationalFn(ONE, ONE + q_power(2))
        assert not value.is_laurent()
        assert value.den == ONE + q_power(2)
        assert value * RationalFn(ONE + q_power(2)) == RationalFn(1)
        assert value.evaluate(Fraction(1, 2)) == Fraction(4, 5)

    @given(scalars, scalars)
    def test_field_laws(self, a, b):
        x, y = RationalFn(a), RationalFn(b)
        assert x + y == y + x
        if b:
            assert (x / y) * y == x

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            RationalFn(ONE, ZERO)
        with pytest.raises(ZeroDivisionError):
            RationalFn(ONE) / RationalFn(0)

    def test_vanishing_denominator(self):
        with pytest.raises(utils.DomainError):
            RationalFn(ONE, ONE - q_power(1)).evaluate(1)


class TestWords:

    def test_letters(self):
        assert Letter.from_code(-2).render() == "zs2"
        assert Letter.from_code(3).code == 3
        assert render_word(()) == "1"
        assert render_word((1, -2)) == "z1*zs2"

    def test_order(self):
        assert word_sort_key((2,)) < word_sort_key((-1,))
        assert word_sort_key((-2,)) < word_sort_key((1, 1))

    @given(words(3))
    def test_star_word_involutive(self, word):
        assert star_word(star_word(word)) == word


class TestRewriteSystem:

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_rule_count(self, n):
        rs = RewriteSystem(n)
        # commutation pairs, mixed pairs, one rule per zs_k z_k, and z_n zs_n
        assert len(rs.rules) == n * (n - 1) + n * (n - 1) + n + 1

    def test_sphere_relations(self):
        rs = rewrite_system(2)
        assert rs.normalize(NCPoly.from_word((-2, 2))) == NCPoly({(1, -1): -q_power(2), (): ONE})
        assert rs.normalize(NCPoly({(1, -1): ONE, (2, -2): ONE})) == NCPoly.one()
        rs3 = rewrite_system(3)
        assert rs3.normalize(NCPoly.from_word((-2, 2))) == NCPoly({(2, -2): ONE, (1, -1): ONE - q_power(2)})

    @pytest.mark.parametrize("n", [2, 3])
    def test_derived_sphere_relation(self, n):
        rs = rewrite_system(n)
        relation = NCPoly({(-j, j): q_power(2 * (n - j)) for j in range(1, n + 1)}) - NCPoly.one()
        assert not rs.normalize(relation)

    @settings(max_examples=40, deadline=None)
    @given(polynomials(2), polynomials(2), polynomials(2))
    def test_ring_laws_on_normal_forms(self, a, b, c):
        rs = rewrite_system(2)
        assert rs.normalize(a * (b + c)) == rs.normalize(a * b + a * c)
        assert rs.normalize(rs.normalize(a)) == rs.normalize(a)
        assert all(rs.is_normal(word) for word in rs.normalize(a).keys())

    @settings(max_examples=30, deadline=None)
    @given(polynomials(2), nonzero_spots)
    def test_specialised_system_agrees(self, a, q0):
        formal = rewrite_system(2).normalize(a).evaluate(q0)
        numeric = RewriteSystem(2, q0).normalize(a).evaluate(q0)
        assert formal == numeric

    def test_degree_cap(self):
        rs = RewriteSystem(2, degree_cap=3)
        with pytest.raises(utils.DegreeCapExceeded):
            rs.normalize(NCPoly.from_word((1, 1, 1, 1)))

    def test_index_out_of_range(self):
        with pytest.raises(utils.ConfigurationError):
            rewrite_system(2).normalize(NCPoly.from_word((3,)))

    def test_fuel(self):
        rs = RewriteSystem(3, fuel=0)
        with pytest.raises(utils.RewritingFuelExhausted):
            rs.normalize(NCPoly.from_word((-3, 3)))

    def test_specialisation_at_zero_rejected(self):
        with pytest.raises(utils.DomainError):
            RewriteSystem(2, 0)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_local_confluence(self, n):
        report = check_local_confluence(rewrite_system(n), 5)
        assert report.joinable
        if n > 1:
            assert report.words_checked > 0

    def test_confluence_degree_guard(self):
        with pytest.raises(utils.ConfigurationError):
            check_local_confluence(rewrite_system(2), 1)

    def test_starred_letters_descend(self):
        rs = rewrite_system(2)
        assert rs.normalize(NCPoly.from_word((-1, -2))) == NCPoly({(-2, -1): q_power(-1)})
        assert rs.is_normal((1, 2, -2, -1)) is False
        assert rs.is_normal((1, 2, -1)) is True
        assert rs.is_normal((2, -2, -1)) is False

    @pytest.mark.parametrize("n", [2, 3])
    def test_sphere_relation_is_absorbed(self, n):
        rs = rewrite_system(n)
        radius = NCPoly({(j, -j): ONE for j in range(1, n + 1)})
        for code in (1, -1, n, -n):
            letter = NCPoly.from_word((code,))
            assert rs.normalize(letter * radius) == letter
            assert rs.normalize(radius * letter) == letter

    def test_reduction_paths_agree(self):
        rs = rewrite_system(2)
        alphabet = [1, 2, -2, -1]
        for length in range(2, 5):
            for word in itertools.product(alphabet, repeat=length):
                redexes = [position for position in range(length - 1)
                           if rs.replacement((word[position], word[position + 1])) is not None]
                forms = [rs.normalize(rs.rewrite_at(word, position)) for position in redexes]
                assert all(form == forms[0] for form in forms), (word, forms)

    def test_memo_is_bounded(self):
        bounded = RewriteSystem(2, memo_limit=4)
        shared = rewrite_system(2)
        for word in itertools.product([1, 2, -2, -1], repeat=3):
            p = NCPoly.from_word(word)
            assert bounded.normalize(p) == shared.normalize(p)
            assert bounded.memo_size() <= 4


class TestEvalAtQ:

    def test_eval(self):
        p = NCPoly({(1, -1): ONE - q_power(2), (): q_power(-1)})
        assert eval_at_q(p, "1/2") == NCPoly({(1, -1): LaurentScalar.constant(Fraction(3, 4)),
                                              (): LaurentScalar.constant(2)})

    def test_eval_at_zero(self):
        with pytest.raises(utils.DomainError):
            eval_at_q(NCPoly.one(), "0")

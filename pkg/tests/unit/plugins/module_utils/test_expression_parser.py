# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Unit Tests for the expression grammar"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

from fractions import Fraction

import pytest

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.kernel \
    import NCPoly, LaurentScalar, ONE, q_power
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.quantum_spaces \
    import HopfH, SphereAlgebra
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.expression_parser \
    import parse, tokenize, TensorExpr, normalize_expression, evaluate_expression


class TestTokenize:

    def test_tokens_and_positions(self):
        tokens = tokenize("zs12*q^-2 @ t")
        assert [(t.kind, t.text, t.position) for t in tokens] == [
            ('generator', 'zs12', 0), ('op', '*', 4), ('q', 'q', 5), ('op', '^', 6),
            ('op', '-', 7), ('number', '2', 8), ('op', '@', 10), ('t', 't', 12), ('end', '', 13)]

    def test_unexpected_character(self):
        with pytest.raises(utils.ExpressionParseError) as error:
            tokenize("z1 & z2")
        assert error.value.position == 3


class TestParse:

    def test_polynomial(self):
        value = parse("2*q*z1*zs2 - 1/3", 2)
        assert value == NCPoly({(1, -2): LaurentScalar.monomial(1, 2), (): LaurentScalar.constant(Fraction(-1, 3))})

    def test_precedence(self):
        assert parse("(z1 + z2)*z1", 2) == NCPoly({(1, 1): ONE, (2, 1): ONE})
        assert parse("-z1^2", 2) == NCPoly({(1, 1): -ONE})

    def test_hopf_element(self):
        assert parse("t^2 + q*t^-1") == HopfH({2: ONE, -1: q_power(1)})

    def test_tensor_binds_looser_than_product(self):
        value = parse("z1*zs1 @ 1 + z2 @ zs2", 2)
        assert isinstance(value, TensorExpr)
        assert value.arity == 2
        assert len(value.terms) == 2
        assert value.leg_kinds() == ('A', 'A')

    def test_mixed_tensor(self):
        value = parse("z1 @ t^-1", 2)
        assert value.leg_kinds() == ('A', 'H')
        assert value.render() == "z1 @ t^-1"

    @pytest.mark.parametrize("text, position", [
        ("", 0),
        ("z1 +", 4),
        ("z1 + * z2", 5),
        ("(q + 1", 6),
        ("z3", 0),
        ("z1*t", 3),
        ("z1 @ z2 + z1", 8),
        ("(z1 @ z2)*z1", 0),
        ("1/0", 2),
        ("z1^-1", 0),
    ])
    def test_parse_errors_carry_position(self, text, position):
        with pytest.raises(utils.ExpressionParseError) as error:
            parse(text, 2)
        assert error.value.position == position

    def test_index_unbounded_without_rank(self):
        assert parse("z7") == NCPoly.from_word((7,))


class TestPowers:

    def test_large_q_and_t_powers_are_direct(self):
        assert parse("q^99999999", 2) == NCPoly.scalar(q_power(99999999))
        assert parse("t^1000000") == HopfH({1000000: ONE})
        assert parse("(-q)^3", 2) == NCPoly.scalar(-q_power(3))

    def test_expanded_powers(self):
        assert parse("2^3", 2) == NCPoly.scalar(8)
        assert parse("(z1 + z2)^2", 2) == NCPoly({(1, 1): ONE, (1, 2): ONE, (2, 1): ONE, (2, 2): ONE})
        assert parse("z1^0", 2) == NCPoly.one()
        assert parse("(q - q)^70", 2) == NCPoly()

    @pytest.mark.parametrize("text", ["z1^20000", "(z1*zs2)^7", "(z1 + 1)^13"])
    def test_word_power_above_degree_cap(self, text):
        with pytest.raises(utils.DegreeCapExceeded) as error:
            parse(text, 2)
        assert isinstance(error.value, utils.ExpressionParseError)
        assert error.value.position == 0

    def test_degree_cap_is_configurable(self):
        assert parse("z1^4", 2, degree_cap=4) == NCPoly.from_word((1, 1, 1, 1))
        with pytest.raises(utils.PowerTooLarge):
            parse("z1^5", 2, degree_cap=4)

    def test_scalar_power_bound(self):
        with pytest.raises(utils.PowerTooLarge) as error:
            parse("z1 + (1 + q)^100", 2)
        assert error.value.position == 5


class TestNormalizeAndEvaluate:

    @pytest.mark.parametrize("n, text, rendered", [
        (2, "zs2*z2", "-q^2*z1*zs1 + 1"),
        (3, "zs2*z2", "z2*zs2 + (1 - q^2)*z1*zs1"),
        (2, "z1*zs1 + z2*zs2", "1"),
        (2, "0", "0"),
        (2, "zs1*z1 @ zs2*z2", "-q^2*z1*zs1 @ z1*zs1 + z1*zs1 @ 1"),
    ])
    def test_normalize_expression(self, n, text, rendered):
        assert normalize_expression(text, SphereAlgebra(n)).render() == rendered

    @pytest.mark.parametrize("text, q0, rendered", [
        ("q^2*zs1*z1 + zs2*z2 - 1", "1/2", "0"),
        ("q - q", "2/3", "0"),
        ("1 - q^2", "1/2", "3/4"),
        ("t^3*q", "-2", "-2*t^3"),
    ])
    def test_evaluate_expression(self, text, q0, rendered):
        assert evaluate_expression(text, SphereAlgebra(2), q0).render() == rendered

    def test_evaluate_at_zero(self):
        with pytest.raises(utils.DomainError):
            evaluate_expression("q", SphereAlgebra(2), "0")

    def test_evaluate_in_specialised_algebra(self):
        sphere = SphereAlgebra(2, q_value=Fraction(1, 2))
        assert evaluate_expression("zs2*z2", sphere, "1/2").render() == "-1/4*z1*zs1 + 1"

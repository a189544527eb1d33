# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Unit Tests for the Hopf-Galois extension of the quantum projective space"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import pytest

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.kernel \
    import NCPoly, ONE, q_power
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.quantum_spaces \
    import SphereAlgebra, TensorAH
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.expression_parser \
    import parse
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.galois \
    import (TensorAA, BalancedAB, tensor, simple_tensor, tensor_from_expression, chi, chi_prime, varphi,
            chi_inv, translation, translation_tensor, coinvariance_membership, coinvariance_corpus,
            verify_translation_properties, verify_coinvariants)


@pytest.fixture(scope='module')
def sphere():
    return SphereAlgebra(2)


class TestTensors:

    def test_tensor_normalizes_legs(self, sphere):
        x = tensor(sphere, NCPoly.from_word((2, 1)), NCPoly.from_word((-1, -2)))
        assert x == TensorAA({((1, 2), (-2, -1)): q_power(-2)})
        assert x.is_weight_balanced()
        assert x.flip() == TensorAA({((-2, -1), (1, 2)): q_power(-2)})

    def test_from_expression(self, sphere):
        expr = parse("z2*z1 @ zs1", 2)
        assert tensor_from_expression(expr, sphere) == simple_tensor(sphere, (1, 2), (-1,), q_power(-1))
        with pytest.raises(utils.MembershipError):
            tensor_from_expression(parse("z1 @ t", 2), sphere)


class TestCanonicalMap:

    def test_chi_on_simple_tensor(self, sphere):
        x = simple_tensor(sphere, (1,), (-1,))
        assert chi(x, sphere) == TensorAH({((1, -1), -1): ONE})
        assert chi_prime(x, sphere) == TensorAH({((1, -1), 1): ONE})
        assert varphi(chi_prime(x, sphere)) == chi(x, sphere)

    @pytest.mark.parametrize("k", [-3, -2, -1, 0, 1, 2, 3])
    def test_translation_inverts_chi(self, sphere, k):
        assert translation(k, sphere).chi_form == TensorAH({((), k): ONE})

    def test_translation_of_t(self, sphere):
        assert translation_tensor(1, sphere) == TensorAA({((-1,), (1,)): q_power(2), ((-2,), (2,)): ONE})
        assert translation_tensor(-1, sphere) == TensorAA({((1,), (-1,)): ONE, ((2,), (-2,)): ONE})
        assert translation(0, 2) == BalancedAB(TensorAA.unit(), SphereAlgebra(2))

    def test_translation_cache_is_bounded(self, sphere):
        small = SphereAlgebra(2, cache_limit=2)
        for k in (3, -2, 2):
            assert translation_tensor(k, small) == translation_tensor(k, sphere)
            assert len(small.cache) <= 2
        assert ('translation', 2) in small.cache

    def test_chi_inv(self, sphere):
        x = TensorAH({((1,), 2): ONE, ((), -1): q_power(3)})
        assert chi_inv(x, sphere).chi_form == x

    def test_balanced_equality_moves_base_elements(self, sphere):
        b = sphere.proj_p(1, 2)
        left = BalancedAB(tensor(sphere, NCPoly.from_word((1,)) * b, NCPoly.from_word((-2,))), sphere)
        right = BalancedAB(tensor(sphere, NCPoly.from_word((1,)), b * NCPoly.from_word((-2,))), sphere)
        assert left == right
        assert hash(left) == hash(right)
        assert left != BalancedAB(TensorAA.unit(), sphere)


class TestCoinvariants:

    def test_membership_flags(self, sphere):
        assert coinvariance_membership(simple_tensor(sphere, (1,), (-2,)), sphere) == (True, True, True)
        assert coinvariance_membership(simple_tensor(sphere, (1,), (2,)), sphere) == (False, False, False)

    def test_corpus_sizes(self, sphere):
        balanced, unbalanced = coinvariance_corpus(sphere)
        assert len(balanced) >= 50 and len(unbalanced) >= 50
        assert all(x.is_weight_balanced() for x in balanced)
        assert not any(x.is_weight_balanced() for x in unbalanced)


class TestSuites:

    @pytest.mark.parametrize("n", [2, 3])
    def test_translation_suite(self, n):
        report = verify_translation_properties(n)
        assert report.passed, report.failures()

    @pytest.mark.parametrize("n", [2, 3])
    def test_coinvariants_suite(self, n):
        report = verify_coinvariants(n)
        assert report.passed, report.failures()
        assert len(report.checks) >= 101

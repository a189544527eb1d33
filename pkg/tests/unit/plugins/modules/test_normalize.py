# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Unit Tests for the normalize module"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import pytest
# pylint: disable=unused-import
from ansible_collections.qgeometry.algebroid.tests.unit.plugins.module_utils.libraries import initial_mock
from ansible_collections.qgeometry.algebroid.tests.unit.plugins.module_utils.mock_normalize_api import MockNormalizeApi
from ansible_collections.qgeometry.algebroid.plugins.modules.normalize import \
    NormalizeHandler
from ansible_collections.qgeometry.algebroid.tests.unit.plugins.module_utils.libraries.algebra_unit_base \
    import QuantumAlgebraUnitBase

from ansible_collections.qgeometry.algebroid.plugins.modules.normalize import QuantumAlgebraNormalize


class TestQuantumAlgebraNormalize(QuantumAlgebraUnitBase):

    get_module_args = MockNormalizeApi.NORMALIZE_COMMON_ARGS

    @pytest.fixture
    def module_object(self):
        return QuantumAlgebraNormalize

    @pytest.mark.parametrize("n, expression", sorted(MockNormalizeApi.NORMAL_FORMS))
    def test_normal_form_response(self, algebra_module_mock, n, expression):
        self.set_module_params(
            algebra_module_mock,
            self.get_module_args,
            {
                'n': n,
                'expression': expression
            })
        NormalizeHandler().handle(
            algebra_module_mock, algebra_module_mock.module.params)
        result = self.exit_result(algebra_module_mock)
        assert result['normal_form'] == MockNormalizeApi.NORMAL_FORMS[(n, expression)]
        assert result['changed'] is False

    def test_normalize_details(self, algebra_module_mock):
        self.set_module_params(
            algebra_module_mock,
            self.get_module_args,
            {
                'expression': 'z1*zs2 + q*z2*zs1'
            })
        NormalizeHandler().handle(
            algebra_module_mock, algebra_module_mock.module.params)
        details = self.exit_result(algebra_module_mock)['normalize_details']
        assert details == {'n': 2, 'kind': 'sphere', 'terms': 2, 'weights': [0]}

    def test_normalize_tensor_details(self, algebra_module_mock):
        self.set_module_params(
            algebra_module_mock,
            self.get_module_args,
            {
                'expression': 'z1 @ t'
            })
        NormalizeHandler().handle(
            algebra_module_mock, algebra_module_mock.module.params)
        details = self.exit_result(algebra_module_mock)['normalize_details']
        assert details['kind'] == 'tensor'
        assert 'weights' not in details

    def test_normalize_empty_expression_exception(self, algebra_module_mock):
        self.set_module_params(
            algebra_module_mock,
            self.get_module_args,
            {
                'expression': '   '
            })
        self.capture_fail_json_call(
            MockNormalizeApi.get_normalize_exception_response(
                'empty_expression_exception'), algebra_module_mock, NormalizeHandler)

    def test_normalize_parse_exception(self, algebra_module_mock):
        self.set_module_params(
            algebra_module_mock,
            self.get_module_args,
            {
                'expression': 'z1 + * z2'
            })
        failure = self.capture_fail_json_call(
            MockNormalizeApi.get_normalize_exception_response(
                'parse_exception'), algebra_module_mock, NormalizeHandler)
        assert failure.details['position'] == 5

    def test_normalize_unknown_generator_exception(self, algebra_module_mock):
        self.set_module_params(
            algebra_module_mock,
            self.get_module_args,
            {
                'expression': 'z1*z3'
            })
        self.capture_fail_json_call(
            MockNormalizeApi.get_normalize_exception_response(
                'unknown_generator_exception'), algebra_module_mock, NormalizeHandler)

    def test_normalize_degree_cap_exception(self, algebra_module_mock):
        self.set_module_params(
            algebra_module_mock,
            self.get_module_args,
            {
                'max_degree': 4,
                'expression': 'z1*z1*z1*z1*z1'
            })
        self.capture_fail_json_call(
            MockNormalizeApi.get_normalize_exception_response(
                'degree_cap_exception'), algebra_module_mock, NormalizeHandler)

    def test_normalize_power_above_degree_cap_exception(self, algebra_module_mock):
        self.set_module_params(
            algebra_module_mock,
            self.get_module_args,
            {
                'max_degree': 4,
                'expression': 'z1^5'
            })
        fail = self.capture_fail_json_call(
            MockNormalizeApi.get_normalize_exception_response(
                'power_exception'), algebra_module_mock, NormalizeHandler)
        assert fail.details['position'] == 0

# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type
import pytest
# pylint: disable=unused-import
from ansible_collections.qgeometry.algebroid.tests.unit.plugins.module_utils.libraries import initial_mock
from mock.mock import MagicMock
from ansible_collections.qgeometry.algebroid.tests.unit.plugins.module_utils.libraries. \
    fail_json import FailJsonException, fail_json


class QuantumAlgebraUnitBase:

    '''Quantum Algebra Unit Test Base Class'''

    @pytest.fixture
    def algebra_module_mock(self, mocker, module_object):
        algebra_module_mock = module_object()
        algebra_module_mock.module = MagicMock()
        algebra_module_mock.module.fail_json = fail_json
        algebra_module_mock.module.check_mode = False
        return algebra_module_mock

    def capture_fail_json_call(self, error_msg, module_mock, module_handler):
        try:
            module_handler().handle(module_mock, module_mock.module.params)
        except FailJsonException as fj_object:
            if error_msg not in fj_object.message:
                raise AssertionError(fj_object.message)
            return fj_object
        raise AssertionError(f"fail_json was not called, expected {error_msg!r}")

    def set_module_params(self, module_mock, get_module_args, params):
        args = dict(get_module_args)
        args.update(params)
        module_mock.module.params = args

    def exit_result(self, module_mock):
        """Keyword arguments of the exit_json call"""
        module_mock.module.exit_json.assert_called_once()
        return module_mock.module.exit_json.call_args.kwargs

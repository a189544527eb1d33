# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""
Mock arguments and expected responses for Unit tests of the evaluate module
"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type


class MockEvaluateApi:
    EVALUATE_COMMON_ARGS = {
        "n": 2,
        "max_degree": 12,
        "expression": None,
        "q": None
    }

    VALUES = {
        ("q^2*zs1*z1 + zs2*z2 - 1", "1/2"): "0",
        ("q - q", "2/3"): "0",
        ("1 - q^2", "1/2"): "3/4",
        ("q^-1 + q", "2"): "5/2",
        ("zs2*z2", "1/2"): "-1/4*z1*zs1 + 1",
    }

    RESPONSE_EXEC_DICT = {
        'zero_q_exception': "Invalid value of q '0'",
        'bad_q_exception': "Invalid value of q 'half'",
        'parse_exception': "Failed to parse expression",
    }

    @staticmethod
    def get_evaluate_exception_response(response_type):
        return MockEvaluateApi.RESPONSE_EXEC_DICT.get(response_type, "")

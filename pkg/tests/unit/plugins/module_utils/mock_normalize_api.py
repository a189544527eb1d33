# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""
Mock arguments and expected responses for Unit tests of the normalize module
"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type


class MockNormalizeApi:
    NORMALIZE_COMMON_ARGS = {
        "n": 2,
        "max_degree": 12,
        "expression": None
    }

    NORMAL_FORMS = {
        (2, "zs2*z2"): "-q^2*z1*zs1 + 1",
        (3, "zs2*z2"): "z2*zs2 + (1 - q^2)*z1*zs1",
        (2, "z1*zs1 + z2*zs2"): "1",
        (2, "0"): "0",
        (2, "z2*z1"): "q^-1*z1*z2",
        (1, "zs1*z1"): "1",
        (2, "t^2*t^-3"): "t^-1",
        (2, "z2*z1 @ zs1*zs2"): "q^-2*z1*z2 @ zs2*zs1",
    }

    RESPONSE_EXEC_DICT = {
        'empty_expression_exception': "Provide a non empty expression to normalize.",
        'parse_exception': "Failed to parse expression",
        'unknown_generator_exception': "Unknown generator z3",
        'degree_cap_exception': "Normalize operation failed with error",
        'power_exception': "Power of degree 5 exceeds the degree cap 4",
    }

    @staticmethod
    def get_normalize_exception_response(response_type):
        return MockNormalizeApi.RESPONSE_EXEC_DICT.get(response_type, "")

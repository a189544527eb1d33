# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""
Mock arguments and expected responses for Unit tests of the verify module
"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.verification \
    import VerificationReport, VerificationRun


class MockVerifyApi:
    VERIFY_COMMON_ARGS = {
        "n": None,
        "max_degree": 6,
        "suites": ["all"],
        "n_values": None,
        "q_spots": None,
        "workers": 1,
        "strict": False,
        "fail_on_failure": True
    }

    RESPONSE_EXEC_DICT = {
        'unknown_suite_exception': "Unknown suite(s) hopf",
        'bad_rank_exception': "Rank 7 is not supported",
        'zero_q_exception': "q must be nonzero",
        'degree_exception': "Degree bound must lie in 2..12",
        'failed_check_exception': "1 check(s) failed: sphere (n=2): broken",
        'inconclusive_exception': "1 check(s) are inconclusive",
        'run_exception': "Verification run failed with error",
    }

    @staticmethod
    def get_verify_exception_response(response_type):
        return MockVerifyApi.RESPONSE_EXEC_DICT.get(response_type, "")

    @staticmethod
    def make_run(*statuses):
        """A finished run with one sphere report holding checks of the given statuses"""
        report = VerificationReport('sphere', 2)
        names = {'pass': 'works', 'fail': 'broken', 'inconclusive': 'too deep'}
        for status in statuses:
            report.record(names[status], status, 'lhs', 'rhs')
        return VerificationRun([report.finish()])

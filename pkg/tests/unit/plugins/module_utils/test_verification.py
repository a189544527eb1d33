# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Unit Tests for verification reports, suite configuration and the runner"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import json
from fractions import Fraction

import pytest

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries import verification
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.verification \
    import (Check, VerificationReport, VerificationRun, SuiteConfig, run_verification, run_suite_task, suite_runner,
            render_value, SUITE_NAMES, PASS, FAIL, INCONCLUSIVE,
            EXIT_OK, EXIT_FAILED, EXIT_INCONCLUSIVE)


def raise_error(error):
    raise error


def finished_report(*statuses, suite='sphere', n=2):
    report = VerificationReport(suite, n)
    for index, status in enumerate(statuses):
        report.record(f"check {index}", status, 'lhs', 'rhs')
    return report.finish()


class TestReport:

    def test_check_compares_sides(self):
        report = VerificationReport('sphere', 2)
        assert report.check("equal", lambda: (1, 1)).status == PASS
        failed = report.check("different", lambda: (Fraction(1, 2), 2))
        assert failed.status == FAIL
        assert (failed.lhs, failed.rhs) == ("1/2", "2")
        assert report.summary == {PASS: 1, FAIL: 1, INCONCLUSIVE: 0}
        assert not report.passed
        assert report.failures() == [failed]

    def test_check_true(self):
        report = VerificationReport('sphere', 2)
        check = report.check_true("finding", lambda: (True, "left", "right"))
        assert (check.status, check.lhs, check.rhs) == (PASS, "left", "right")

    def test_resource_limits_are_inconclusive(self):
        report = VerificationReport('sphere', 2)
        check = report.check("too deep", lambda: raise_error(utils.DegreeCapExceeded("word too long")))
        assert check.status == INCONCLUSIVE
        assert report.has_inconclusive
        assert report.passed

    def test_algebra_errors_fail(self):
        report = VerificationReport('sphere', 2)
        check = report.check("broken", lambda: raise_error(utils.MembershipError("not in B")))
        assert check.status == FAIL
        assert check.lhs == "error: not in B"

    def test_unexpected_errors_fail(self):
        report = VerificationReport('sphere', 2)
        check = report.check("crashed", lambda: raise_error(KeyError('V12')))
        assert check.status == FAIL
        assert check.lhs.startswith("error: KeyError")
        after = report.check("still running", lambda: (1, 1))
        assert after.status == PASS
        assert not report.passed

    def test_merge_prefixes_names(self):
        inner = finished_report(PASS, FAIL)
        outer = VerificationReport('twists', 2).merge(inner, prefix="psi: ")
        assert [check.name for check in outer.checks] == ["psi: check 0", "psi: check 1"]

    def test_to_dict(self):
        report = VerificationReport('antipode-q', 3, Fraction(2, 3))
        report.record("S(1) = 1", PASS, "1 # 1", "1 # 1")
        data = report.finish().to_dict()
        assert data['suite'] == 'antipode-q'
        assert data['q'] == "2/3"
        assert data['checks'] == [dict(name="S(1) = 1", status=PASS, lhs="1 # 1", rhs="1 # 1")]
        assert data['summary'] == {PASS: 1, FAIL: 0, INCONCLUSIVE: 0}
        assert 'totalMillis' in data['timing']

    def test_unknown_status(self):
        with pytest.raises(utils.ConfigurationError):
            Check("odd", "maybe")

    @pytest.mark.parametrize("value, expected", [
        (None, ''), (True, 'true'), (Fraction(-3, 4), "-3/4"), ([1, "a"], "[1, a]"), (7, "7")])
    def test_render_value(self, value, expected):
        assert render_value(value) == expected


class TestSuiteConfig:

    def test_defaults(self):
        config = SuiteConfig.from_params()
        assert config.suites == list(SUITE_NAMES)
        assert config.n_values == [2, 3]
        assert config.max_degree == utils.DEFAULT_MAX_DEGREE
        assert config.q_spots == []

    def test_comma_separated_values(self):
        config = SuiteConfig.from_params(suites="sphere, antipode-q", n_values="3,2,3", q_spots="1/2,-2")
        assert config.suites == ['sphere', 'antipode-q']
        assert config.n_values == [3, 2]
        assert config.q_spots == [Fraction(1, 2), Fraction(-2)]

    def test_task_order(self):
        config = SuiteConfig.from_params(suites=['sphere', 'twists'], n_values=[1, 2], q_spots=['1/2'],
                                         max_degree=4)
        tasks = config.tasks()
        assert tasks[:4] == [('sphere', 1, None, 4), ('twists', 1, None, 4),
                             ('sphere', 2, None, 4), ('twists', 2, None, 4)]
        assert all(task[2] == Fraction(1, 2) for task in tasks[4:])
        assert len(tasks) == 8

    @pytest.mark.parametrize("params, error", [
        (dict(suites=['spheres']), utils.ConfigurationError),
        (dict(n_values=[5]), utils.ConfigurationError),
        (dict(n_values="two"), utils.ConfigurationError),
        (dict(q_spots=['0']), utils.DomainError),
        (dict(q_spots=['half']), utils.ConfigurationError),
        (dict(max_degree=13), utils.ConfigurationError),
        (dict(workers=0), utils.ConfigurationError),
    ])
    def test_invalid(self, params, error):
        with pytest.raises(error):
            SuiteConfig.from_params(**params)

    def test_unknown_runner(self):
        with pytest.raises(utils.ConfigurationError):
            suite_runner('nothing')


class TestRun:

    def test_exit_codes(self):
        assert VerificationRun([finished_report(PASS)]).exit_code() == EXIT_OK
        assert VerificationRun([finished_report(PASS), finished_report(FAIL)]).exit_code() == EXIT_FAILED
        inconclusive = VerificationRun([finished_report(PASS, INCONCLUSIVE)])
        assert inconclusive.exit_code() == EXIT_OK
        assert inconclusive.exit_code(strict=True) == EXIT_INCONCLUSIVE
        assert VerificationRun([finished_report(FAIL, INCONCLUSIVE)]).exit_code(strict=True) == EXIT_FAILED

    def test_render_text(self):
        text = VerificationRun([finished_report(PASS, FAIL)]).render_text()
        lines = text.splitlines()
        assert lines[0] == "== sphere (n=2, q=formal) =="
        assert lines[1] == "  PASS         check 0"
        assert lines[2] == "  FAIL         check 1  lhs: lhs  rhs: rhs"
        assert lines[-1] == "TOTAL: 1 pass, 1 fail, 0 inconclusive"

    def test_render_structured(self):
        run = VerificationRun([finished_report(PASS), finished_report(INCONCLUSIVE, n=3)])
        data = json.loads(run.render_structured())
        assert [report['n'] for report in data['reports']] == [2, 3]
        assert data['summary'] == {PASS: 1, FAIL: 0, INCONCLUSIVE: 1}

    def test_run_sphere_suite(self):
        config = SuiteConfig.from_params(suites='sphere', n_values=[1, 2], q_spots=['1/2'], max_degree=4)
        run = run_verification(config)
        assert [(report.n, report.q_value) for report in run.reports] == \
            [(1, None), (2, None), (1, Fraction(1, 2)), (2, Fraction(1, 2))]
        assert run.exit_code() == EXIT_OK
        assert run.summary[PASS] > 0

    def test_suite_setup_errors_are_recorded(self, monkeypatch):
        def broken_suite(n, q_value=None, max_degree=None):
            raise NameError("name 'W' is not defined")

        monkeypatch.setattr(verification, 'suite_runner', lambda name: broken_suite)
        report = run_suite_task(('bohm-theorem', 2, None, 4))
        assert [check.name for check in report.checks] == ["suite setup"]
        assert report.checks[0].status == FAIL
        assert "NameError" in report.checks[0].lhs

    def test_suite_setup_resource_limits_are_inconclusive(self, monkeypatch):
        def deep_suite(n, q_value=None, max_degree=None):
            raise utils.DegreeCapExceeded("word too long")

        monkeypatch.setattr(verification, 'suite_runner', lambda name: deep_suite)
        report = run_suite_task(('sphere', 2, None, 4))
        assert report.checks[0].status == INCONCLUSIVE

    def test_run_every_suite(self):
        config = SuiteConfig(n_values=[1], max_degree=4)
        run = run_verification(config)
        assert [report.suite for report in run.reports] == list(SUITE_NAMES)
        failures = [(report.suite, check.name, check.lhs, check.rhs)
                    for report in run.reports for check in report.checks if check.status == FAIL]
        assert not failures
        assert all(report.checks for report in run.reports)
        assert run.exit_code() == EXIT_OK

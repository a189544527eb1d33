# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Unit Tests for the command line front end"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import io
import json

import pytest

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.command_line \
    import main, build_parser
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.verification \
    import EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INCONCLUSIVE, VerificationRun, VerificationReport, \
    INCONCLUSIVE


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestNormalizeCommand:

    @pytest.mark.parametrize("argv, expected", [
        (["zs2*z2"], "-q^2*z1*zs1 + 1"),
        (["zs2*z2", "--n", "3"], "z2*zs2 + (1 - q^2)*z1*zs1"),
        (["z2*z1"], "q^-1*z1*z2"),
        (["z1*zs1 + z2*zs2"], "1"),
    ])
    def test_normal_forms(self, argv, expected):
        code, out, err = run("normalize", *argv)
        assert code == EXIT_OK
        assert out == expected + "\n"
        assert err == ""

    def test_parse_error_points_at_position(self):
        code, out, err = run("normalize", "z1 + * z2")
        assert code == EXIT_USAGE
        assert out == ""
        lines = err.splitlines()
        assert lines[0].startswith("error: ")
        assert lines[1] == "  z1 + * z2"
        assert lines[2] == "       ^"

    def test_degree_cap(self):
        code, out, err = run("normalize", "z1^5", "--max-degree", "4")
        assert code == EXIT_USAGE
        assert err.startswith("error: ")

    def test_invalid_degree_cap(self):
        code, out, err = run("normalize", "z1", "--max-degree", "13")
        assert code == EXIT_USAGE


class TestEvalCommand:

    @pytest.mark.parametrize("expression, q, expected", [
        ("q^2*zs1*z1 + zs2*z2 - 1", "1/2", "0"),
        ("1 - q^2", "1/2", "3/4"),
        ("q^-1 + q", "2", "5/2"),
        ("zs2*z2", "1/2", "-1/4*z1*zs1 + 1"),
    ])
    def test_values(self, expression, q, expected):
        code, out, err = run("eval", expression, "--q", q)
        assert code == EXIT_OK
        assert out == expected + "\n"

    @pytest.mark.parametrize("q", ["0", "half", "1/0"])
    def test_invalid_q(self, q):
        code, out, err = run("eval", "q", "--q", q)
        assert code == EXIT_USAGE
        assert out == ""
        assert err.startswith("error: ")

    def test_q_is_required(self):
        with pytest.raises(SystemExit) as exit_info:
            build_parser().parse_args(["eval", "q"])
        assert exit_info.value.code == 2


class TestVerifyCommand:

    def test_structured_output(self):
        code, out, err = run("verify", "--suite", "sphere", "--n", "1", "--max-degree", "4",
                             "--format", "structured")
        assert code == EXIT_OK
        data = json.loads(out)
        assert [(report['suite'], report['n'], report['q']) for report in data['reports']] == \
            [('sphere', 1, None)]
        assert data['summary']['fail'] == 0

    def test_text_output_with_spot(self):
        code, out, err = run("verify", "--suite", "sphere", "--n", "1", "--max-degree", "4", "--q", "1/2")
        assert code == EXIT_OK
        assert "== sphere (n=1, q=formal) ==" in out
        assert "== sphere (n=1, q=1/2) ==" in out
        assert out.splitlines()[-1].startswith("TOTAL: ")

    @pytest.mark.parametrize("argv", [
        ["--suite", "spheres"],
        ["--n", "5"],
        ["--q", "0"],
        ["--workers", "0"],
    ])
    def test_usage_errors(self, argv):
        code, out, err = run("verify", *argv)
        assert code == EXIT_USAGE
        assert err.startswith("error: ")

    @pytest.mark.parametrize("strict, expected", [(False, EXIT_OK), (True, EXIT_INCONCLUSIVE)])
    def test_strict_exit_code(self, mocker, strict, expected):
        report = VerificationReport('right-coproduct', 2)
        report.record("property 4", INCONCLUSIVE)
        mocker.patch('ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.'
                     'command_line.run_verification', return_value=VerificationRun([report.finish()]))
        argv = ["verify", "--suite", "right-coproduct", "--n", "2"] + (["--strict"] if strict else [])
        code, out, err = run(*argv)
        assert code == expected

    def test_failure_exit_code(self, mocker):
        report = VerificationReport('sphere', 2)
        report.record("broken", 'fail', "1", "0")
        mocker.patch('ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.'
                     'command_line.run_verification', return_value=VerificationRun([report.finish()]))
        code, out, err = run("verify", "--suite", "sphere", "--n", "2")
        assert code == EXIT_FAILED
        assert "FAIL" in out

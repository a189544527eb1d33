#!/usr/bin/python

# Copyright: (c) 2026, Quantum Geometry Maintainers
# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

""" Ansible module for running the verification suites of the quantum gauge bialgebroid"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type

DOCUMENTATION = r'''
module: verify
version_added: '1.0.0'
short_description: Run verification suites on the quantum sphere bialgebroid
description:
- Runs the selected verification suites over the quantum sphere, the
  Hopf-Galois extension of its projective space and the Ehresmann-Schauenburg
  bialgebroid, and returns one report per suite and rank.
- Every identity is checked exactly over the rational functions in q, and
  again at each value listed in I(q_spots).
author:
- Quantum Geometry Maintainers (@qgeometry)
extends_documentation_fragment:
  - qgeometry.algebroid.quantum_algebra
options:
  suites:
    description:
    - Suites to run.
    - C(all) selects every suite.
    type: list
    elements: str
    default: ['all']
  n_values:
    description:
    - Ranks to verify, each in 1..4.
    - When omitted the single rank I(n) is verified, or ranks 2 and 3 when
      I(n) is not given either.
    type: list
    elements: int
  n:
    description:
    - Single rank to verify when I(n_values) is omitted.
    type: int
  max_degree:
    description:
    - Longest word the rewriter accepts, in 2..12.
    type: int
    default: 6
  q_spots:
    description:
    - Nonzero rationals at which every selected suite is rerun numerically.
    type: list
    elements: str
  workers:
    description:
    - Number of worker processes running suites in parallel.
    type: int
    default: 1
  strict:
    description:
    - Fail the task when a check is inconclusive.
    type: bool
    default: false
  fail_on_failure:
    description:
    - Fail the task when a check fails.
    - C(false) returns the reports with I(passed) set to C(false).
    type: bool
    default: true
notes:
  - The I(check_mode) is supported.
  - The reports are deterministic except for the timing section.
'''

EXAMPLES = r'''

- name: Verify the antipode of the bialgebroid at n = 2
  qgeometry.algebroid.verify:
    suites:
      - antipode-q
    n_values: [2]
    max_degree: 6

- name: Verify everything with numeric reruns
  qgeometry.algebroid.verify:
    suites: all
    n_values: [2, 3]
    q_spots: ["1/2", "2/3"]
    workers: 4
'''

RETURN = r'''
changed:
    description: Whether or not the resource has changed.
    returned: always
    type: bool
    sample: 'false'

passed:
    description: Whether no check failed.
    returned: always
    type: bool
    sample: 'true'

exit_code:
    description: 0 when every check passed, 1 on a failed check, 3 on
                 inconclusive checks with I(strict).
    returned: always
    type: int
    sample: 0

verification_details:
    description: Reports of the verification run.
    returned: always
    type: dict
    contains:
        reports:
            description: One report per suite, rank and value of q.
            type: list
            elements: dict
            contains:
                suite:
                    description: Name of the suite.
                    type: str
                n:
                    description: Rank of the sphere.
                    type: int
                q:
                    description: Value of q, null for the formal run.
                    type: str
                checks:
                    description: Checks with name, status, lhs and rhs.
                    type: list
                    elements: dict
                summary:
                    description: Counts of pass, fail and inconclusive.
                    type: dict
                timing:
                    description: Wall clock time of the suite.
                    type: dict
        summary:
            description: Totals over all reports.
            type: dict
    sample: {
        "reports": [
            {
                "suite": "antipode-q",
                "n": 2,
                "q": null,
                "checks": [
                    {"name": "S(1) = 1", "status": "pass", "lhs": "1 # 1", "rhs": "1 # 1"}
                ],
                "summary": {"pass": 1, "fail": 0, "inconclusive": 0},
                "timing": {"totalMillis": 12.5}
            }
        ],
        "summary": {"pass": 1, "fail": 0, "inconclusive": 0}
        }
'''


from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum import (
    utils,
)
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.algebra_base \
    import QuantumAlgebraBase
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.verification \
    import SuiteConfig, run_verification, EXIT_OK, FAIL, INCONCLUSIVE
from ansible.module_utils.basic import AnsibleModule


LOG = utils.get_logger("verify")


class QuantumAlgebraVerify(QuantumAlgebraBase):
    """Class with verification operations"""

    def __init__(self):
        """Define all parameters required by this module"""

        ansible_module_params = {
            'argument_spec': get_verify_parameters(),
            'supports_check_mode': True
        }
        super().__init__(AnsibleModule, ansible_module_params)

        self.result = dict(
            changed=False,
            passed=False,
            exit_code=EXIT_OK,
            verification_details={}
        )

    def get_config(self, verify_params):
        """Build the suite configuration from the module parameters"""
        try:
            n_values = verify_params['n_values']
            if not n_values:
                n_values = [verify_params['n']] if verify_params['n'] is not None else list(utils.DEFAULT_N_VALUES)
            return SuiteConfig.from_params(suites=verify_params['suites'],
                                           n_values=n_values,
                                           max_degree=verify_params['max_degree'],
                                           q_spots=verify_params['q_spots'],
                                           workers=verify_params['workers'],
                                           strict=verify_params['strict'])
        except Exception as e:
            error_msg = f"Invalid verification parameters: {str(e)}"
            LOG.error(error_msg)
            self.module.fail_json(msg=error_msg)

    def run(self, config):
        try:
            LOG.info("Verifying suites %s for n in %s", config.suites, config.n_values)
            return run_verification(config)
        except Exception as e:
            error_msg = f"Verification run failed with error {str(e)}"
            LOG.error(error_msg)
            self.module.fail_json(msg=error_msg)


def get_verify_parameters():
    """This method provide parameter required for the Ansible verify module"""
    return dict(
        n=dict(type='int', required=False),
        max_degree=dict(type='int', required=False, default=utils.DEFAULT_MAX_DEGREE),
        suites=dict(type='list', elements='str', default=['all']),
        n_values=dict(type='list', elements='int'),
        q_spots=dict(type='list', elements='str'),
        workers=dict(type='int', default=1),
        strict=dict(type='bool', default=False),
        fail_on_failure=dict(type='bool', default=True)
    )


class VerifyExitHandler():
    def handle(self, verify_obj, verify_params, run, config):
        summary = run.summary
        verify_obj.result['passed'] = summary[FAIL] == 0
        verify_obj.result['exit_code'] = run.exit_code(strict=config.strict)
        verify_obj.result['verification_details'] = run.to_dict()
        if summary[FAIL] and verify_params['fail_on_failure']:
            failed = [f"{report.suite} (n={report.n}): {check.name}"
                      for report in run.reports for check in report.failures()]
            error_msg = f"{summary[FAIL]} check(s) failed: {'; '.join(failed)}"
            LOG.error(error_msg)
            verify_obj.module.fail_json(msg=error_msg, **verify_obj.result)
        if summary[INCONCLUSIVE] and config.strict:
            error_msg = f"{summary[INCONCLUSIVE]} check(s) are inconclusive"
            LOG.error(error_msg)
            verify_obj.module.fail_json(msg=error_msg, **verify_obj.result)
        verify_obj.module.exit_json(**verify_obj.result)


class VerifyRunHandler():
    def handle(self, verify_obj, verify_params, config):
        run = verify_obj.run(config)
        VerifyExitHandler().handle(verify_obj, verify_params, run, config)


class VerifyHandler():
    def handle(self, verify_obj, verify_params):
        config = verify_obj.get_config(verify_params)
        VerifyRunHandler().handle(verify_obj, verify_params, config)


def main():
    """ Create the verify object and run the suites
        selected in the playbook."""
    obj = QuantumAlgebraVerify()
    VerifyHandler().handle(obj, obj.module.params)


if __name__ == '__main__':
    main()

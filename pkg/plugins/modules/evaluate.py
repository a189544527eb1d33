#!/usr/bin/python

# Copyright: (c) 2026, Quantum Geometry Maintainers
# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

""" Ansible module for spot evaluation of quantum sphere expressions at a rational q"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type

DOCUMENTATION = r'''
module: evaluate
version_added: '1.0.0'
short_description: Evaluate quantum sphere expressions at a rational value of q
description:
- Normalizes an expression over the field of rational functions in q and
  specialises the normal form at a nonzero rational q.
- The value is cross-checked against the normal form computed in the
  algebra specialised at that q.
author:
- Quantum Geometry Maintainers (@qgeometry)
extends_documentation_fragment:
  - qgeometry.algebroid.quantum_algebra
options:
  expression:
    description:
    - Expression to evaluate.
    type: str
    required: true
  q:
    description:
    - Nonzero rational value of q, such as C(1/2) or C(-3).
    type: str
    required: true
notes:
  - The I(check_mode) is supported.
'''

EXAMPLES = r'''

- name: Check the sphere relation numerically
  qgeometry.algebroid.evaluate:
    n: 2
    expression: "q^2*zs1*z1 + zs2*z2 - 1"
    q: "1/2"

- name: Evaluate a scalar
  qgeometry.algebroid.evaluate:
    expression: "1 - q^2"
    q: "1/2"
'''

RETURN = r'''
changed:
    description: Whether or not the resource has changed.
    returned: always
    type: bool
    sample: 'false'

value:
    description: Rendered value of the expression at q.
    returned: always
    type: str
    sample: "3/4"

evaluate_details:
    description: Details of the evaluation.
    returned: always
    type: dict
    contains:
        n:
            description: Rank of the sphere.
            type: int
        q:
            description: Value of q the expression was specialised at.
            type: str
        is_zero:
            description: Whether the value vanishes.
            type: bool
    sample: {
        "n": 2,
        "q": "1/2",
        "is_zero": false
        }
'''


from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum import (
    utils,
)
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.algebra_base \
    import QuantumAlgebraBase
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.expression_parser \
    import evaluate_expression
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.quantum_spaces \
    import SphereAlgebra
from ansible.module_utils.basic import AnsibleModule


LOG = utils.get_logger("evaluate")


class QuantumAlgebraEvaluate(QuantumAlgebraBase):
    """Class with spot evaluation operations"""

    def __init__(self):
        """Define all parameters required by this module"""

        ansible_module_params = {
            'argument_spec': get_evaluate_parameters(),
            'supports_check_mode': True
        }
        super().__init__(AnsibleModule, ansible_module_params)

        self.result = dict(
            changed=False,
            value='',
            evaluate_details={}
        )

    def get_q_value(self, q_text):
        try:
            return utils.parse_nonzero_q(q_text)
        except utils.ConfigurationError as e:
            error_msg = f"Invalid value of q {q_text!r}: {str(e)}"
            LOG.error(error_msg)
            self.module.fail_json(msg=error_msg)

    def evaluate(self, expression, q_value):
        """
        Evaluate an expression at q
        :param expression: Expression text
        :type expression: str
        :param q_value: Nonzero rational
        :type q_value: Fraction
        :return: Specialised normal form
        """
        try:
            sphere = SphereAlgebra(self.module.params['n'], degree_cap=self.module.params['max_degree'])
            LOG.info("Evaluating %r at q = %s", expression, utils.format_rational(q_value))
            return evaluate_expression(expression, sphere, q_value)
        except utils.ExpressionParseError as e:
            error_msg = f"Failed to parse expression {expression!r}: {str(e)}"
            LOG.error(error_msg)
            self.module.fail_json(msg=error_msg, position=e.position)
        except Exception as e:
            error_msg = f"Evaluate operation failed with error {str(e)}"
            LOG.error(error_msg)
            self.module.fail_json(msg=error_msg)


def get_evaluate_parameters():
    """This method provide parameter required for the Ansible evaluate module"""
    return dict(
        expression=dict(type='str', required=True),
        q=dict(type='str', required=True)
    )


class EvaluateExitHandler():
    def handle(self, evaluate_obj, value, q_value):
        evaluate_obj.result['value'] = value.render()
        evaluate_obj.result['evaluate_details'] = dict(
            n=evaluate_obj.module.params['n'],
            q=utils.format_rational(q_value),
            is_zero=not value.terms
        )
        evaluate_obj.module.exit_json(**evaluate_obj.result)


class EvaluateHandler():
    def handle(self, evaluate_obj, evaluate_params):
        q_value = evaluate_obj.get_q_value(evaluate_params['q'])
        value = evaluate_obj.evaluate(evaluate_params['expression'], q_value)
        EvaluateExitHandler().handle(evaluate_obj, value, q_value)


def main():
    """ Create the evaluate object and evaluate the expression
        given in the playbook."""
    obj = QuantumAlgebraEvaluate()
    EvaluateHandler().handle(obj, obj.module.params)


if __name__ == '__main__':
    main()

#!/usr/bin/python

# Copyright: (c) 2026, Quantum Geometry Maintainers
# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

""" Ansible module for computing normal forms in the quantum sphere algebra"""

from __future__ import absolute_import, division, print_function

__metaclass__ = type

DOCUMENTATION = r'''
module: normalize
version_added: '1.0.0'
short_description: Normal forms in the quantum sphere algebra
description:
- Parses an expression in z, zs, q and t and returns its unique normal form
  in O(S^{2n-1}_q), in the circle algebra H, or in a tensor power of these.
author:
- Quantum Geometry Maintainers (@qgeometry)
extends_documentation_fragment:
  - qgeometry.algebroid.quantum_algebra
options:
  expression:
    description:
    - Expression to normalize.
    - C(@) separates the legs of a tensor and binds looser than C(*).
    - Negative powers are accepted for monomials in q and t.
    type: str
    required: true
notes:
  - The I(check_mode) is supported.
  - A syntax error reports the 0-based offset of the fault.
'''

EXAMPLES = r'''

- name: Normal form of a sphere relation at n = 2
  qgeometry.algebroid.normalize:
    n: 2
    expression: "zs2*z2"

- name: Normal form of a simple tensor
  qgeometry.algebroid.normalize:
    n: 3
    expression: "z2*z1 @ zs1*zs2"
'''

RETURN = r'''
changed:
    description: Whether or not the resource has changed.
    returned: always
    type: bool
    sample: 'false'

normal_form:
    description: Rendered normal form of the expression.
    returned: always
    type: str
    sample: "-q^2*z1*zs1 + 1"

normalize_details:
    description: Details of the computation.
    returned: always
    type: dict
    contains:
        n:
            description: Rank of the sphere.
            type: int
        kind:
            description: One of sphere, circle or tensor.
            type: str
        terms:
            description: Number of terms of the normal form.
            type: int
        weights:
            description: Weights of the homogeneous components, sphere elements only.
            type: list
            elements: int
    sample: {
        "n": 2,
        "kind": "sphere",
        "terms": 2,
        "weights": [0]
        }
'''


from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum import (
    utils,
)
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.algebra_base \
    import QuantumAlgebraBase
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.expression_parser \
    import parse, normalize_value
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.kernel \
    import NCPoly
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.quantum_spaces \
    import SphereAlgebra, HopfH
from ansible.module_utils.basic import AnsibleModule


LOG = utils.get_logger("normalize")


class QuantumAlgebraNormalize(QuantumAlgebraBase):
    """Class with normal form operations"""

    def __init__(self):
        """Define all parameters required by this module"""

        ansible_module_params = {
            'argument_spec': get_normalize_parameters(),
            'supports_check_mode': True
        }
        super().__init__(AnsibleModule, ansible_module_params)

        self.result = dict(
            changed=False,
            normal_form='',
            normalize_details={}
        )

    def get_sphere(self):
        return SphereAlgebra(self.module.params['n'], degree_cap=self.module.params['max_degree'])

    def parse_expression(self, expression):
        """Parse the expression at the configured rank"""
        try:
            return parse(expression, self.module.params['n'], self.module.params['max_degree'])
        except utils.ExpressionParseError as e:
            error_msg = f"Failed to parse expression {expression!r}: {str(e)}"
            LOG.error(error_msg)
            self.module.fail_json(msg=error_msg, position=e.position)

    def normalize(self, value):
        """
        Normal form of a parsed value
        :param value: NCPoly, HopfH or TensorExpr
        :return: Value of the same kind in normal form
        """
        try:
            return normalize_value(value, self.get_sphere())
        except Exception as e:
            error_msg = f"Normalize operation failed with error {str(e)}"
            LOG.error(error_msg)
            self.module.fail_json(msg=error_msg)

    def get_details(self, normal_form):
        if isinstance(normal_form, NCPoly):
            kind = 'sphere'
        elif isinstance(normal_form, HopfH):
            kind = 'circle'
        else:
            kind = 'tensor'
        details = dict(n=self.module.params['n'], kind=kind, terms=len(normal_form.terms))
        if kind == 'sphere':
            details['weights'] = normal_form.weights()
        return details

    def validate_parameters(self, normalize_params):
        if normalize_params['expression'] is None or len(normalize_params['expression'].strip()) == 0:
            error_msg = "Provide a non empty expression to normalize."
            LOG.error(error_msg)
            self.module.fail_json(msg=error_msg)


def get_normalize_parameters():
    """This method provide parameter required for the Ansible normalize module"""
    return dict(
        expression=dict(type='str', required=True)
    )


class NormalizeExitHandler():
    def handle(self, normalize_obj, normal_form):
        normalize_obj.result['normal_form'] = normal_form.render()
        normalize_obj.result['normalize_details'] = normalize_obj.get_details(normal_form)
        normalize_obj.module.exit_json(**normalize_obj.result)


class NormalizeComputeHandler():
    def handle(self, normalize_obj, value):
        normal_form = normalize_obj.normalize(value)
        NormalizeExitHandler().handle(normalize_obj, normal_form)


class NormalizeHandler():
    def handle(self, normalize_obj, normalize_params):
        normalize_obj.validate_parameters(normalize_params=normalize_params)
        value = normalize_obj.parse_expression(normalize_params['expression'])
        NormalizeComputeHandler().handle(normalize_obj, value)


def main():
    """ Create the normalize object and compute the normal form
        of the expression given in the playbook."""
    obj = QuantumAlgebraNormalize()
    NormalizeHandler().handle(obj, obj.module.params)


if __name__ == '__main__':
    main()

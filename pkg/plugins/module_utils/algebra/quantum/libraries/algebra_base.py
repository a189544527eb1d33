# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum \
    import utils

LOG = utils.get_logger('algebra_base')


class QuantumAlgebraBase:

    '''Quantum Algebra Base Class'''

    def __init__(self, ansible_module, ansible_module_params):
        """
        Initialize the quantum algebra base class

        :param ansible_module: Ansible module class
        :type ansible_module: AnsibleModule
        :param ansible_module_params: Parameters for ansible module class
        :type ansible_module_params: dict
        """
        # options declared by the module take precedence over the shared ones
        self.module_params = utils.get_algebroid_common_parameters()
        self.module_params.update(ansible_module_params['argument_spec'])
        ansible_module_params['argument_spec'] = self.module_params

        # Initialize the ansible module
        self.module = ansible_module(
            **ansible_module_params
        )

        utils.ensure_required_libs(self.module)
        self.result = {"changed": False}

        try:
            if self.module.params['n'] is not None:
                utils.validate_rank(self.module.params['n'])
            utils.validate_degree_cap(self.module.params['max_degree'])
            LOG.info("Working over the quantum sphere of rank %s", self.module.params['n'])
        except Exception as e:
            LOG.error(str(e))
            self.module.fail_json(msg=str(e))

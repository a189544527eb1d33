# Copyright: (c) 2026, Quantum Geometry Maintainers
# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

from __future__ import absolute_import, division, print_function
__metaclass__ = type


class ModuleDocFragment(object):
    # Documentation fragment for the quantum sphere algebra
    DOCUMENTATION = r'''
    options:
        n:
            description:
            - Rank of the quantum sphere O(S^{2n-1}_q).
            - The generators are z1..zn and their adjoints zs1..zsn.
            type: int
            default: 2
        max_degree:
            description:
            - Longest word the rewriting engine accepts.
            - Must lie between 2 and 12.
            type: int
            default: 12
    requirements:
      - sympy 1.12 or later.
      - sortedcontainers 2.4 or later.
    notes:
      - The modules present in the collection named as 'qgeometry.algebroid'
        compute exactly over the field of rational functions in q.
'''

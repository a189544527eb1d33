# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Expose the checkout as ansible_collections.qgeometry.algebroid for plain pytest runs

ansible-test sets up the collection tree itself; this only matters when the
unit tests are run with pytest from the repository root.
"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import os
import sys
import tempfile

COLLECTION_ROOT = os.path.dirname(os.path.abspath(__file__))

collect_ignore = ['examples']


def _register_collection():
    if os.sep + os.path.join('ansible_collections', 'qgeometry', 'algebroid') in COLLECTION_ROOT:
        return
    base = os.path.join(tempfile.gettempdir(), 'qgeometry_collections')
    namespace = os.path.join(base, 'ansible_collections', 'qgeometry')
    os.makedirs(namespace, exist_ok=True)
    link = os.path.join(namespace, 'algebroid')
    if not os.path.lexists(link):
        os.symlink(COLLECTION_ROOT, link)
    if base not in sys.path:
        sys.path.insert(0, base)


_register_collection()

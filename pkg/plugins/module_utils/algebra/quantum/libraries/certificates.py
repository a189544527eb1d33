# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Certificate search for equalities in a quotient of a free module

Two representatives are proved equal by writing their difference as an
explicit Q(q)-combination of instantiated relation elements. The linear
algebra is an incremental sparse echelon form over RationalFn.
"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum \
    import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.kernel \
    import RationalFn

try:
    from sortedcontainers import SortedSet
    HAS_SORTEDCONTAINERS = True
except ImportError:
    HAS_SORTEDCONTAINERS = False

LOG = utils.get_logger('certificates')

PROVED = 'proved'
REFUTED = 'refuted'
INCONCLUSIVE = 'inconclusive'


class ProofResult:

    """Verdict of an equality query

    :param verdict: proved, refuted or inconclusive
    :param certificate: (relation label, RationalFn) pairs whose combination is the difference
    :param detail: Human readable note on how the verdict was reached
    """

    def __init__(self, verdict, certificate=None, detail=''):
        self.verdict = verdict
        self.certificate = list(certificate or [])
        self.detail = detail

    @property
    def proved(self):
        return self.verdict == PROVED

    @property
    def refuted(self):
        return self.verdict == REFUTED

    def render(self):
        if self.verdict != PROVED:
            return f"{self.verdict}: {self.detail}" if self.detail else self.verdict
        if not self.certificate:
            return "proved: difference is zero"
        terms = " + ".join(f"({c.render()})*[{label}]" for label, c in self.certificate)
        return f"proved: {terms}"

    def __repr__(self):
        return f"ProofResult({self.verdict!r}, {len(self.certificate)} relation(s))"


class SparseRow(dict):

    """Row of a sparse matrix, column index -> RationalFn, zeros dropped"""

    def __init__(self, data=()):
        if isinstance(data, dict):
            data = data.items()
        super(SparseRow, self).__init__((k, x) for (k, x) in data if x)

    def __mul__(self, factor):
        return SparseRow((k, x * factor) for (k, x) in self.items())

    def __isub__(self, other):
        for k, x in other.items():
            if k in self:
                updated = self[k] - x
                if updated:
                    self[k] = updated
                else:
                    del self[k]
            else:
                self[k] = -x
        return self


class ElimMatrix:

    """Incremental echelon form; each row carries the combination of
    inserted relations it stands for"""

    def __init__(self):
        self.rows = dict()  # pivot column -> (row, combination)
        self.columns = dict()  # vector key -> column index
        self.labels = []

    def column(self, key):
        if key not in self.columns:
            self.columns[key] = len(self.columns)
        return self.columns[key]

    def to_row(self, vector):
        return SparseRow((self.column(key), RationalFn(c)) for key, c in vector.items())

    def reduce(self, row, combination):
        """Eliminate leading entries until the leading column is free"""
        keys = SortedSet(row.keys()) if HAS_SORTEDCONTAINERS else None
        while row:
            if keys is not None:
                pivot = keys.pop()
                if pivot not in row:
                    continue
            else:
                pivot = max(row)
            if pivot not in self.rows:
                return row, combination, pivot
            pivot_row, pivot_combination = self.rows[pivot]
            factor = row[pivot] / pivot_row[pivot]
            row -= pivot_row * factor
            combination -= pivot_combination * factor
            if keys is not None:
                keys.update(k for k in pivot_row.keys() if k in row)
        return row, combination, None

    def add(self, vector, label):
        """Insert a relation; True when it enlarged the span"""
        index = len(self.labels)
        self.labels.append(label)
        row, combination, pivot = self.reduce(self.to_row(vector), SparseRow([(index, RationalFn(1))]))
        if pivot is None:
            return False
        self.rows[pivot] = (row, combination)
        return True

    def query(self, vector):
        """Combination of inserted relations equal to vector, or None"""
        row, combination, pivot = self.reduce(self.to_row(vector), SparseRow())
        if pivot is not None:
            return None
        # vector - sum f_i row_i = 0, and combination accumulated -sum f_i comb_i
        return [(self.labels[index], -c) for index, c in sorted(combination.items())]


def prove_equal_mod_relations(x, y, relations, max_deg=4, invariant=None, spot=utils.SPOT_Q):
    """Decide x = y in the quotient by the span of the relation elements

    :param x: Left representative, a SparseVector
    :param y: Right representative of the same type
    :param relations: callable degree -> iterable of (label, relation vector)
    :param max_deg: Largest relation degree instantiated
    :param invariant: optional linear map that vanishes on every relation,
                      compared at q = spot to refute
    :return: ProofResult
    """
    if max_deg > utils.DEFAULT_DEGREE_CAP:
        error_msg = f"Relation degree {max_deg} exceeds the degree cap {utils.DEFAULT_DEGREE_CAP}"
        LOG.error(error_msg)
        raise utils.DegreeCapExceeded(error_msg)
    difference = x - y
    if not difference:
        return ProofResult(PROVED, detail='representatives agree')
    matrix = ElimMatrix()
    for degree in range(0, max_deg + 1):
        added = 0
        for label, relation in relations(degree):
            if relation and matrix.add(relation, label):
                added += 1
        if added:
            certificate = matrix.query(difference)
            if certificate is not None:
                return ProofResult(PROVED, certificate,
                                   detail=f"{len(certificate)} relation(s) up to degree {degree}")
    if invariant is not None:
        left, right = invariant(x), invariant(y)
        if left.evaluate(spot) != right.evaluate(spot):
            return ProofResult(REFUTED, detail=f"invariant differs at q = {utils.format_rational(spot)}")
    LOG.info("No certificate found with relations up to degree %s", max_deg)
    return ProofResult(INCONCLUSIVE, detail=f"no certificate with relations up to degree {max_deg}")

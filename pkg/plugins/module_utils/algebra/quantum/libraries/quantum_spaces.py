# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""The quantum sphere algebra A, the circle Hopf algebra H of Laurent
polynomials in t, the weight coaction and the projective-space base B"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import itertools
import random

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum \
    import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.kernel \
    import (LaurentScalar, NCPoly, SparseVector, RewriteSystem, ONE, rewrite_system,
            check_local_confluence, render_word, word_sort_key, word_weight)
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.verification \
    import VerificationReport

LOG = utils.get_logger('quantum_spaces')


def render_t_power(k):
    if k == 0:
        return "1"
    if k == 1:
        return "t"
    return f"t^{k}"


class HopfH(SparseVector):

    """Element of H = Q(q)[t, t^-1] keyed by the exponent of t"""

    __slots__ = ()

    @classmethod
    def t_power(cls, k, coefficient=ONE):
        return cls({k: coefficient})

    @classmethod
    def one(cls):
        return cls({0: ONE})

    def __mul__(self, other):
        if isinstance(other, HopfH):
            result = {}
            for a, c1 in self.items():
                for b, c2 in other.items():
                    result[a + b] = result[a + b] + c1 * c2 if a + b in result else c1 * c2
            return HopfH(result)
        if isinstance(other, LaurentScalar):
            return self.scale(other)
        return NotImplemented

    def sort_key(self, key):
        return key

    def render_key(self, key):
        return render_t_power(key)


class HopfTensor(SparseVector):

    """Element of H (x) H keyed by pairs of t-exponents"""

    __slots__ = ()

    def render_key(self, key):
        return f"{render_t_power(key[0])} @ {render_t_power(key[1])}"


def hopf_antipode_H(h):
    return HopfH({-k: c for k, c in h.items()})


def hopf_coproduct_H(h):
    return HopfTensor({(k, k): c for k, c in h.items()})


def hopf_counit_H(h):
    return sum((c for _, c in h.items()), LaurentScalar())


def hopf_multiply_legs_H(x, left=None, right=None):
    """m o (left (x) right) on H (x) H, with identity maps by default"""
    result = HopfH()
    for (a, b), c in x.items():
        first = left(HopfH.t_power(a)) if left else HopfH.t_power(a)
        second = right(HopfH.t_power(b)) if right else HopfH.t_power(b)
        result = result + (first * second).scale(c)
    return result


def galois_map_H(x):
    """Canonical map of H over the ground ring: t^a (x) t^b -> t^(a+b) (x) t^b"""
    return HopfTensor({(a + b, b): c for (a, b), c in x.items()})


def galois_map_H_inverse(x):
    return HopfTensor({(a - b, b): c for (a, b), c in x.items()})


def translation_H(h):
    """Preimage of 1 (x) h under the canonical map of H"""
    return galois_map_H_inverse(HopfTensor({(0, k): c for k, c in h.items()}))


def antipode_from_galois(h):
    """h<1> eps(h<2>) built from the inverse canonical map alone"""
    result = HopfH()
    for (a, b), c in translation_H(h).items():
        result = result + HopfH.t_power(a, c * hopf_counit_H(HopfH.t_power(b)))
    return result


class TensorAH(SparseVector):

    """Element of A (x) H keyed by (normal word, t-exponent)"""

    __slots__ = ()

    @classmethod
    def from_components(cls, components):
        """Build from a map t-exponent -> NCPoly"""
        return cls(((word, k), c) for k, poly in components.items() for word, c in poly.items())

    def component(self, k):
        return NCPoly({word: c for (word, exponent), c in self.items() if exponent == k})

    def components(self):
        grouped = {}
        for (word, k), c in self.items():
            grouped.setdefault(k, {})[word] = c
        return {k: NCPoly(terms) for k, terms in sorted(grouped.items())}

    def exponents(self):
        return sorted({k for (_, k) in self.keys()})

    def sort_key(self, key):
        return (word_sort_key(key[0]), key[1])

    def render_key(self, key):
        return f"{render_word(key[0])} @ {render_t_power(key[1])}"


class SphereAlgebra:

    """O(S^{2n-1}_q) with its rewriting normal form

    :param n: Rank of the sphere
    :param q_value: Optional rational at which q is specialised
    :param degree_cap: Longest word the rewriter accepts
    :param cache_limit: Number of derived tables kept before the memo is emptied
    """

    def __init__(self, n, q_value=None, degree_cap=utils.DEFAULT_DEGREE_CAP, cache_limit=50000):
        self.n = utils.validate_rank(n)
        self.q_value = None if q_value is None else utils.parse_nonzero_q(q_value)
        if degree_cap == utils.DEFAULT_DEGREE_CAP:
            self.rewrite = rewrite_system(self.n, self.q_value)
        else:
            self.rewrite = RewriteSystem(self.n, self.q_value, degree_cap=degree_cap)
        # memo for derived tables such as translation maps, keyed by the caller;
        # emptied once it holds cache_limit entries
        self.cache = {}
        self.cache_limit = cache_limit

    def remember(self, key, value):
        if len(self.cache) >= self.cache_limit:
            LOG.debug("Clearing %s cached tables of %r", len(self.cache), self)
            self.cache.clear()
        self.cache[key] = value
        return value

    def __repr__(self):
        mode = 'formal' if self.q_value is None else f"q={self.q_value}"
        return f"SphereAlgebra(n={self.n}, {mode})"

    def q(self, k=1):
        return self.rewrite.q(k)

    def scalar(self, value):
        return self.rewrite.scalar(value)

    def indices(self):
        return range(1, self.n + 1)

    def normalize(self, p):
        return self.rewrite.normalize(p)

    def word(self, word, coefficient=ONE):
        return self.normalize(NCPoly.from_word(tuple(word), self.scalar(coefficient)))

    def one(self):
        return NCPoly.one()

    def z(self, i):
        return NCPoly.from_word((utils.validate_index(i, self.n),))

    def zs(self, i):
        return NCPoly.from_word((-utils.validate_index(i, self.n),))

    def mul(self, *factors):
        product = NCPoly.one()
        for factor in factors:
            product = product * factor
        return self.normalize(product)

    def star(self, p):
        return self.normalize(p.star())

    def parse(self, text):
        # Local import: the parser depends on HopfH from this module.
        from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries \
            import expression_parser
        value = expression_parser.parse(text, self.n, self.rewrite.degree_cap)
        if not isinstance(value, NCPoly):
            raise utils.ExpressionParseError("Expected an element of the sphere algebra", 0)
        return self.normalize(value)

    def proj_p(self, i, j):
        """P_ij = z*_i z_j"""
        utils.validate_index(i, self.n, 'i')
        utils.validate_index(j, self.n, 'j')
        return self.word((-i, j))

    def proj_q(self, i, j):
        """Q_ij = q^(2n-i-j) z_i z*_j"""
        utils.validate_index(i, self.n, 'i')
        utils.validate_index(j, self.n, 'j')
        return self.word((i, -j), self.q(2 * self.n - i - j))

    def projector(self, kind):
        build = self.proj_p if kind == 'P' else self.proj_q
        return [[build(i, j) for j in self.indices()] for i in self.indices()]

    def base_generators(self):
        """The entries P_ij and Q_ij, labelled"""
        generators = []
        for kind, build in (('P', self.proj_p), ('Q', self.proj_q)):
            for i in self.indices():
                for j in self.indices():
                    generators.append((f"{kind}{i}{j}", build(i, j)))
        return generators

    def is_base(self, p):
        return all(word_weight(word) == 0 for word in p.keys())

    def require_base(self, p, label='element'):
        if not self.is_base(p):
            error_msg = f"The {label} {p.render()} is not in the base algebra: weight is not zero"
            LOG.error(error_msg)
            raise utils.MembershipError(error_msg)
        return p

    def coaction(self, a):
        return TensorAH.from_components(a.weight_components())

    def tensor_ah_mul(self, x, y):
        result = {}
        for (w1, k1), c1 in x.items():
            for (w2, k2), c2 in y.items():
                for word, c in self.word(w1 + w2).items():
                    key = (word, k1 + k2)
                    product = c1 * c2 * c
                    result[key] = result[key] + product if key in result else product
        return TensorAH(result)

    def alphabet(self):
        return [code for i in self.indices() for code in (i, -i)]

    def monomials(self, max_length, min_length=0):
        for length in range(min_length, max_length + 1):
            for word in itertools.product(self.alphabet(), repeat=length):
                yield word

    def random_polynomial(self, rng, max_length=4, terms=3):
        coefficients = [ONE, -ONE, LaurentScalar.constant(2), self.q(1), self.q(-1),
                        self.scalar(ONE - LaurentScalar.monomial(2))]
        poly = {}
        for _ in range(terms):
            length = rng.randint(0, max_length)
            word = tuple(rng.choice(self.alphabet()) for _ in range(length))
            poly[word] = self.scalar(rng.choice(coefficients))
        return NCPoly(poly)


def coaction(a, sphere):
    return sphere.coaction(a)


def proj_P(i, j, sphere):
    return sphere.proj_p(i, j)


def proj_Q(i, j, sphere):
    return sphere.proj_q(i, j)


def _comodule_counit_holds(sphere, word):
    a = sphere.word(word)
    return sum(sphere.coaction(a).components().values(), NCPoly()) == a


def _comodule_coassociative(sphere, word):
    coaction = sphere.coaction(sphere.word(word))
    left, right = {}, {}
    for k, a_k in coaction.components().items():
        for (w, k2), c in sphere.coaction(a_k).items():
            left[(w, k2, k)] = c
        for w, c in a_k.items():
            right[(w, k, k)] = c
    return left == right


def verify_sphere(n, q_value=None, max_degree=utils.DEFAULT_MAX_DEGREE):
    """Relations, ring laws, star structure and comodule structure of A, and the Hopf algebra H"""
    sphere = SphereAlgebra(n, q_value)
    report = VerificationReport('sphere', n, sphere.q_value)

    report.check("derived relation sum q^2(n-j) zs_j z_j = 1", lambda: (
        sphere.normalize(sum((NCPoly.from_word((-j, j), sphere.q(2 * (n - j))) for j in sphere.indices()),
                             NCPoly()) - NCPoly.one()),
        NCPoly()))
    report.check("relation sum z_j zs_j = 1", lambda: (
        sphere.normalize(sum((NCPoly.from_word((j, -j)) for j in sphere.indices()), NCPoly())),
        NCPoly.one()))
    if n >= 2:
        report.check("zs1 z2 = q z2 zs1", lambda: (
            sphere.word((-1, 2)), sphere.normalize(NCPoly.from_word((2, -1), sphere.q(1)))))
        report.check("z2 z1 = q^-1 z1 z2", lambda: (
            sphere.word((2, 1)), sphere.normalize(NCPoly.from_word((1, 2), sphere.q(-1)))))

    rng = random.Random(7919 * n)
    samples = [(sphere.random_polynomial(rng), sphere.random_polynomial(rng), sphere.random_polynomial(rng))
               for _ in range(12)]
    for index, (a, b, c) in enumerate(samples):
        report.check(f"normal form idempotent, sample {index}", lambda a=a: (
            sphere.normalize(sphere.normalize(a)), sphere.normalize(a)))
        report.check(f"left distributivity, sample {index}", lambda a=a, b=b, c=c: (
            sphere.normalize(a * (b + c)), sphere.normalize(a * b + a * c)))
        report.check(f"associativity, sample {index}", lambda a=a, b=b, c=c: (
            sphere.mul(sphere.mul(a, b), c), sphere.mul(a, sphere.mul(b, c))))
        report.check(f"star is an involutive anti-automorphism, sample {index}", lambda a=a, b=b: (
            (sphere.star(sphere.star(a)), sphere.star(sphere.mul(a, b))),
            (sphere.normalize(a), sphere.mul(sphere.star(b), sphere.star(a)))))

    for pattern, replacement in sphere.rewrite.rules:
        relation = NCPoly.from_word(pattern) - replacement
        report.check(f"star preserves relation {render_word(pattern)}", lambda relation=relation: (
            sphere.star(relation), NCPoly()))

    for i, j in itertools.product(sphere.alphabet(), repeat=2):
        report.check(f"coaction multiplicative on {render_word((i, j))}", lambda i=i, j=j: (
            sphere.coaction(sphere.word((i, j))),
            sphere.tensor_ah_mul(sphere.coaction(sphere.word((i,))), sphere.coaction(sphere.word((j,))))))

    for length in range(0, 5):
        words = list(sphere.monomials(length, length))
        report.check_true(f"comodule counit on monomials of degree {length}", lambda words=words: (
            all(_comodule_counit_holds(sphere, word) for word in words), f"{len(words)} monomials", "identity"))
        report.check_true(f"comodule coassociative on monomials of degree {length}", lambda words=words: (
            all(_comodule_coassociative(sphere, word) for word in words), f"{len(words)} monomials", "identity"))
        report.check_true(f"coinvariant iff weight 0, degree {length}", lambda words=words: (
            all((sphere.coaction(sphere.word(word)) == TensorAH.from_components({0: sphere.word(word)}))
                == (word_weight(word) == 0 or not sphere.word(word)) for word in words),
            f"{len(words)} monomials", "weight test"))

    for k in range(-5, 6):
        t_k = HopfH.t_power(k)
        report.check(f"Hopf antipode condition on t^{k}", lambda t_k=t_k: (
            (hopf_multiply_legs_H(hopf_coproduct_H(t_k), left=hopf_antipode_H),
             hopf_multiply_legs_H(hopf_coproduct_H(t_k), right=hopf_antipode_H)),
            (HopfH.one().scale(hopf_counit_H(t_k)), HopfH.one().scale(hopf_counit_H(t_k)))))
        report.check(f"antipode from the canonical map of H on t^{k}", lambda t_k=t_k: (
            antipode_from_galois(t_k), hopf_antipode_H(t_k)))
    return report


def verify_confluence(n, q_value=None, max_degree=utils.DEFAULT_MAX_DEGREE):
    sphere = SphereAlgebra(n, q_value)
    report = VerificationReport('confluence', n, sphere.q_value)
    degrees = sorted({degree for degree in (3, 4, max_degree) if degree <= max_degree}) or [max_degree]
    for degree in degrees:
        confluence = check_local_confluence(sphere.rewrite, degree)
        report.check_true(f"critical pairs joinable up to degree {degree}", lambda confluence=confluence: (
            confluence.joinable, f"{len(confluence.non_joinable)} non-joinable",
            f"{confluence.words_checked} overlap words"))
        for pair in confluence.non_joinable:
            report.record(f"non-joinable overlap {render_word(pair.word)}", 'fail', pair.left, pair.right)
    report.check_true("rewrite rules decrease the word order", lambda: (
        all(word_sort_key(rword) < word_sort_key(pattern)
            for pattern, replacement in sphere.rewrite.rules for rword in replacement.keys()),
        f"{len(sphere.rewrite.rules)} rules", "strictly decreasing"))
    return report


def verify_projections(n, q_value=None, max_degree=utils.DEFAULT_MAX_DEGREE):
    """P and Q are hermitian idempotents and v, w are partial isometries"""
    sphere = SphereAlgebra(n, q_value)
    report = VerificationReport('projections', n, sphere.q_value)
    for kind in ('P', 'Q'):
        matrix = sphere.projector(kind)
        for i, j in itertools.product(range(n), repeat=2):
            report.check(f"{kind}^2 = {kind} at ({i + 1},{j + 1})", lambda matrix=matrix, i=i, j=j: (
                sphere.normalize(sum((matrix[i][k] * matrix[k][j] for k in range(n)), NCPoly())),
                matrix[i][j]))
            report.check(f"{kind}* = {kind} at ({i + 1},{j + 1})", lambda matrix=matrix, i=i, j=j: (
                sphere.star(matrix[i][j]), matrix[j][i]))
            report.check_true(f"{kind}({i + 1},{j + 1}) lies in the base algebra",
                              lambda matrix=matrix, i=i, j=j: (sphere.is_base(matrix[i][j]), matrix[i][j], "weight 0"))
    report.check("v^dagger v = 1", lambda: (
        sphere.normalize(sum((NCPoly.from_word((j, -j)) for j in sphere.indices()), NCPoly())), NCPoly.one()))
    report.check("w^dagger w = 1", lambda: (
        sphere.normalize(sum((NCPoly.from_word((-j, j), sphere.q(2 * (n - j))) for j in sphere.indices()),
                             NCPoly())), NCPoly.one()))
    return report

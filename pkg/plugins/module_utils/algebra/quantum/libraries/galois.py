# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Canonical maps, translation map and the balanced tensor A (x)_B A
of the circle Hopf-Galois extension of the quantum sphere"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import itertools
import random

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum \
    import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.kernel \
    import NCPoly, SparseVector, ONE, ZERO, render_word, word_sort_key, word_weight
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.quantum_spaces \
    import SphereAlgebra, TensorAH, render_t_power
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.verification \
    import VerificationReport

LOG = utils.get_logger('galois')


class TensorAA(SparseVector):

    """Element of A (x) A keyed by pairs of normal words"""

    __slots__ = ()

    @classmethod
    def unit(cls):
        return cls({((), ()): ONE})

    def sort_key(self, key):
        return (word_sort_key(key[0]), word_sort_key(key[1]))

    def render_key(self, key):
        return f"{render_word(key[0])} @ {render_word(key[1])}"

    def flip(self):
        return type(self)._raw({(v, u): c for (u, v), c in self.items()})

    def is_weight_balanced(self):
        return all(word_weight(u) + word_weight(v) == 0 for (u, v) in self.keys())


class LegForm(SparseVector):

    """Canonical form in a free space of legs; word legs and t-exponent legs"""

    __slots__ = ()

    def sort_key(self, key):
        return tuple(word_sort_key(part) if isinstance(part, tuple) else (0, (part,)) for part in key)

    def render_key(self, key):
        return " @ ".join(render_word(part) if isinstance(part, tuple) else render_t_power(part)
                          for part in key)


def tensor(sphere, left, right, coefficient=ONE):
    """Normalized tensor product of two polynomials"""
    left, right = sphere.normalize(left), sphere.normalize(right)
    coefficient = sphere.scalar(coefficient)
    terms = {}
    for u, c1 in left.items():
        for v, c2 in right.items():
            product = c1 * c2 * coefficient
            terms[(u, v)] = terms[(u, v)] + product if (u, v) in terms else product
    return TensorAA(terms)


def simple_tensor(sphere, u, v, coefficient=ONE):
    return tensor(sphere, NCPoly.from_word(tuple(u)), NCPoly.from_word(tuple(v)), coefficient)


def normalize_legs(sphere, x):
    """Renormalize both legs of a tensor whose keys may hold arbitrary words"""
    result = TensorAA()
    for (u, v), c in x.items():
        result = result + tensor(sphere, NCPoly.from_word(u), NCPoly.from_word(v), c)
    return result


def tensor_from_expression(expr, sphere):
    """Convert a parsed two-leg expression over A into a TensorAA"""
    if expr.arity != 2 or expr.leg_kinds() != ('A', 'A'):
        raise utils.MembershipError("Expected a tensor with two legs in the sphere algebra")
    result = TensorAA()
    for ((u, _), (v, _)), c in expr.items():
        result = result + simple_tensor(sphere, u, v, c)
    return result


def multiply_aa(sphere, x, left=None, right=None):
    """left * x * right with left acting on the first leg and right on the second"""
    left = NCPoly.one() if left is None else left
    right = NCPoly.one() if right is None else right
    result = TensorAA()
    for (u, v), c in x.items():
        result = result + tensor(sphere, left * NCPoly.from_word(u), NCPoly.from_word(v) * right, c)
    return result


def chi(x, sphere):
    """Canonical map a (x) b -> a b_(0) (x) b_(1)"""
    terms = {}
    for (u, v), c in x.items():
        k = word_weight(v)
        for word, d in sphere.word(u + v).items():
            product = c * d
            key = (word, k)
            terms[key] = terms[key] + product if key in terms else product
    return TensorAH(terms)


def chi_prime(x, sphere):
    """a (x) b -> a_(0) b (x) a_(1)"""
    terms = {}
    for (u, v), c in x.items():
        k = word_weight(u)
        for word, d in sphere.word(u + v).items():
            product = c * d
            key = (word, k)
            terms[key] = terms[key] + product if key in terms else product
    return TensorAH(terms)


def varphi(x):
    """a (x) t^k -> a_(0) (x) S^-1(t^k) a_(1)"""
    return TensorAH(((word, word_weight(word) - k), c) for (word, k), c in x.items())


class BalancedAB:

    """Class in A (x)_B A with equality decided on its image under chi

    :param rep: A TensorAA representative
    :param sphere: The SphereAlgebra the representative lives in
    """

    def __init__(self, rep, sphere):
        self.rep = rep
        self.sphere = sphere
        self.chi_form = chi(rep, sphere)

    def __eq__(self, other):
        if not isinstance(other, BalancedAB):
            return NotImplemented
        return self.chi_form == other.chi_form

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.chi_form)

    def __add__(self, other):
        return BalancedAB(self.rep + other.rep, self.sphere)

    def items(self):
        return self.rep.items()

    def render(self):
        return self.rep.render()

    def __repr__(self):
        return f"BalancedAB({self.render()})"


def translation_tensor(k, sphere):
    """Representative of tau(t^k) as a TensorAA, memoized on the sphere"""
    key = ('translation', k)
    if key in sphere.cache:
        return sphere.cache[key]
    n = sphere.n
    if k == 0:
        result = TensorAA.unit()
    elif k == 1:
        result = TensorAA()
        for j in sphere.indices():
            result = result + simple_tensor(sphere, (-j,), (j,), sphere.q(2 * (n - j)))
    elif k == -1:
        result = TensorAA()
        for j in sphere.indices():
            result = result + simple_tensor(sphere, (j,), (-j,))
    else:
        step = 1 if k > 0 else -1
        # tau(h t) = t<1> h<1> (x) h<2> t<2> with h = t^(k - step)
        result = translation_product(translation_tensor(k - step, sphere),
                                     translation_tensor(step, sphere), sphere)
    sphere.remember(key, result)
    return result


def translation_product(h_part, k_part, sphere):
    """Sum of k<1> h<1> (x) h<2> k<2> over the given representatives of tau(h) and tau(k)"""
    terms = {}
    for (h1, h2), c1 in h_part.items():
        for (k1, k2), c2 in k_part.items():
            for key, c in tensor(sphere, NCPoly.from_word(k1 + h1), NCPoly.from_word(h2 + k2)).items():
                product = c1 * c2 * c
                terms[key] = terms[key] + product if key in terms else product
    return TensorAA(terms)


def translation(k, n_or_sphere):
    """tau(t^k) as a balanced tensor"""
    sphere = n_or_sphere if isinstance(n_or_sphere, SphereAlgebra) else SphereAlgebra(n_or_sphere)
    return BalancedAB(translation_tensor(k, sphere), sphere)


def chi_inv(x, sphere):
    """Inverse canonical map sum a_k (x) t^k -> sum a_k tau(t^k)"""
    result = TensorAA()
    for (word, k), c in x.items():
        result = result + multiply_aa(sphere, translation_tensor(k, sphere),
                                      left=NCPoly.from_word(word, c))
    return BalancedAB(result, sphere)


def chi_three_leg(sphere, terms):
    """Canonical form of sum c * x (x)_B y (x) t^e from (x_word, y_word, e, c) tuples

    The balanced pair is replaced by its image under chi.
    """
    result = {}
    for u, v, exponent, c in terms:
        weight = word_weight(v)
        for word, d in sphere.word(u + v).items():
            key = (word, weight, exponent)
            product = c * d
            result[key] = result[key] + product if key in result else product
    return LegForm(result)


def leading_chi_three_leg(sphere, terms):
    """Canonical form of sum c * a (x) x (x)_B y from (a_word, x_word, y_word, c) tuples"""
    result = {}
    for a, u, v, c in terms:
        weight = word_weight(v)
        for word, d in sphere.word(u + v).items():
            key = (a, word, weight)
            product = c * d
            result[key] = result[key] + product if key in result else product
    return LegForm(result)


def colinearity_sides(x, sphere):
    """Both sides of (chi (x) id)(id (x) rho) = (id (x) Delta) chi"""
    lhs = {}
    for (u, v), c in x.items():
        for (word, k), d in chi(TensorAA({(u, v): c}), sphere).items():
            key = (word, k, word_weight(v))
            lhs[key] = lhs[key] + d if key in lhs else d
    rhs = LegForm(((word, k, k), d) for (word, k), d in chi(x, sphere).items())
    return LegForm(lhs), rhs


def coinvariance_membership(x, sphere):
    """Flags (in L_A, in (A (x) A)^coH, in C(A,H)) decided by their defining equations"""
    in_l = (LegForm(((u, v, word_weight(v)), c) for (u, v), c in x.items())
            == LegForm(((u, v, -word_weight(u)), c) for (u, v), c in x.items()))
    in_co = (LegForm(((u, v, word_weight(u) + word_weight(v)), c) for (u, v), c in x.items())
             == LegForm(((u, v, 0), c) for (u, v), c in x.items()))
    lhs_terms = []
    for (u, v), c in x.items():
        for (t1, t2), d in translation_tensor(word_weight(u), sphere).items():
            for y, e in sphere.word(t2 + v).items():
                lhs_terms.append((u, t1, y, c * d * e))
    in_c = (leading_chi_three_leg(sphere, lhs_terms)
            == leading_chi_three_leg(sphere, [(u, v, (), c) for (u, v), c in x.items()]))
    return in_l, in_co, in_c


def _balanced_monomials(sphere, max_degree=3):
    pairs = []
    for total in range(0, max_degree + 1):
        for left_length in range(0, total + 1):
            for u in sphere.monomials(left_length, left_length):
                for v in sphere.monomials(total - left_length, total - left_length):
                    pairs.append((u, v))
    return pairs


def coinvariance_corpus(sphere, size=60, seed=1009):
    """Deterministic weight-balanced and unbalanced elements of degree at most 3"""
    rng = random.Random(seed * sphere.n)
    pairs = _balanced_monomials(sphere)
    balanced_pairs = [p for p in pairs if word_weight(p[0]) + word_weight(p[1]) == 0]
    unbalanced_pairs = [p for p in pairs if word_weight(p[0]) + word_weight(p[1]) != 0]
    coefficients = [ONE, -ONE, sphere.q(1), sphere.q(-2), sphere.scalar(2)]

    def build(chosen):
        result = TensorAA()
        for u, v in chosen:
            result = result + simple_tensor(sphere, u, v, rng.choice(coefficients))
        return result

    balanced = [build([pair]) for pair in balanced_pairs[:size // 2]]
    while len(balanced) < size:
        element = build(rng.sample(balanced_pairs, min(3, len(balanced_pairs))))
        if element:
            balanced.append(element)
    unbalanced = []
    while len(unbalanced) < size:
        chosen = [rng.choice(unbalanced_pairs)] + rng.sample(balanced_pairs, rng.randint(0, 2))
        element = build(chosen)
        if not element.is_weight_balanced():
            unbalanced.append(element)
    return balanced, unbalanced


def _generator_words(sphere):
    return [(code,) for code in sphere.alphabet()]


def verify_translation_properties(n, q_value=None, max_degree=utils.DEFAULT_MAX_DEGREE, kmax=2):
    """Translation map identities for h = t^k and the canonical map properties"""
    sphere = SphereAlgebra(n, q_value)
    report = VerificationReport('translation', n, sphere.q_value)

    for k in range(-3, 4):
        report.check(f"chi(tau(t^{k})) = 1 @ t^{k}", lambda k=k: (
            translation(k, sphere).chi_form, TensorAH({((), k): ONE})))

    for k in range(-kmax, kmax + 1):
        tau = translation_tensor(k, sphere)
        report.check(f"translation identity 1 at t^{k}", lambda tau=tau, k=k: (
            chi_three_leg(sphere, [(u, v, word_weight(v), c) for (u, v), c in tau.items()]),
            chi_three_leg(sphere, [(u, v, k, c) for (u, v), c in tau.items()])))
        report.check(f"translation identity 2 at t^{k}", lambda tau=tau, k=k: (
            chi_three_leg(sphere, [(u, v, word_weight(u), c) for (u, v), c in tau.items()]),
            chi_three_leg(sphere, [(u, v, -k, c) for (u, v), c in tau.items()])))
        report.check(f"translation identity 3 at t^{k}", lambda tau=tau: (
            sphere.normalize(sum((NCPoly.from_word(u + v, c) for (u, v), c in tau.items()), NCPoly())),
            NCPoly.one()))
    for h, k in itertools.product(range(-kmax, kmax + 1), repeat=2):
        report.check(f"translation identity 4 at h=t^{h}, k=t^{k}", lambda h=h, k=k: (
            chi(translation_tensor(h + k, sphere), sphere),
            chi(translation_product(translation_tensor(h, sphere), translation_tensor(k, sphere), sphere),
                sphere)))
    for word in list(sphere.monomials(2, 1)):
        a = sphere.word(word)
        report.check(f"translation identity 5 at a={render_word(word)}", lambda a=a: (
            chi_inv(sphere.coaction(a), sphere),
            BalancedAB(tensor(sphere, NCPoly.one(), a), sphere)))

    base = sphere.base_generators()
    for (a,), (b_name, b), (c,) in itertools.product(_generator_words(sphere), base, _generator_words(sphere)):
        report.check(f"chi balanced over {b_name} on {render_word((a,))} @ {render_word((c,))}",
                     lambda a=a, b=b, c=c: (
                         chi(tensor(sphere, NCPoly.from_word((a,)) * b, NCPoly.from_word((c,))), sphere),
                         chi(tensor(sphere, NCPoly.from_word((a,)), b * NCPoly.from_word((c,))), sphere)))
    for a, b, c in itertools.product(_generator_words(sphere), repeat=3):
        x = simple_tensor(sphere, b, c)
        report.check(f"chi left linear, {render_word(a)} times {x.render()}", lambda a=a, x=x: (
            chi(multiply_aa(sphere, x, left=NCPoly.from_word(a)), sphere),
            sphere.tensor_ah_mul(TensorAH({(a, 0): ONE}), chi(x, sphere))))
    for b, c in itertools.product(_generator_words(sphere), repeat=2):
        x = simple_tensor(sphere, b, c)
        report.check(f"chi right colinear on {x.render()}", lambda x=x: colinearity_sides(x, sphere))
        report.check(f"chi = varphi o chi' on {x.render()}", lambda x=x: (
            chi(x, sphere), varphi(chi_prime(x, sphere))))

    rng = random.Random(31 * n)
    for index in range(8):
        terms = {}
        for k in range(-3, 4):
            word = tuple(rng.choice(sphere.alphabet()) for _ in range(rng.randint(0, 3)))
            for w, c in sphere.word(word).items():
                terms[(w, k)] = terms.get((w, k), ZERO) + c
        x = TensorAH(terms)
        report.check(f"chi o chi_inv = id, sample {index}", lambda x=x: (chi_inv(x, sphere).chi_form, x))
    return report


def verify_coinvariants(n, q_value=None, max_degree=utils.DEFAULT_MAX_DEGREE):
    """The three descriptions of the coinvariants of A (x) A agree"""
    sphere = SphereAlgebra(n, q_value)
    report = VerificationReport('coinvariants', n, sphere.q_value)
    balanced, unbalanced = coinvariance_corpus(sphere)
    for index, element in enumerate(balanced):
        report.check(f"balanced element {index} lies in L_A, (A@A)^coH and C(A,H)", lambda element=element: (
            coinvariance_membership(element, sphere), (True, True, True)))
    for index, element in enumerate(unbalanced):
        report.check(f"unbalanced element {index} lies in none", lambda element=element: (
            coinvariance_membership(element, sphere), (False, False, False)))
    report.check("1 @ 1 is coinvariant", lambda: (
        coinvariance_membership(TensorAA.unit(), sphere), (True, True, True)))
    return report

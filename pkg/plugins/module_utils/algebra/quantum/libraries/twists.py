# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Convolution algebra of right B-linear functionals on C(A,H), the twist
group and the correspondence between twists and antipodes"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import itertools
from fractions import Fraction

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum \
    import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.kernel \
    import LaurentScalar, NCPoly, ONE, render_word, word_weight
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.galois \
    import translation_tensor
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.algebroid \
    import AlgebroidElement, Bialgebroid, V, W
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.antipodes \
    import AntipodeMap, antipode_S, antipode_flip, verify_antipode
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.verification \
    import VerificationReport

LOG = utils.get_logger('twists')


class TwistParams:

    """Diagonal automorphism z_i -> X_i z_i, z*_i -> X_i^-1 z*_i of the sphere

    :param values: One unit scalar c*q^k per generator index
    """

    def __init__(self, values):
        self.values = tuple(LaurentScalar.coerce(value) for value in values)
        for index, value in enumerate(self.values, start=1):
            if not value.is_unit():
                error_msg = f"Twist parameter X{index} = {value.render()} is not invertible"
                LOG.error(error_msg)
                raise utils.NotATwistError(error_msg)

    @classmethod
    def identity(cls, n):
        return cls([ONE] * n)

    @property
    def n(self):
        return len(self.values)

    def inverse(self):
        return TwistParams([value.inverse() for value in self.values])

    def __mul__(self, other):
        if self.n != other.n:
            raise utils.ConfigurationError("Twist parameters of different ranks cannot be multiplied")
        return TwistParams([a * b for a, b in zip(self.values, other.values)])

    def specialise(self, sphere):
        return TwistParams([sphere.scalar(value) for value in self.values])

    def word_factor(self, word):
        """Scalar by which the automorphism multiplies a word"""
        factor = ONE
        for code in word:
            value = self.values[abs(code) - 1]
            factor = factor * (value if code > 0 else value.inverse())
        return factor

    def __eq__(self, other):
        if not isinstance(other, TwistParams):
            return NotImplemented
        return self.values == other.values

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.values)

    def render(self):
        return "(" + ", ".join(value.render() for value in self.values) + ")"

    def __repr__(self):
        return f"TwistParams{self.render()}"


class Functional:

    """Right B-linear map C(A,H) -> B held as a value table on basis tensors

    Values are filled on demand by the rule; without a rule, only the
    tensors in the table are defined.

    :param algebroid: The Bialgebroid the functional is defined on
    :param rule: callable (u, v) -> NCPoly for normal words u, v
    :param values: Initial table (u, v) -> NCPoly
    :param name: Label used in reports
    :param max_length: Largest bidegree |u| + |v| the functional is evaluated on
    """

    def __init__(self, algebroid, rule=None, values=None, name='phi', max_length=utils.DEFAULT_DEGREE_CAP):
        self.algebroid = algebroid
        self.rule = rule
        self.table = dict(values or {})
        self.name = name
        self.max_length = max_length

    def __repr__(self):
        return f"Functional({self.name}, {len(self.table)} value(s))"

    @classmethod
    def from_generator_values(cls, algebroid, values, name='phi'):
        """Table functional from its values on 1, V_ij and W_ij"""
        sphere = algebroid.sphere
        table = {((), ()): NCPoly.one()}
        for (kind, i, j), value in values.items():
            value = sphere.require_base(sphere.normalize(value), f"value on {kind}{i}{j}")
            if kind == V:
                table[((-i,), (j,))] = value
            else:
                table[((i,), (-j,))] = value.scale(algebroid.q(i + j - 2 * algebroid.n))
        return cls(algebroid, values=table, name=name)

    def value(self, u, v):
        key = (u, v)
        if key in self.table:
            return self.table[key]
        if self.rule is None or len(u) + len(v) > self.max_length:
            error_msg = f"Functional {self.name} holds no value for {render_word(u)} @ {render_word(v)}"
            LOG.error(error_msg)
            raise utils.FunctionalDomainError(error_msg)
        value = self.algebroid.sphere.normalize(self.rule(u, v))
        self.table[key] = value
        return value

    def __call__(self, h):
        result = NCPoly()
        for (u, v), c in h.items():
            result = result + self.value(u, v).scale(c)
        return result


def counit_functional(algebroid):
    return Functional(algebroid, rule=lambda u, v: algebroid.sphere.word(u + v), name='epsilon')


def act(h, f):
    """h < f = s(f(h_(1))) h_(2)"""
    algebroid = f.algebroid
    result = AlgebroidElement()
    for (x, u, v, y), c in algebroid.coproduct_pairs(h).items():
        for word, d in f.value(x, u).items():
            result = result + algebroid.legs(word + v, y, c * d)
    return result


def convolve(f, g):
    """(f g)(h) = g(h < f)"""
    algebroid = f.algebroid
    return Functional(algebroid, rule=lambda u, v: g(act(algebroid.legs(u, v), f)), name=f"{f.name}*{g.name}")


def twist_from_params(params, algebroid):
    """phi^F(u (x) v) = F(u) v for the diagonal automorphism F"""
    params = params.specialise(algebroid.sphere)
    if params.n != algebroid.n:
        raise utils.ConfigurationError(f"Twist parameters have rank {params.n}, expected {algebroid.n}")
    return Functional(algebroid, rule=lambda u, v: algebroid.sphere.word(u + v, params.word_factor(u)),
                      name=f"phi{params.render()}")


def twist_automorphism(f, a):
    """F_f(a) = f(a_(0) (x) a_(1)<1>) a_(1)<2> on a polynomial of the sphere"""
    sphere = f.algebroid.sphere
    result = NCPoly()
    for word, c in sphere.normalize(a).items():
        for (t1, t2), d in translation_tensor(word_weight(word), sphere).items():
            result = result + sphere.normalize(f.value(word, t1) * NCPoly.from_word(t2)).scale(c * d)
    return result


def params_from_twist(f):
    """Recover X_i from F(z_i) = X_i z_i; raises when F is not diagonal"""
    algebroid = f.algebroid
    values = []
    for i in algebroid.sphere.indices():
        image = twist_automorphism(f, NCPoly.from_word((i,)))
        coefficient = image.coefficient((i,))
        if len(image) != 1 or not coefficient.is_unit():
            error_msg = f"{f.name} does not act diagonally: F(z{i}) = {image.render()}"
            LOG.error(error_msg)
            raise utils.NotATwistError(error_msg)
        values.append(coefficient)
    return TwistParams(values)


def inverse_twist(f):
    return twist_from_params(params_from_twist(f).inverse(), f.algebroid)


def is_twist(f, n=None, inverse=None):
    """Unitality, convolution invertibility, multiplicativity of the action and right B-linearity"""
    algebroid = f.algebroid
    sphere = algebroid.sphere
    if n is not None and n != algebroid.n:
        raise utils.ConfigurationError(f"Functional is defined for n={algebroid.n}, not n={n}")
    report = VerificationReport('is-twist', algebroid.n, sphere.q_value)
    epsilon = counit_functional(algebroid)
    generators = [('1', algebroid.one())] + algebroid.generators()

    report.check("unital", lambda: (act(algebroid.one(), f), algebroid.one()))
    try:
        inverse = inverse or inverse_twist(f)
    except utils.NotATwistError as e:
        report.record("has a convolution inverse", 'fail', str(e))
        inverse = None
    if inverse is not None:
        for label, h in algebroid.generators():
            report.check(f"f * f^-1 = epsilon on {label}", lambda h=h: (convolve(f, inverse)(h), epsilon(h)))
            report.check(f"f^-1 * f = epsilon on {label}", lambda h=h: (convolve(inverse, f)(h), epsilon(h)))
    for (l1, h1), (l2, h2) in itertools.product(generators, repeat=2):
        report.check(f"action multiplicative on {l1} {l2}", lambda h1=h1, h2=h2: (
            act(algebroid.mul(h1, h2), f), algebroid.mul(act(h1, f), act(h2, f))))
    for (b_name, b), (label, h) in itertools.product(sphere.base_generators(), algebroid.generators()):
        report.check(f"right B-linear on t({b_name}){label}", lambda b=b, h=h: (
            f(algebroid.mul(algebroid.tgt(b), h)), sphere.mul(f(h), b)))
    return report


def require_twist(f):
    report = is_twist(f)
    if not report.passed:
        error_msg = f"{f.name} is not a twist: {', '.join(check.name for check in report.failures())}"
        LOG.error(error_msg)
        raise utils.NotATwistError(error_msg)
    return f


def twisted_antipode(antipode, f, inverse=None, check=True):
    """S'(h) = S(h < f) with inverse S^-1(h) < f^-1"""
    if check:
        require_twist(f)
    algebroid = antipode.algebroid
    inverse = inverse or inverse_twist(f)
    images, inverse_images = {}, {}
    for key in algebroid.generator_keys():
        generator = algebroid.generator(key)
        images[key] = antipode.apply(act(generator, f))
        inverse_images[key] = act(antipode.apply_inverse(generator), inverse)
    return AntipodeMap(algebroid, images, inverse_images, name=f"{antipode.name}<{f.name}")


def twist_from_antipodes(antipode, other, direction='forward'):
    """epsilon o S^-1 o S' (forward) or epsilon o S'^-1 o S (reverse)"""
    algebroid = antipode.algebroid
    if direction == 'forward':
        def rule(u, v):
            return algebroid.counit(antipode.apply_inverse(other.apply(algebroid.legs(u, v))))
        name = f"eps.{antipode.name}^-1.{other.name}"
    elif direction == 'reverse':
        def rule(u, v):
            return algebroid.counit(other.apply_inverse(antipode.apply(algebroid.legs(u, v))))
        name = f"eps.{other.name}^-1.{antipode.name}"
    else:
        raise utils.ConfigurationError(f"Unknown direction {direction!r}, choose forward or reverse")
    return Functional(algebroid, rule=rule, name=name)


def parameter_family(algebroid):
    """Labelled parameter vectors used by the twist suite"""
    n = algebroid.n
    indices = list(algebroid.sphere.indices())
    return [
        ('identity', TwistParams.identity(n)),
        ('uniform q', TwistParams([LaurentScalar.monomial(1)] * n)),
        ('psi', TwistParams([LaurentScalar.monomial(2 * (n - i)) for i in indices])),
        ('graded', TwistParams([LaurentScalar.monomial(i, i + 1) for i in indices])),
        ('rational', TwistParams([LaurentScalar.constant(Fraction(1, i + 1)) for i in indices])),
        ('alternating', TwistParams([LaurentScalar.monomial(-1) if i % 2 else LaurentScalar.monomial(2, -2)
                                     for i in indices])),
    ]


def _automorphism_samples(sphere):
    return [word for word in sphere.monomials(2, 1) if sphere.rewrite.is_normal(word)]


def verify_twists(n, q_value=None, max_degree=utils.DEFAULT_MAX_DEGREE):
    """Twist group: axioms for a family of parameters, group law and the group isomorphism"""
    algebroid = Bialgebroid(n, q_value)
    sphere = algebroid.sphere
    report = VerificationReport('twists', n, sphere.q_value)
    epsilon = counit_functional(algebroid)
    family = [(label, params, twist_from_params(params, algebroid)) for label, params in parameter_family(algebroid)]

    for label, h in algebroid.generators():
        report.check(f"{label} < epsilon = {label}", lambda h=h: (act(h, epsilon), h))
        report.check(f"phi of identity parameters is epsilon on {label}", lambda h=h: (
            family[0][2](h), epsilon(h)))

    for label, params, phi in family:
        report.merge(is_twist(phi), prefix=f"{label}: ")
        report.check(f"{label}: parameters recovered", lambda params=params, phi=phi: (
            params_from_twist(phi), params.specialise(sphere)))
        for i, j in itertools.product(sphere.indices(), repeat=2):
            x_i = sphere.scalar(params.values[i - 1])
            report.check(f"{label}: phi(V{i}{j}) = X{i}^-1 P{i}{j}", lambda phi=phi, i=i, j=j, x_i=x_i: (
                phi(algebroid.gen_v(i, j)), sphere.proj_p(i, j).scale(x_i.inverse())))
            report.check(f"{label}: phi(W{i}{j}) = X{i} Q{i}{j}", lambda phi=phi, i=i, j=j, x_i=x_i: (
                phi(algebroid.gen_w(i, j)), sphere.proj_q(i, j).scale(x_i)))
        for word in _automorphism_samples(sphere):
            report.check(f"{label}: automorphism recovered on {render_word(word)}",
                         lambda params=params, phi=phi, word=word: (
                             twist_automorphism(phi, NCPoly.from_word(word)),
                             sphere.word(word, params.specialise(sphere).word_factor(word))))
        for u, v in [((-1,), (1,)), ((1,), (-n,)), ((1, -1), ()), ((), (1, -1)), ((1, 1), (-1, -n))]:
            if not sphere.rewrite.is_normal(u) or not sphere.rewrite.is_normal(v):
                continue
            report.check(f"{label}: ({render_word(u)} @ {render_word(v)}) < phi = F(a) @ a~",
                         lambda params=params, phi=phi, u=u, v=v: (
                             act(algebroid.legs(u, v), phi),
                             algebroid.legs(u, v, params.specialise(sphere).word_factor(u))))

    for (l1, p1, f1), (l2, p2, f2) in itertools.product(family[1:4], repeat=2):
        product = twist_from_params(p1 * p2, algebroid)
        for label, h in algebroid.generators():
            report.check(f"convolution {l1} * {l2} multiplies parameters on {label}",
                         lambda f1=f1, f2=f2, product=product, h=h: (convolve(f1, f2)(h), product(h)))
            report.check(f"convolution {l1} * {l2} commutes on {label}", lambda f1=f1, f2=f2, h=h: (
                convolve(f1, f2)(h), convolve(f2, f1)(h)))
    for label, params, phi in family:
        inverse = twist_from_params(params.inverse(), algebroid)
        for g_label, h in algebroid.generators():
            report.check(f"{label} times its inverse is epsilon on {g_label}", lambda phi=phi, inverse=inverse, h=h: (
                convolve(phi, inverse)(h), epsilon(h)))

    antipode = antipode_S(algebroid)
    psi = twist_from_antipodes(antipode, antipode_flip(algebroid))
    rebuilt = twist_from_params(params_from_twist(psi), algebroid)
    for label, h in algebroid.generators():
        report.check(f"phi^(F_psi) = psi on {label}", lambda h=h: (rebuilt(h), psi(h)))

    _, _, graded = family[3]
    twisted = twisted_antipode(antipode, graded, check=False)
    report.merge(verify_antipode(twisted, report=VerificationReport('twisted', n, sphere.q_value)),
                 prefix="S(.<graded): ")
    return report


def _reconstructs(antipode, target, f):
    """S(g < f) = S'(g) on every generator"""
    algebroid = antipode.algebroid
    return all(antipode.apply(act(h, f)) == target.apply(h) for _, h in algebroid.generators())


def _psi_candidate(algebroid, exponent):
    n = algebroid.n
    values = {}
    for i, j in itertools.product(algebroid.sphere.indices(), repeat=2):
        values[(V, i, j)] = algebroid.sphere.proj_p(i, j).scale(algebroid.q(2 * (i - n)))
        values[(W, i, j)] = algebroid.sphere.proj_q(i, j).scale(algebroid.q(2 * (n - exponent(i, j))))
    return Functional.from_generator_values(algebroid, values, name='psi candidate')


def verify_bohm_theorem(n, q_value=None, max_degree=utils.DEFAULT_MAX_DEGREE):
    """Twists act simply transitively on antipodes: flip = S(. < psi)"""
    algebroid = Bialgebroid(n, q_value)
    sphere = algebroid.sphere
    report = VerificationReport('bohm-theorem', n, sphere.q_value)
    antipode, flip = antipode_S(algebroid), antipode_flip(algebroid)
    epsilon = counit_functional(algebroid)
    psi = twist_from_antipodes(antipode, flip)
    reverse = twist_from_antipodes(antipode, flip, direction='reverse')

    for i, j in itertools.product(sphere.indices(), repeat=2):
        report.check(f"psi(V{i}{j}) = q^2(i-n) P{i}{j}", lambda i=i, j=j: (
            psi(algebroid.gen_v(i, j)), sphere.proj_p(i, j).scale(algebroid.q(2 * (i - n)))))
        report.check(f"psi(W{i}{j}) = q^2(n-i) Q{i}{j}", lambda i=i, j=j: (
            psi(algebroid.gen_w(i, j)), sphere.proj_q(i, j).scale(algebroid.q(2 * (n - i)))))
    report.check("psi has parameters X_i = q^2(n-i)", lambda: (
        params_from_twist(psi),
        TwistParams([LaurentScalar.monomial(2 * (n - i)) for i in sphere.indices()]).specialise(sphere)))
    report.merge(is_twist(psi), prefix="psi: ")

    twisted = twisted_antipode(antipode, psi, check=False)
    for label, h in algebroid.generators():
        report.check(f"flip = S(. < psi) on {label}", lambda h=h: (twisted.apply(h), flip.apply(h)))
        report.check(f"flip^-1 = S^-1(.) < psi^-1 on {label}", lambda h=h: (
            twisted.apply_inverse(h), flip.apply_inverse(h)))
        report.check(f"eps o S^-1 o S = epsilon on {label}", lambda h=h: (
            twist_from_antipodes(antipode, antipode)(h), epsilon(h)))
        report.check(f"S(. < epsilon) = S on {label}", lambda h=h: (
            twisted_antipode(antipode, epsilon, inverse=epsilon, check=False).apply(h), antipode.apply(h)))
        report.check(f"reverse construction is the inverse of psi on {label}", lambda h=h: (
            convolve(psi, reverse)(h), epsilon(h)))

    report.check_true("finding: twist direction", lambda: _direction_finding(antipode, flip, psi, reverse))
    report.check_true("finding: psi(W) exponent", lambda: _exponent_finding(algebroid, antipode, flip))
    return report


def _direction_finding(antipode, flip, forward, reverse):
    forward_ok = _reconstructs(antipode, flip, forward)
    reverse_ok = _reconstructs(antipode, flip, reverse)
    coincide = all(forward(h) == reverse(h) for _, h in antipode.algebroid.generators())
    lhs = (f"eps o S^-1 o S' reconstructs: {str(forward_ok).lower()}; "
           f"eps o S'^-1 o S reconstructs: {str(reverse_ok).lower()}")
    rhs = "candidates coincide" if coincide else "S' = S(. < eps o S^-1 o S')"
    return (forward_ok and (coincide or not reverse_ok)), lhs, rhs


def _exponent_finding(algebroid, antipode, flip):
    row = _psi_candidate(algebroid, lambda i, j: i)
    column = _psi_candidate(algebroid, lambda i, j: j)
    row_ok = _reconstructs(antipode, flip, row)
    column_ok = _reconstructs(antipode, flip, column)
    coincide = all(row(h) == column(h) for _, h in algebroid.generators())
    lhs = (f"q^2(n-i) reconstructs: {str(row_ok).lower()}; "
           f"q^2(n-j) reconstructs: {str(column_ok).lower()}")
    rhs = "candidates coincide" if coincide else "psi(W_ij) = q^2(n-i) Q_ij"
    return (row_ok and (coincide or not column_ok)), lhs, rhs

# coding: utf-8

"""
    A função sigma de Weierstrass na forma de produto em q, o produto σ_d,
    funções teta de nível ξ montadas por combinadores e os verificadores de
    suas equações funcionais.

    Convenção: u^{1/2} = e^{z/2}; σ é sempre função de z ∈ ℂ (ou de um jet),
    nunca de u com escolha de ramo.
"""

import cmath
import math
import logging
import numbers

import numpy

from .curve import TWO_PI_I
from .errors import (ParameterError, IncompatibleLattices, SampleAtZero,
                     NotInLattice)
from .jets import Jet, compose_analytic, jet_invert, DEFAULT_DEGREE_CAP
from .lattices import (LatticeWithForm, WeylGroup, spin, as_vector)

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION_TOL = 1e-17
TRUNCATION_MARGIN = 5

# |θ(u)| abaixo disto é tratado como amostra num zero de θ
ZERO_THRESHOLD = 1e-12


def truncation_order(params, u_abs, tol=DEFAULT_TRUNCATION_TOL):
    """Menor N com |q|^N·(1 + |u| + |u|⁻¹) < tol, mais a margem."""
    q_abs = abs(params.q)
    bound = 1.0 + u_abs + 1.0 / u_abs
    return max(1, int(math.ceil(math.log(tol / bound) / math.log(q_abs)))) + TRUNCATION_MARGIN


def _exp(value):
    if isinstance(value, Jet):
        return value.exp()
    return cmath.exp(value)


def _sigma_product(zeta, params, count):
    """(u^{1/2} − u^{−1/2}) ∏_{n<=count} (1−qⁿu)(1−qⁿu⁻¹)/(1−qⁿ)², para complexo ou jet."""
    half = _exp(zeta * 0.5)
    inverse_half = _exp(zeta * -0.5)
    u = half * half
    inverse_u = inverse_half * inverse_half
    value = half - inverse_half
    q = params.q
    for n in range(1, count + 1):
        qn = q ** n
        value = value * ((1.0 - u * qn) * (1.0 - inverse_u * qn) * (1.0 / (1.0 - qn) ** 2))
    return value


def sigma(z, params, tol=DEFAULT_TRUNCATION_TOL):
    """
    σ(z) pelo produto truncado. Aceita também um Jet, caso em que compõe a
    série de Taylor de σ no termo constante com a parte nilpotente.
    """
    if isinstance(z, Jet):
        taylor = sigma_jet(z.constant_term, params, z.degree_cap, tol)
        return compose_analytic(taylor, z)
    z = complex(z)
    u_abs = math.exp(z.real)
    count = truncation_order(params, u_abs, tol)
    n = numpy.arange(1, count + 1)
    qn = params.q ** n
    u = cmath.exp(z)
    factors = (1.0 - qn * u) * (1.0 - qn / u) / (1.0 - qn) ** 2
    return complex((cmath.exp(z / 2) - cmath.exp(-z / 2)) * numpy.prod(factors))


def sigma_jet(z0, params, degree_cap=DEFAULT_DEGREE_CAP, tol=DEFAULT_TRUNCATION_TOL):
    """Jet univariado de σ em z0: o produto avaliado no jet z0 + ε."""
    z0 = complex(z0)
    count = truncation_order(params, math.exp(z0.real), tol)
    epsilon = Jet.variable(0, 1, degree_cap, base=z0)
    return _sigma_product(epsilon, params, count)


def sigma_taylor(z0, params, degree_cap=DEFAULT_DEGREE_CAP, tol=DEFAULT_TRUNCATION_TOL):
    """Coeficientes de Taylor de σ em z0 (para compose_analytic)."""
    return list(sigma_jet(z0, params, degree_cap, tol).coefficients)


def sigma_d(d, zvec, params, tol=DEFAULT_TRUNCATION_TOL):
    """σ_d(ζ) = ∏ σ(ζ_i); as coordenadas podem ser complexos ou jets."""
    zvec = list(zvec)
    if len(zvec) != d:
        raise ParameterError('sigma_d(%d) recebeu %d coordenadas' % (d, len(zvec)))
    value = 1.0
    for zeta in zvec:
        value = sigma(zeta, params, tol) * value
    return value


def sigma_d_spin_form(zvec, params, tol=DEFAULT_TRUNCATION_TOL):
    """
    σ_d(u) = (−1)^d (∏u_i)^{−1/2} ∏_i (1 − u_i) ∏_{n>=1} (1−qⁿu_i)(1−qⁿu_i⁻¹)/(1−qⁿ)²,
    a forma com caracteres de Spin(2d); avaliador independente de ``sigma_d``.
    """
    zvec = [complex(z) for z in zvec]
    d = len(zvec)
    value = (-1) ** d * cmath.exp(-sum(zvec) / 2)
    q = params.q
    for z in zvec:
        u = cmath.exp(z)
        count = truncation_order(params, abs(u), tol)
        n = numpy.arange(1, count + 1)
        qn = q ** n
        value *= (1.0 - u) * complex(numpy.prod((1.0 - qn * u) * (1.0 - qn / u) / (1.0 - qn) ** 2))
    return value


def orientation_series(params, degree_cap=DEFAULT_DEGREE_CAP, tol=DEFAULT_TRUNCATION_TOL):
    """Série característica x/σ(x) (jet univariado par, termo constante 1)."""
    taylor = sigma_jet(0.0, params, degree_cap + 1, tol).coefficients
    quotient = Jet(taylor[1:], 1, degree_cap)
    return jet_invert(quotient)


def hirzebruch_class(roots, params, tol=DEFAULT_TRUNCATION_TOL):
    """Σ(V) = ∏_j x_j/σ(x_j) nas raízes de Chern (jets nilpotentes)."""
    if not roots:
        return Jet.constant(1.0, 0)
    degree_cap = min(root.degree_cap for root in roots)
    series = orientation_series(params, degree_cap, tol)
    value = 1.0
    for root in roots:
        if abs(root.constant_term) > 0:
            raise ParameterError('Raízes de Chern devem ser nilpotentes')
        value = compose_analytic(series, root) * value
    return value


# -------- funções teta --------

def trivial_lattice():
    return LatticeWithForm('trivial', numpy.zeros((0, 0), dtype=int), [], WeylGroup([]))


class ThetaFunction(object):
    """
    Função teta de nível ξ: o reticulado carrega os dados (φ, Î) do nível,
    ``factor`` avalia θ(ζ) para coordenadas complexas ou jets e ``shift`` é a
    translação fixa acumulada (zero fora de ``translate``).
    """

    def __init__(self, lattice, descriptor, factor, shift=None):
        self.lattice = lattice
        self.descriptor = descriptor
        self._factor = factor
        if shift is None:
            shift = (0j,) * lattice.rank
        self.shift = tuple(complex(c) for c in shift)

    @property
    def rank(self):
        return self.lattice.rank

    @property
    def is_translated(self):
        return any(c != 0 for c in self.shift)

    def evaluate(self, zvec, params, tol=DEFAULT_TRUNCATION_TOL):
        zvec = list(zvec)
        if len(zvec) != self.rank:
            raise ParameterError('%s espera %d coordenadas, recebeu %d'
                                 % (self.descriptor, self.rank, len(zvec)))
        return self._factor(zvec, params, tol)

    # o mesmo avaliador serve para jets
    evaluate_jet = evaluate
    __call__ = evaluate

    def level_factor(self, m, zvec, params):
        """u^{−Î(m)} q^{−φ(m)}, incluindo e^{−Î(m)·c} de uma translação c."""
        m = self.lattice.check_member(m)
        adjoint = self.lattice.gram @ numpy.array(m, dtype=int)
        exponent = -sum(int(a) * (complex(zeta) + c)
                        for a, zeta, c in zip(adjoint, zvec, self.shift))
        return cmath.exp(exponent) * params.q_power(-self.lattice.quadratic_value(m))

    def __repr__(self):
        return 'ThetaFunction(%s)' % self.descriptor


def sigma_d_theta(d):
    """σ_d registrada como teta de nível c₂ em spin(2d)."""
    if d == 0:
        return product([])
    return ThetaFunction(spin(d), 'sigma_d(%d)' % d,
                         lambda zvec, params, tol: sigma_d(d, zvec, params, tol))


def product(thetas):
    """Produto externo: reticulado soma direta, dados de nível somados por bloco."""
    thetas = list(thetas)
    if not thetas:
        return ThetaFunction(trivial_lattice(), 'product()', lambda zvec, params, tol: 1.0)
    lattice = thetas[0].lattice
    for theta in thetas[1:]:
        lattice = lattice.direct_sum(theta.lattice)
    ranks = [theta.rank for theta in thetas]

    def factor(zvec, params, tol):
        # erro relativo do produto é a soma dos erros dos fatores
        tol = tol / len(thetas)
        value = 1.0
        start = 0
        for theta, rank in zip(thetas, ranks):
            value = theta.evaluate(zvec[start:start + rank], params, tol) * value
            start += rank
        return value

    shift = tuple(c for theta in thetas for c in theta.shift)
    descriptor = 'product(%s)' % ','.join(theta.descriptor for theta in thetas)
    return ThetaFunction(lattice, descriptor, factor, shift)


def power(theta, k):
    """θ^k, de nível k·ξ (forma escalada por k)."""
    if not isinstance(k, numbers.Integral) or k < 0:
        raise ParameterError('Potência deve ser inteira >= 0: %s' % (k,))
    if k == 1:
        return theta

    def factor(zvec, params, tol):
        return theta.evaluate(zvec, params, tol / max(k, 1)) ** k

    return ThetaFunction(theta.lattice.scaled(k), 'pow(%s,%d)' % (theta.descriptor, k),
                         factor, theta.shift)


def translate(theta, shift):
    """ζ ↦ θ(ζ + c) para um vetor fixo c; a lei de nível ganha o fator e^{−Î(m)·c}."""
    shift = [complex(c) for c in shift]
    if len(shift) != theta.rank:
        raise IncompatibleLattices('Translação de tamanho %d para teta de posto %d'
                                   % (len(shift), theta.rank))

    def factor(zvec, params, tol):
        return theta.evaluate([zeta + c for zeta, c in zip(zvec, shift)], params, tol)

    total = tuple(a + b for a, b in zip(theta.shift, shift))
    descriptor = 'translate(%s;%s)' % (theta.descriptor, ';'.join(repr(c) for c in shift))
    return ThetaFunction(theta.lattice, descriptor, factor, total)


def theta_combinators(kind, *args):
    """Ponto de entrada único: kind em {'sigma_d', 'product', 'power', 'translate'}."""
    builders = {
        'sigma_d': sigma_d_theta,
        'product': product,
        'power': power,
        'translate': translate,
    }
    try:
        builder = builders[kind]
    except KeyError:
        raise ParameterError('Combinador desconhecido: %s' % kind) from None
    return builder(*args)


def _split_arguments(text, separators=','):
    parts, depth, current = [], 0, []
    for char in text:
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        if char in separators and depth == 0:
            parts.append(''.join(current))
            current = []
        else:
            current.append(char)
    if current or parts:
        parts.append(''.join(current))
    return [part.strip() for part in parts]


def parse_theta(descriptor):
    """
    Interpreta descritores como "sigma_d(3)", "pow(sigma_d(2),2)",
    "product(sigma_d(2),sigma_d(1))", "sigma" (= sigma_d(1)), "1" (produto
    vazio) e "translate(sigma_d(1);0.1+0.2j)".
    """
    text = descriptor.strip().replace(' ', '')
    if text in ('1', 'one', 'product()'):
        return product([])
    if text == 'sigma':
        return sigma_d_theta(1)
    if '(' not in text or not text.endswith(')'):
        raise ParameterError('Descritor de teta inválido: %s' % descriptor)
    name, body = text.split('(', 1)
    body = body[:-1]
    try:
        if name == 'sigma_d':
            return sigma_d_theta(int(body))
        if name in ('pow', 'power'):
            inner, k = _split_arguments(body)
            return power(parse_theta(inner), int(k))
        if name in ('product', 'prod'):
            return product([parse_theta(part) for part in _split_arguments(body)])
        if name == 'translate':
            inner, *values = _split_arguments(body, ';')
            return translate(parse_theta(inner), [complex(v) for v in values])
    except ValueError as exc:
        raise ParameterError('Descritor de teta inválido: %s (%s)' % (descriptor, exc)) from None
    raise ParameterError('Descritor de teta desconhecido: %s' % descriptor)


def _relative(lhs, rhs):
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs))


def verify_level(theta, m, w, samples, params, tol=DEFAULT_TRUNCATION_TOL):
    """
    Maior resíduo relativo, sobre as amostras ζ, de

        |θ(ζ + 2πiτm) − u^{−Î(m)} q^{−φ(m)} θ(ζ)| / max(|θ(ζ + 2πiτm)|, |u^{−Î(m)} q^{−φ(m)} θ(ζ)|)

    e de |θ(w·ζ) − θ(ζ)| / max(|θ(w·ζ)|, |θ(ζ)|) (omitido para tetas transladadas).
    """
    m = as_vector(m)
    if not theta.lattice.is_member(m):
        raise NotInLattice(m, theta.lattice.name)
    worst = 0.0
    for zvec in samples:
        zvec = [complex(z) for z in zvec]
        base = theta.evaluate(zvec, params, tol)
        if abs(base) < ZERO_THRESHOLD:
            raise SampleAtZero('θ(%s) ≈ 0 em %s' % (zvec, theta.descriptor))
        shifted = [zeta + TWO_PI_I * params.tau * mi for zeta, mi in zip(zvec, m)]
        expected = theta.level_factor(m, zvec, params) * base
        worst = max(worst, _relative(theta.evaluate(shifted, params, tol), expected))
        if w is not None and not theta.is_translated:
            worst = max(worst, _relative(theta.evaluate(w.apply(zvec), params, tol), base))
    logger.debug('verify_level %s m=%s: resíduo %.3e', theta.descriptor, m, worst)
    return worst

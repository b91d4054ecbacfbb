# coding: utf-8

"""
    Jets: séries de potências multivariadas truncadas em grau total D, nas
    variáveis nilpotentes x_1..x_r e com coeficientes complexos.

    Modelam classes em H*(F; ℂ) de um complexo finito (as raízes de Chern
    x_j são variáveis do jet). O armazenamento é denso: um vetor numpy com um
    coeficiente por monômio de grau total <= D.
"""

import math
import numbers
import functools
import itertools

import numpy

from .errors import NotAUnit, ParameterError

DEFAULT_DEGREE_CAP = 4
DEFAULT_UNIT_TOL = 1e-12


@functools.lru_cache(maxsize=None)
def monomials(num_vars, degree_cap):
    """Multi-índices de grau total <= degree_cap, ordenados por grau."""
    result = []
    for degree in range(degree_cap + 1):
        for combo in itertools.combinations_with_replacement(range(num_vars), degree):
            exponents = [0] * num_vars
            for var in combo:
                exponents[var] += 1
            result.append(tuple(exponents))
    return tuple(result)


@functools.lru_cache(maxsize=None)
def monomial_index(num_vars, degree_cap):
    return {mono: pos for pos, mono in enumerate(monomials(num_vars, degree_cap))}


@functools.lru_cache(maxsize=None)
def _degrees(num_vars, degree_cap):
    return numpy.array([sum(mono) for mono in monomials(num_vars, degree_cap)], dtype=int)


@functools.lru_cache(maxsize=None)
def _multiplication_table(num_vars, degree_cap):
    """
    Tabela (i, j, k) com monômio_i · monômio_j = monômio_k e grau <= degree_cap.
    """
    monos = monomials(num_vars, degree_cap)
    index = monomial_index(num_vars, degree_cap)
    degrees = _degrees(num_vars, degree_cap)
    left, right, target = [], [], []
    for i, mono_i in enumerate(monos):
        for j, mono_j in enumerate(monos):
            if degrees[i] + degrees[j] > degree_cap:
                continue
            left.append(i)
            right.append(j)
            target.append(index[tuple(a + b for a, b in zip(mono_i, mono_j))])
    return (numpy.array(left, dtype=int),
            numpy.array(right, dtype=int),
            numpy.array(target, dtype=int))


@functools.lru_cache(maxsize=None)
def _embedding(num_vars, degree_cap, new_vars, new_cap):
    """Posições dos monômios de (num_vars, degree_cap) em (new_vars, new_cap)."""
    index = monomial_index(new_vars, new_cap)
    source, target = [], []
    for pos, mono in enumerate(monomials(num_vars, degree_cap)):
        if sum(mono) > new_cap:
            continue
        source.append(pos)
        target.append(index[mono + (0,) * (new_vars - num_vars)])
    return numpy.array(source, dtype=int), numpy.array(target, dtype=int)


class Jet(object):
    """
    Série truncada com ``num_vars`` variáveis e grau máximo ``degree_cap``.

    Os valores são imutáveis: as operações sempre devolvem um novo Jet. A
    aritmética entre jets usa max(num_vars) e min(degree_cap) dos operandos.
    """

    __slots__ = ('num_vars', 'degree_cap', '_coefficients')
    __array_ufunc__ = None

    def __init__(self, coefficients, num_vars, degree_cap=DEFAULT_DEGREE_CAP):
        if num_vars < 0 or degree_cap < 0:
            raise ParameterError('num_vars e degree_cap devem ser >= 0')
        size = len(monomials(num_vars, degree_cap))
        coefficients = numpy.array(coefficients, dtype=complex)
        if coefficients.shape != (size,):
            raise ParameterError(
                'Esperados %d coeficientes para (r=%d, D=%d), recebidos %s'
                % (size, num_vars, degree_cap, coefficients.shape))
        coefficients.setflags(write=False)
        self.num_vars = num_vars
        self.degree_cap = degree_cap
        self._coefficients = coefficients

    # -------- construtores --------

    @classmethod
    def constant(cls, value, num_vars=0, degree_cap=DEFAULT_DEGREE_CAP):
        coefficients = numpy.zeros(len(monomials(num_vars, degree_cap)), dtype=complex)
        coefficients[0] = value
        return cls(coefficients, num_vars, degree_cap)

    @classmethod
    def variable(cls, position, num_vars, degree_cap=DEFAULT_DEGREE_CAP, base=0.0):
        """O jet ``base + x_position`` (posição a partir de 0)."""
        if not 0 <= position < num_vars:
            raise ParameterError('Variável x_%d fora de 0..%d' % (position, num_vars - 1))
        coefficients = numpy.zeros(len(monomials(num_vars, degree_cap)), dtype=complex)
        coefficients[0] = base
        if degree_cap >= 1:
            exponents = [0] * num_vars
            exponents[position] = 1
            coefficients[monomial_index(num_vars, degree_cap)[tuple(exponents)]] = 1.0
        return cls(coefficients, num_vars, degree_cap)

    @classmethod
    def from_terms(cls, terms, num_vars, degree_cap=DEFAULT_DEGREE_CAP):
        """Constrói a partir de {multi-índice: coeficiente}; termos de grau > D são descartados."""
        index = monomial_index(num_vars, degree_cap)
        coefficients = numpy.zeros(len(index), dtype=complex)
        for mono, value in terms.items():
            mono = tuple(mono)
            if len(mono) != num_vars:
                raise ParameterError('Multi-índice %s com tamanho errado' % (mono,))
            if sum(mono) <= degree_cap:
                coefficients[index[mono]] += value
        return cls(coefficients, num_vars, degree_cap)

    @classmethod
    def zero(cls, num_vars=0, degree_cap=DEFAULT_DEGREE_CAP):
        return cls.constant(0.0, num_vars, degree_cap)

    # -------- acesso --------

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def constant_term(self):
        return complex(self._coefficients[0])

    def coefficient(self, mono):
        mono = tuple(mono)
        if sum(mono) > self.degree_cap:
            return 0j
        return complex(self._coefficients[monomial_index(self.num_vars, self.degree_cap)[mono]])

    def terms(self, tol=0.0):
        """Dicionário {multi-índice: coeficiente} dos termos com |c| > tol."""
        return {mono: complex(value)
                for mono, value in zip(monomials(self.num_vars, self.degree_cap), self._coefficients)
                if abs(value) > tol}

    def homogeneous_part(self, degree):
        mask = _degrees(self.num_vars, self.degree_cap) == degree
        return Jet(numpy.where(mask, self._coefficients, 0), self.num_vars, self.degree_cap)

    def nilpotent_part(self):
        coefficients = numpy.array(self._coefficients)
        coefficients[0] = 0
        return Jet(coefficients, self.num_vars, self.degree_cap)

    def max_abs(self):
        return float(numpy.max(numpy.abs(self._coefficients)))

    # -------- compatibilidade --------

    def extend(self, num_vars, degree_cap):
        """Reindexa em (num_vars, degree_cap), acrescentando variáveis e/ou truncando."""
        if num_vars < self.num_vars:
            raise ParameterError('Não é possível remover variáveis de um jet')
        if (num_vars, degree_cap) == (self.num_vars, self.degree_cap):
            return self
        source, target = _embedding(self.num_vars, self.degree_cap, num_vars, degree_cap)
        coefficients = numpy.zeros(len(monomials(num_vars, degree_cap)), dtype=complex)
        coefficients[target] = self._coefficients[source]
        return Jet(coefficients, num_vars, degree_cap)

    def _coerce(self, other):
        if isinstance(other, Jet):
            num_vars = max(self.num_vars, other.num_vars)
            degree_cap = min(self.degree_cap, other.degree_cap)
            return self.extend(num_vars, degree_cap), other.extend(num_vars, degree_cap)
        if isinstance(other, numbers.Number):
            return self, Jet.constant(other, self.num_vars, self.degree_cap)
        return None, None

    # -------- aritmética --------

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Jet(a._coefficients + b._coefficients, a.num_vars, a.degree_cap)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self._coefficients, self.num_vars, self.degree_cap)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Jet(a._coefficients - b._coefficients, a.num_vars, a.degree_cap)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return Jet(self._coefficients * other, self.num_vars, self.degree_cap)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        left, right, target = _multiplication_table(a.num_vars, a.degree_cap)
        products = a._coefficients[left] * b._coefficients[right]
        size = len(a._coefficients)
        coefficients = (numpy.bincount(target, weights=products.real, minlength=size)
                        + 1j * numpy.bincount(target, weights=products.imag, minlength=size))
        return Jet(coefficients, a.num_vars, a.degree_cap)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            return Jet(self._coefficients / other, self.num_vars, self.degree_cap)
        if isinstance(other, Jet):
            return self * jet_invert(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, numbers.Number):
            return jet_invert(self) * other
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral):
            return NotImplemented
        if exponent < 0:
            return jet_invert(self) ** (-exponent)
        result = Jet.constant(1.0, self.num_vars, self.degree_cap)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exp(self):
        c = self.constant_term
        value = numpy.exp(c)
        return compose_analytic(
            [value / math.factorial(k) for k in range(self.degree_cap + 1)], self)

    def substitute(self, images):
        """
        Substitui x_i por ``images[i]`` (jets nilpotentes); é o pullback de jets
        por uma aplicação de bases.
        """
        if len(images) != self.num_vars:
            raise ParameterError('Esperadas %d imagens, recebidas %d' % (self.num_vars, len(images)))
        for image in images:
            if abs(image.constant_term) > 0:
                raise ParameterError('As imagens de uma substituição devem ser nilpotentes')
        if not images:
            return self
        num_vars = max(image.num_vars for image in images)
        degree_cap = min(min(image.degree_cap for image in images), self.degree_cap)
        images = [image.extend(num_vars, degree_cap) for image in images]
        powers = [[Jet.constant(1.0, num_vars, degree_cap)] for _ in images]
        for var, image in enumerate(images):
            for _ in range(degree_cap):
                powers[var].append(powers[var][-1] * image)
        result = Jet.zero(num_vars, degree_cap)
        for mono, value in self.terms().items():
            if sum(mono) > degree_cap:
                continue
            term = Jet.constant(value, num_vars, degree_cap)
            for var, exponent in enumerate(mono):
                if exponent:
                    term = term * powers[var][exponent]
            result = result + term
        return result

    # -------- comparação --------

    def max_abs_diff(self, other):
        a, b = self._coerce(other)
        return float(numpy.max(numpy.abs(a._coefficients - b._coefficients)))

    def relative_residual(self, other):
        """max|a − b| / max|b| (coeficiente a coeficiente)."""
        a, b = self._coerce(other)
        scale = max(float(numpy.max(numpy.abs(b._coefficients))), numpy.finfo(float).tiny)
        return float(numpy.max(numpy.abs(a._coefficients - b._coefficients))) / scale

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        a, b = self._coerce(other)
        return bool(numpy.array_equal(a._coefficients, b._coefficients))

    def __hash__(self):
        return hash((self.num_vars, self.degree_cap, self._coefficients.tobytes()))

    def __repr__(self):
        terms = self.terms(tol=0.0)
        if not terms:
            return 'Jet(0; r=%d, D=%d)' % (self.num_vars, self.degree_cap)
        parts = []
        for mono, value in terms.items():
            name = '*'.join('x%d^%d' % (var + 1, e) if e > 1 else 'x%d' % (var + 1)
                            for var, e in enumerate(mono) if e) or '1'
            parts.append('(%s)%s' % (value, '' if name == '1' else '*' + name))
        return 'Jet(%s; r=%d, D=%d)' % (' + '.join(parts), self.num_vars, self.degree_cap)


def as_jet(value, num_vars=0, degree_cap=DEFAULT_DEGREE_CAP):
    if isinstance(value, Jet):
        return value
    return Jet.constant(value, num_vars, degree_cap)


def jet_arith(a, b, op):
    """Aritmética truncada: ``op`` em {'add', 'sub', 'mul'}."""
    operations = {
        'add': lambda x, y: x + y,
        'sub': lambda x, y: x - y,
        'mul': lambda x, y: x * y,
    }
    try:
        return operations[op](a, b)
    except KeyError:
        raise ParameterError('Operação desconhecida: %s' % op) from None


def jet_invert(a, unit_tol=DEFAULT_UNIT_TOL):
    """
    Inverso de ``a`` na ordem de truncamento, pela série geométrica
    a⁻¹ = a₀⁻¹ Σ_k (−n)^k, com n = (a − a₀)/a₀ nilpotente.
    """
    a0 = a.constant_term
    if abs(a0) <= unit_tol:
        raise NotAUnit(a0, unit_tol)
    nilpotent = a.nilpotent_part() / a0
    result = Jet.constant(1.0, a.num_vars, a.degree_cap)
    term = result
    for _ in range(a.degree_cap):
        term = term * (-nilpotent)
        result = result + term
    return result / a0


def compose_analytic(f_taylor, a):
    """
    f(a) = Σ_k f_taylor[k]·(a − c)^k truncado em D, sendo c o termo constante de
    ``a`` e ``f_taylor`` os coeficientes de Taylor de f em c.
    """
    if isinstance(f_taylor, Jet):
        f_taylor = f_taylor.coefficients
    f_taylor = list(f_taylor)
    if len(f_taylor) < a.degree_cap + 1:
        raise ParameterError(
            'São necessários %d coeficientes de Taylor, recebidos %d'
            % (a.degree_cap + 1, len(f_taylor)))
    nilpotent = a.nilpotent_part()
    # Horner
    result = Jet.constant(f_taylor[a.degree_cap], a.num_vars, a.degree_cap)
    for k in range(a.degree_cap - 1, -1, -1):
        result = result * nilpotent + f_taylor[k]
    return result


def random_jet(rng, num_vars, degree_cap=DEFAULT_DEGREE_CAP, scale=1.0, constant=None):
    """Jet com coeficientes gaussianos complexos (para testes e suítes)."""
    size = len(monomials(num_vars, degree_cap))
    coefficients = scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size))
    if constant is not None:
        coefficients[0] = constant
    return Jet(coefficients, num_vars, degree_cap)

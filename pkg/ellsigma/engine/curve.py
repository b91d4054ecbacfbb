# coding: utf-8

"""
    Aritmética exata e numérica na curva elíptica C = ℂ/Λ, com
    Λ = 2πiℤ + 2πiτℤ.

    Os pontos de torsão são guardados com racionais exatos (s, t), que
    representam a classe de 2πi·s + 2πiτ·t. As potências racionais seguem
    sempre a convenção u^r = e^{rz}, q^r = e^{2πirτ}, sem escolha de ramo.
"""

import cmath
import math
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy

from .errors import ParameterError

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * math.pi

# distância mínima a Λ na amostragem de z
LATTICE_REJECTION_RADIUS = 1e-3


def _frac(value):
    """Parte fracionária racional em [0, 1)."""
    value = Fraction(value)
    return value - math.floor(value)


def _lcm(a, b):
    return a * b // math.gcd(a, b)


@dataclass(frozen=True)
class CurveParams:
    """Parâmetro τ no semiplano superior; ``q`` = e^{2πiτ}."""

    tau: complex

    def __post_init__(self):
        tau = complex(self.tau)
        if not tau.imag > 0:
            raise ParameterError(
                'Im(tau) deve ser positivo, recebido tau=%s' % tau)
        object.__setattr__(self, 'tau', tau)

    @property
    def q(self):
        return cmath.exp(TWO_PI_I * self.tau)

    @property
    def periods(self):
        return (TWO_PI_I, TWO_PI_I * self.tau)

    def q_power(self, r):
        """q^r = e^{2πirτ} para r racional (ou real)."""
        return cmath.exp(TWO_PI_I * float(r) * self.tau)

    def lattice_point(self, j, k):
        """O vetor 2πi·j + 2πiτ·k de Λ."""
        return TWO_PI_I * j + TWO_PI_I * self.tau * k


@dataclass(frozen=True)
class CurvePoint:
    """
    Ponto de torsão de C, classe de 2πi·s + 2πiτ·t com s, t racionais em [0, 1).
    """

    s: Fraction = Fraction(0)
    t: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 's', _frac(self.s))
        object.__setattr__(self, 't', _frac(self.t))

    @property
    def is_zero(self):
        return self.s == 0 and self.t == 0

    def scale(self, n):
        return CurvePoint(self.s * n, self.t * n)

    def __add__(self, other):
        return CurvePoint(self.s + other.s, self.t + other.t)

    def __neg__(self):
        return CurvePoint(-self.s, -self.t)

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return '%s,%s' % (self.s, self.t)


def order(a):
    """Menor n >= 1 com n·a = 0 em C (aritmética racional exata)."""
    return _lcm(a.s.denominator, a.t.denominator)


def is_killed_by(a, m):
    """True se m·a = 0 em C, ou seja, se order(a) divide m."""
    return m % order(a) == 0


def points_of_order(n):
    """Todos os pontos de ordem exatamente n."""
    points = []
    for p in range(n):
        for r in range(n):
            if math.gcd(math.gcd(p, r), n) == 1:
                points.append(CurvePoint(Fraction(p, n), Fraction(r, n)))
    return points


def torsion_points(bound):
    """Todos os pontos de torsão de ordem <= bound, ordenados por ordem."""
    points = []
    for n in range(1, bound + 1):
        points.extend(points_of_order(n))
    return points


@dataclass(frozen=True)
class LiftedPoint:
    """
    Um levantamento ā ∈ ℂ de um ponto de torsão ``base``:
    ā = 2πi(s + shift_s) + 2πiτ(t + shift_t), com nā = 2πiℓ + 2πiτk.
    """

    base: CurvePoint
    shift_s: int
    shift_t: int
    params: CurveParams = field(repr=False)

    @property
    def n(self):
        return order(self.base)

    @property
    def ell(self):
        value = self.n * (self.base.s + self.shift_s)
        assert value.denominator == 1
        return int(value)

    @property
    def k(self):
        value = self.n * (self.base.t + self.shift_t)
        assert value.denominator == 1
        return int(value)

    @property
    def abar(self):
        return self.params.lattice_point(float(self.base.s + self.shift_s),
                                         float(self.base.t + self.shift_t))

    @property
    def alpha(self):
        return cmath.exp(self.abar)

    def alpha_power(self, r):
        """α^r = e^{r·ā}."""
        return cmath.exp(float(r) * self.abar)

    def delta_to(self, other):
        """δ com β = α·q^δ, sendo β o outro levantamento do mesmo ponto."""
        if other.base != self.base:
            raise ParameterError(
                'Levantamentos de pontos diferentes: %s e %s' % (self.base, other.base))
        return other.shift_t - self.shift_t


def reduce_mod_lattice(z, params):
    """
    Retorna (s, t) em [0, 1) com z − 2πi·s − 2πiτ·t ∈ Λ, resolvendo o sistema
    real 2x2 na base (2πi, 2πiτ).
    """
    if not params.tau.imag > 0:
        raise ParameterError('Base degenerada: Im(tau) <= 0')
    z = complex(z)
    omega1, omega2 = params.periods
    basis = numpy.array([[omega1.real, omega2.real],
                         [omega1.imag, omega2.imag]])
    s, t = numpy.linalg.solve(basis, numpy.array([z.real, z.imag]))
    return _unit_interval(s), _unit_interval(t)


def _unit_interval(x, snap=1e-12):
    x = float(x) - math.floor(float(x))
    if x < snap or 1.0 - x < snap:
        return 0.0
    return x


def distance_to_lattice(z, params):
    """Distância de z ao ponto de Λ mais próximo (busca nas células vizinhas)."""
    s, t = reduce_mod_lattice(z, params)
    reduced = params.lattice_point(s, t)
    return min(abs(reduced - params.lattice_point(j, k))
               for j in (-1, 0, 1, 2) for k in (-1, 0, 1, 2))


def lift(a, shift_s, shift_t, params):
    """Levantamento de ``a`` deslocado por (shift_s, shift_t) ∈ ℤ²."""
    return LiftedPoint(a, int(shift_s), int(shift_t), params)


def weil_pairing(a, lifted, params):
    """
    w(a, q^{1/n}) = α^{-1} q^{k/n}: uma raiz n-ésima da unidade que não depende
    do levantamento escolhido.
    """
    if lifted.base != a:
        raise ParameterError('O levantamento não está sobre o ponto %s' % a)
    n = order(a)
    return cmath.exp(-lifted.abar) * params.q_power(Fraction(lifted.k, n))


def sample_z(rng, params, scale=None):
    """
    Amostra z com |Re z|, |Im z| <= π·min(1, Im τ), rejeitando pontos a
    distância < 1e-3 de Λ.
    """
    if scale is None:
        scale = math.pi * min(1.0, params.tau.imag)
    while True:
        z = complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
        if distance_to_lattice(z, params) >= LATTICE_REJECTION_RADIUS:
            return z
        logger.debug('amostra %s próxima de Λ, reamostrando', z)


def sample_annulus(rng, inner=0.05, outer=0.2):
    """Amostra z no anel inner <= |z| <= outer em torno de 0."""
    radius = rng.uniform(inner, outer)
    angle = rng.uniform(0.0, 2.0 * math.pi)
    return cmath.rect(radius, angle)

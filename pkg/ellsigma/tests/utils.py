# coding: utf-8
from fractions import Fraction

import numpy

from ellsigma.engine.curve import CurveParams, CurvePoint, lift
from ellsigma.engine.jets import Jet
from ellsigma.engine.classes import ToyBundle
from ellsigma.engine.thom import VirtualPair, Thm8Instance
from ellsigma.engine.theta import sigma_d_theta
from ellsigma.engine.controllers import RunConfig
from ellsigma.engine.utils import toy_data


def makeOneRng(seed=0):  # noqa
    return numpy.random.default_rng(seed)


def makeOneParams(tau=1j):  # noqa
    return CurveParams(tau)


def makeOneRoots(rank, num_vars=None, degree_cap=4):  # noqa
    """
    Retorna as raízes genéricas x_1..x_rank (variáveis do jet).
    ``num_vars`` >= rank acrescenta variáveis livres.
    """
    num_vars = rank if num_vars is None else num_vars
    return tuple(Jet.variable(i, num_vars, degree_cap) for i in range(rank))


def makeOneLift(s='0', t='0', shift_s=0, shift_t=0, params=None):  # noqa
    """Retorna o levantamento de CurvePoint(s, t) com os deslocamentos dados."""
    params = params or makeOneParams()
    return lift(CurvePoint(Fraction(s), Fraction(t)), shift_s, shift_t, params)


def makeOneBundle(attrib=None):  # noqa
    """
    Retorna um ``ToyBundle`` de spin(2d) com os atributos ``m`` (default (2, 0)),
    ``roots`` (default: raízes genéricas) e ``orientation_signs``.
    """
    attrib = attrib or {}
    m = tuple(attrib.get('m', (2, 0)))
    roots = attrib.get('roots', makeOneRoots(len(m), attrib.get('num_vars'),
                                             attrib.get('degree_cap', 4)))
    return ToyBundle.spin(m, roots, attrib.get('orientation_signs', {}))


def makeOnePair(seed=0, d=2, kind='weyl', padding=0):  # noqa
    """Retorna um VirtualPair com c₂ iguais (gerador aleatório com a semente dada)."""
    return toy_data.random_matched_pair(makeOneRng(seed), d, d, 4, 2, padding, kind)


def makeOneThm8Instance(attrib=None):  # noqa
    """
    Retorna um ``Thm8Instance``; sem ``attrib`` usa V = V′ = bundle (2, 0) e θ′ = σ_2.
    """
    attrib = attrib or {}
    V = attrib.get('V', makeOneBundle())
    Vprime = attrib.get('Vprime', V)
    theta_prime = attrib.get('theta_prime', sigma_d_theta(V.rank))
    return Thm8Instance(V, Vprime, theta_prime)


def makeOneRunConfig(attrib=None):  # noqa
    attrib = dict(attrib or {})
    attrib.setdefault('trials', 3)
    return RunConfig(**attrib)

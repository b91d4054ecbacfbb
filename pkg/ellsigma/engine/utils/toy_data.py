# coding: utf-8

"""
    Geradores aleatórios de dados de ponto fixo: raízes de Chern, fibrados
    spin, pares virtuais com c₂ igual e instâncias (V, V′, θ′).

    Todos recebem um ``numpy.random.Generator``; as suítes criam um por
    tentativa a partir de (seed, tentativa).
"""

import logging
from fractions import Fraction

import numpy

from ..curve import CurvePoint, LiftedPoint, order, torsion_points
from ..errors import ParameterError
from ..jets import Jet, DEFAULT_DEGREE_CAP
from ..lattices import spin
from ..classes import ToyBundle
from ..theta import sigma_d_theta, power
from ..thom import VirtualPair, Thm8Instance, special_points, is_special

logger = logging.getLogger(__name__)

# reflexão racional ortogonal de ℤ³ ⊗ ℚ: O·m = m − 2(m·v)/3·v, v = (1, −1, −1)
REFLECTION = numpy.array([[1, 2, 2],
                          [2, 1, -2],
                          [2, -2, 1]], dtype=int)
REFLECTION_DENOMINATOR = 3

MAX_ATTEMPTS = 1000


def random_roots(rng, count, num_vars, degree_cap=DEFAULT_DEGREE_CAP, scale=0.5):
    """``count`` raízes nilpotentes, combinações lineares reais das variáveis."""
    roots = []
    for _ in range(count):
        terms = {}
        for var in range(num_vars):
            exponents = [0] * num_vars
            exponents[var] = 1
            terms[tuple(exponents)] = float(rng.normal(0.0, scale))
        roots.append(Jet.from_terms(terms, num_vars, degree_cap))
    return roots


def random_orientations(rng, bundle):
    """Sinais aleatórios para cada sub-fibrado fixo próprio (chaves canônicas)."""
    return {key: int(rng.choice((1, -1))) for key in bundle.canonical_keys() if key != 1}


def random_spin_bundle(rng, d, num_vars=None, degree_cap=DEFAULT_DEGREE_CAP, bound=3,
                       orientations=True, roots=None):
    """Fibrado de spin(2d) com rotações em [−bound, bound] (soma par)."""
    lattice = spin(d)
    m = lattice.random_member(rng, bound)
    if roots is None:
        roots = random_roots(rng, d, d if num_vars is None else num_vars, degree_cap)
    bundle = ToyBundle(lattice, m, tuple(roots))
    if orientations:
        bundle = bundle.with_orientations(random_orientations(rng, bundle))
    return bundle


def reflect(m, roots):
    """Aplica a reflexão racional às três primeiras coordenadas de (m, x)."""
    head = numpy.array(m[:3], dtype=int)
    image = REFLECTION @ head
    if numpy.any(image % REFLECTION_DENOMINATOR):
        raise ParameterError('A reflexão não preserva ℤ³ em %s' % (tuple(m),))
    new_m = tuple(int(v) for v in image // REFLECTION_DENOMINATOR) + tuple(m[3:])
    new_roots = []
    for row in REFLECTION:
        root = roots[0] * 0.0
        for coefficient, x in zip(row, roots[:3]):
            root = root + x * (float(coefficient) / REFLECTION_DENOMINATOR)
        new_roots.append(root)
    return new_m, tuple(new_roots) + tuple(roots[3:])


def _reflectable_rotation(rng, d, bound):
    for _ in range(MAX_ATTEMPTS):
        m = [int(v) for v in rng.integers(-bound, bound + 1, size=d)]
        if (m[0] - m[1] - m[2]) % 3 or m[0] - m[1] - m[2] == 0:
            continue
        if sum(m) % 2:
            if d < 4:
                continue
            m[3] += -1 if m[3] > 0 else 1
        return tuple(m)
    raise ParameterError('Não foi possível amostrar rotação refletível para d=%d' % d)


def random_matched_pair(rng, d, num_vars=None, degree_cap=DEFAULT_DEGREE_CAP, bound=3,
                        padding=0, kind='weyl'):
    """
    Par (V₀, V₁) com c₂ de Borel iguais por construção.

    kind='weyl': V₁ é V₀ movido por um elemento aleatório de W (orientações novas).
    kind='reflection': V₁ aplica a reflexão racional às três primeiras
    coordenadas (d >= 3), o que muda o conjunto de pontos especiais.
    ``padding`` acrescenta um mesmo bloco aleatório de posto ``padding`` aos dois.
    """
    num_vars = d if num_vars is None else num_vars
    if kind == 'weyl':
        V0 = random_spin_bundle(rng, d, num_vars, degree_cap, bound)
        V1 = V0.weyl_move(spin(d).weyl.random_element(rng))
    elif kind == 'reflection':
        if d < 3:
            raise ParameterError('A reflexão requer d >= 3, recebido d=%d' % d)
        m = _reflectable_rotation(rng, d, bound)
        roots = random_roots(rng, d, num_vars, degree_cap)
        V0 = ToyBundle(spin(d), m, tuple(roots))
        V0 = V0.with_orientations(random_orientations(rng, V0))
        m1, roots1 = reflect(m, roots)
        V1 = ToyBundle(spin(d), m1, roots1)
    else:
        raise ParameterError('Tipo de par desconhecido: %s' % kind)
    V1 = V1.with_orientations(random_orientations(rng, V1))
    pair = VirtualPair(V0, V1)
    if padding:
        pair = pair.stabilize(random_spin_bundle(rng, padding, num_vars, degree_cap, bound))
    return pair


def random_thm8_instance(rng, d, num_vars=None, degree_cap=DEFAULT_DEGREE_CAP, bound=3, k=1):
    """
    (V, V′, θ′) com c₂(V) = ξ′(V′).

    k = 1: θ′ = σ_d e V′ é V movido por W.
    k >= 2: θ′ = pow(σ_d, k), V = k cópias de um bloco (m″, x″) e V′ é o
    bloco movido por W; c₂(V) = k·c₂(V′) = ξ′(V′).
    """
    num_vars = d if num_vars is None else num_vars
    block = random_spin_bundle(rng, d, num_vars, degree_cap, bound)
    theta_prime = sigma_d_theta(d) if k == 1 else power(sigma_d_theta(d), k)
    V = block
    for _ in range(k - 1):
        V = V.direct_sum(block)
    V = V.with_orientations(random_orientations(rng, V))
    Vprime = block.weyl_move(spin(d).weyl.random_element(rng))
    return Thm8Instance(V, Vprime, theta_prime)


def centered_lift(a, params, shift_s=0, shift_t=0):
    """Levantamento com s, t em [−1/2, 1/2), deslocado por (shift_s, shift_t)."""
    base_s = -1 if a.s >= Fraction(1, 2) else 0
    base_t = -1 if a.t >= Fraction(1, 2) else 0
    return LiftedPoint(a, base_s + shift_s, base_t + shift_t, params)


def random_point(rng, bound, exact_order=None):
    """Ponto de torsão aleatório de ordem <= bound (ou exatamente ``exact_order``)."""
    points = [a for a in torsion_points(bound)
              if exact_order is None or order(a) == exact_order]
    return points[int(rng.integers(len(points)))]


def random_special_lift(rng, subject_bundles, bound, params):
    """Levantamento centrado de um ponto especial aleatório dos fibrados dados."""
    specials = set()
    for bundle in subject_bundles:
        specials.update(special_points(bundle, bound))
    specials = sorted(specials, key=lambda a: (a.s.denominator, a.t.denominator, a.s, a.t))
    return centered_lift(specials[int(rng.integers(len(specials)))], params)


def random_ordinary_point(rng, bundle, bound):
    """Ponto de torsão de ordem <= bound que não é especial, ou None."""
    points = [a for a in torsion_points(bound) if not is_special(bundle, a)]
    if not points:
        return None
    return points[int(rng.integers(len(points)))]


def random_images(rng, num_vars, degree_cap=DEFAULT_DEGREE_CAP, targets=None, scale=0.7):
    """Imagens nilpotentes lineares x_i ↦ Σ c_ij y_j de uma aplicação de bases."""
    targets = num_vars if targets is None else targets
    return random_roots(rng, num_vars, targets, degree_cap, scale)


def zero_point():
    return CurvePoint(0, 0)

# coding: utf-8

"""
    Tentativas das suítes de verificação.

    Cada tentativa recebe um ``numpy.random.Generator`` próprio e a RunConfig,
    e retorna o maior resíduo (float) das identidades que verifica. Amostras
    degeneradas (zero da função, denominador quase nulo) são reamostradas com
    o mesmo gerador, o que mantém o resultado determinístico.
"""

import cmath
import logging
from collections import OrderedDict, namedtuple
from fractions import Fraction

from .curve import (TWO_PI_I, order, distance_to_lattice, weil_pairing, sample_z, sample_annulus)
from .errors import EllSigmaError, SampleAtZero, DivisionNearZero, UnknownSuite
from .lattices import (spin, phi, pairing, ihat, phi_mod, weyl_apply,
                       stabilizer_sample, borel_c2)
from .theta import (ZERO_THRESHOLD, sigma, sigma_jet, sigma_d, sigma_d_spin_form,
                    sigma_d_theta, power, product, verify_level)
from .classes import (F_eval, F_lift_transform, F_lift_residual, R_eval,
                      euler_factorization_check)
from .thom import (cocycle_check, gluing_check, gamma_lift_check,
                   lambda_invariance_check, unit_modulus, law_checks, transfer_check,
                   sample_overlap, bundles_of)
from .utils.toy_data import (random_roots, random_spin_bundle, random_matched_pair,
                             random_thm8_instance, centered_lift, random_point,
                             random_special_lift, random_ordinary_point, random_images,
                             zero_point)

logger = logging.getLogger(__name__)

# tentativas de reamostragem dentro de uma mesma tentativa
MAX_RESAMPLES = 50

# |γ_a| e |R| abaixo disto contam como falha da propriedade de unidade
UNIT_FLOOR = 1e-6

# rotações das seções γ ficam em [-2, 2]
GAMMA_BOUND = 2

# distância mínima de m_j·w a Λ na amostragem de pontos ordinários
ORDINARY_MARGIN = 5e-2

SAMPLES_PER_TRIAL = 3

Suite = namedtuple('Suite', ['name', 'description', 'trial'])


class Resample(EllSigmaError):
    """A amostra não serve para a tentativa; sortear outra."""


# -------- amostragem --------

def _ordinary_w(rng, bundles, params, margin=ORDINARY_MARGIN):
    """w com m_j·w longe de Λ para todo m_j ≠ 0 dos fibrados."""
    for _ in range(MAX_RESAMPLES):
        w = sample_z(rng, params)
        if all(distance_to_lattice(mj * w, params) >= margin
               for bundle in bundles for mj in bundle.m if mj):
            return w
    raise Resample('Nenhum ponto ordinário w encontrado')


def _other_lift(rng, lift, params):
    return centered_lift(lift.base, params,
                         shift_s=int(rng.integers(-1, 2)), shift_t=int(rng.integers(-1, 2)))


def _rel(value, reference):
    return abs(value - reference) / max(abs(reference), ZERO_THRESHOLD)


# -------- tentativas --------

def check_sigma_laws(rng, config):
    """Imparidade, σ′(0) = 1, quasi-periodicidade e a forma de Spin(2d)."""
    params, tol = config.params, config.sigma_truncation_tol
    z = sample_z(rng, params)
    base = sigma(z, params, tol)
    if abs(base) < ZERO_THRESHOLD:
        raise SampleAtZero('σ(%s) ≈ 0' % z)
    worst = abs(sigma(-z, params, tol) + base) / abs(base)
    worst = max(worst, abs(sigma_jet(0.0, params, 1, tol).coefficients[1] - 1.0))
    n = int(rng.integers(-3, 4))
    sign = -1.0 if n % 2 else 1.0
    expected = sign * cmath.exp(-n * z) * params.q_power(Fraction(-n * n, 2)) * base
    worst = max(worst, _rel(sigma(z + TWO_PI_I * params.tau * n, params, tol), expected))
    zvec = [sample_z(rng, params, scale=1.0) for _ in range(config.spin_rank)]
    reference = sigma_d(config.spin_rank, zvec, params, tol)
    if abs(reference) < ZERO_THRESHOLD:
        raise SampleAtZero('σ_d(%s) ≈ 0' % zvec)
    worst = max(worst, _rel(sigma_d_spin_form(zvec, params, tol), reference))
    return worst


def check_theta_level(rng, config):
    """Lei de nível e invariância de Weyl de σ_d, de potências e de produtos."""
    params, d = config.params, config.spin_rank
    choice = int(rng.integers(3))
    if choice == 0:
        theta = sigma_d_theta(d)
    elif choice == 1:
        theta = power(sigma_d_theta(d), 2)
    else:
        theta = product([sigma_d_theta(d), sigma_d_theta(1)])
    m = theta.lattice.random_member(rng, 2)
    w = theta.lattice.weyl.random_element(rng)
    samples = [[sample_z(rng, params, scale=1.0) for _ in range(theta.rank)]
               for _ in range(SAMPLES_PER_TRIAL)]
    return verify_level(theta, m, w, samples, params, config.sigma_truncation_tol)


def check_lattice_identities(rng, config):
    """
    Identidades inteiras de φ, I e Î (contagem de falhas, exata) e a
    invariância de Weyl da classe c₂ de Borel (resíduo em float).
    """
    d = min(config.spin_rank + int(rng.integers(0, 2)), 4)
    L = spin(d)
    a, b, delta = (L.random_member(rng, 4) for _ in range(3))
    n = int(rng.integers(1, config.torsion_bound + 1))
    w = L.weyl.random_element(rng)
    wa, wb = weyl_apply(w, a), weyl_apply(w, b)
    total = tuple(x + y for x, y in zip(a, b))
    lifted = tuple(x + n * y for x, y in zip(a, delta))
    failures = [
        phi(L, total) != phi(L, a) + pairing(L, a, b) + phi(L, b),
        pairing(L, a, b) != pairing(L, b, a),
        phi(L, wa) != phi(L, a),
        pairing(L, wa, wb) != pairing(L, a, b),
        sum(x * y for x, y in zip(ihat(L, a), b)) != pairing(L, a, b),
        phi_mod(L, lifted, n) != phi_mod(L, a, n),
        2 * phi(L, a) != pairing(L, a, a),
    ]
    roots = random_roots(rng, d, d, config.degree_cap)
    moved = borel_c2(L, wa, w.apply(roots))
    residual = moved.max_abs_diff(borel_c2(L, a, roots))
    return float(sum(failures)) + residual


def check_F_lemmas(rng, config):
    """
    F não depende do representante m̄ + nΔ, é invariante por W(m) e muda de
    levantamento pelo fator previsto pela pairing de Weil.
    """
    params, d, tol = config.params, config.spin_rank, config.sigma_truncation_tol
    L = spin(d)
    theta = sigma_d_theta(d)
    a = random_point(rng, config.torsion_bound)
    lift = centered_lift(a, params)
    n = lift.n
    mbar = L.random_member(rng, 2)
    roots = random_roots(rng, d, d, config.degree_cap)
    z = sample_annulus(rng, 0.0, 0.1)
    reference = F_eval(theta, mbar, lift, z, roots, params, tol=tol)
    if abs(reference.constant_term) < ZERO_THRESHOLD:
        raise DivisionNearZero('F(ā) ≈ 0 em z=%s' % z)

    delta = L.random_member(rng, 1)
    other = tuple(mi + n * di for mi, di in zip(mbar, delta))
    worst = F_eval(theta, other, lift, z, roots, params, rotation=mbar, tol=tol) \
        .relative_residual(reference)

    w = stabilizer_sample(L, mbar, rng, 1, modulus=n)[0]
    moved = F_eval(theta, mbar, lift, z, w.apply(roots), params,
                   rotation=weyl_apply(w, mbar), tol=tol)
    worst = max(worst, moved.relative_residual(reference))

    other_lift = _other_lift(rng, lift, params)
    ratio, predicted = F_lift_transform(theta, mbar, lift, other_lift, z, roots, params, tol=tol)
    worst = max(worst, _rel(ratio, predicted))
    return max(worst, F_lift_residual(theta, mbar, lift, other_lift, z, roots, params, tol=tol))


def check_weil(rng, config):
    """w(a, q^{1/n}) é raiz n-ésima da unidade e não depende do levantamento."""
    params = config.params
    a = random_point(rng, max(config.torsion_bound, 12))
    lift = centered_lift(a, params)
    value = weil_pairing(a, lift, params)
    worst = abs(value ** order(a) - 1.0)
    other = _other_lift(rng, lift, params)
    return max(worst, abs(weil_pairing(a, other, params) - value))


def check_R_unit(rng, config):
    """R é unidade perto de z = 0, R(V, V, 0) = 1 e e_σ(V^{𝕋[n]}) = R·σ(V, ā)."""
    params, d = config.params, config.spin_rank
    V = random_spin_bundle(rng, d, d, config.degree_cap, bound=GAMMA_BOUND)
    lift = centered_lift(random_point(rng, config.torsion_bound), params)
    z = sample_annulus(rng, 0.0, 0.1)
    unit = R_eval(V, lift, z, params, config.unit_tol, config.sigma_truncation_tol)
    worst = 0.0 if abs(unit.constant_term) > UNIT_FLOOR else 1.0
    trivial = R_eval(V, centered_lift(zero_point(), params), z, params, config.unit_tol)
    worst = max(worst, trivial.max_abs_diff(1.0))
    return max(worst, euler_factorization_check(V, lift, z, params, config.sigma_truncation_tol))


def check_cocycle(rng, config):
    """Condição de cociclo com no máximo um ponto especial entre a, b, c."""
    params, bound = config.params, config.torsion_bound
    V = random_spin_bundle(rng, config.spin_rank, config.spin_rank, config.degree_cap,
                           bound=GAMMA_BOUND)
    points = []
    if rng.random() < 0.8:
        points.append(random_special_lift(rng, [V], bound, params).base)
    while len(points) < 3:
        point = random_ordinary_point(rng, V, bound)
        if point is None:
            raise Resample('Todos os pontos de ordem <= %d são especiais' % bound)
        points.append(point)
    a, b, c = (points[int(i)] for i in rng.permutation(3))
    lifts = [centered_lift(p, params) for p in set(points)]
    z_samples = [sample_annulus(rng) for _ in range(SAMPLES_PER_TRIAL)]
    return cocycle_check(V, a, b, c, z_samples, params, lifts)


def _section_checks(rng, config, subject):
    params = config.params
    bundles = bundles_of(subject)
    w_samples = [_ordinary_w(rng, bundles, params) for _ in range(SAMPLES_PER_TRIAL)]
    worst = lambda_invariance_check(subject, w_samples, params)
    lift = random_special_lift(rng, bundles, config.torsion_bound, params)
    z_samples = [sample_overlap(rng, bundles, lift, params) for _ in range(SAMPLES_PER_TRIAL)]
    worst = max(worst, gluing_check(subject, lift, z_samples, params))
    worst = max(worst, gamma_lift_check(subject, lift, _other_lift(rng, lift, params),
                                        z_samples, params))
    return worst, lift, z_samples


def check_gamma_thm8(rng, config):
    """γ de (V, V′, θ′): Λ-invariância de γ̄_B, colagem e independência do levantamento."""
    k = int(rng.integers(1, 3))
    instance = random_thm8_instance(rng, config.spin_rank, config.spin_rank,
                                    config.degree_cap, GAMMA_BOUND, k)
    worst, _, _ = _section_checks(rng, config, instance)
    return worst


def _random_pair(rng, config, padding=0):
    d = config.spin_rank
    kind = 'reflection' if d >= 3 and rng.random() < 0.5 else 'weyl'
    return random_matched_pair(rng, d, d, config.degree_cap, GAMMA_BOUND, padding, kind)


def check_gamma_thm9(rng, config):
    """γ de pares virtuais: as verificações de γ e a propriedade de unidade de γ_a."""
    pair = _random_pair(rng, config, padding=int(rng.integers(0, 2)))
    worst, lift, z_samples = _section_checks(rng, config, pair)
    smallest = min(unit_modulus(pair, lift, z, config.params) for z in z_samples)
    return max(worst, 0.0 if smallest > UNIT_FLOOR else 1.0)


def check_laws(rng, config):
    """Estabilidade, exponencialidade e naturalidade de γ em pares virtuais."""
    params, d = config.params, config.spin_rank
    P = _random_pair(rng, config)
    Pother = _random_pair(rng, config)
    W = random_spin_bundle(rng, 1, d, config.degree_cap, bound=GAMMA_BOUND)
    bundles = bundles_of(P) + bundles_of(Pother) + (W,)
    lift = random_special_lift(rng, bundles, config.torsion_bound, params)
    z_samples = [sample_overlap(rng, bundles, lift, params) for _ in range(SAMPLES_PER_TRIAL)]
    w_samples = [_ordinary_w(rng, bundles, params) for _ in range(SAMPLES_PER_TRIAL)]
    images = random_images(rng, P.num_vars, P.degree_cap)
    report = law_checks(P, Pother, W, lift, z_samples, w_samples, params, images)
    logger.debug('leis: %s', report)
    return max(report.values())


def check_transfer(rng, config):
    """τ_a(θ(Q|_F)) = (τ_{a^m}θ)(Q(m)) para σ_d e suas potências."""
    params, d = config.params, config.spin_rank
    V = random_spin_bundle(rng, d, d, config.degree_cap, bound=GAMMA_BOUND)
    theta = sigma_d_theta(d)
    if rng.random() < 0.5:
        theta = power(theta, 2)
    lift = centered_lift(random_point(rng, config.torsion_bound), params)
    z_samples = [sample_annulus(rng, 0.0, 0.1) for _ in range(SAMPLES_PER_TRIAL)]
    return transfer_check(theta, V, lift, z_samples, params, config.sigma_truncation_tol)


# -------- registro --------

SUITES = OrderedDict((suite.name, suite) for suite in (
    Suite('sigma_laws', 'Imparidade, normalização e quasi-periodicidade de σ; forma de Spin(2d)',
          check_sigma_laws),
    Suite('theta_level', 'Lei de nível e invariância de Weyl de σ_d, potências e produtos',
          check_theta_level),
    Suite('lattice_identities', 'Identidades inteiras de φ, I, Î e invariância de c₂ de Borel',
          check_lattice_identities),
    Suite('F_lemmas', 'Independência do representante, invariância por W(m) e troca de levantamento de F',
          check_F_lemmas),
    Suite('weil', 'Pairing de Weil: raiz da unidade e independência do levantamento',
          check_weil),
    Suite('R_unit', 'R é unidade, R(V,V,0) = 1 e fatoração da classe de Euler',
          check_R_unit),
    Suite('cocycle', 'Condição de cociclo de Thom com no máximo um ponto especial',
          check_cocycle),
    Suite('gamma_thm8', 'Seções γ de (V, V′, θ′): Λ-invariância, colagem, levantamento',
          check_gamma_thm8),
    Suite('gamma_thm9', 'Seções γ de pares virtuais: colagem e unidades',
          check_gamma_thm9),
    Suite('laws', 'Estabilidade, exponencialidade e naturalidade de γ',
          check_laws),
    Suite('transfer', 'Fórmula de transferência de tetas transladadas',
          check_transfer),
))

RESAMPLE_ERRORS = (Resample, SampleAtZero, DivisionNearZero)


def get_suite(name):
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(name) from None


def run_trial(suite, rng, config):
    """Executa uma tentativa, reamostrando amostras degeneradas com o mesmo gerador."""
    for attempt in range(MAX_RESAMPLES):
        try:
            return float(suite.trial(rng, config))
        except RESAMPLE_ERRORS as exc:
            logger.debug('%s: reamostrando (%d): %s', suite.name, attempt + 1, exc)
    raise Resample('%s: nenhuma amostra válida após %d tentativas' % (suite.name, MAX_RESAMPLES))

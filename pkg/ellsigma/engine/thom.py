# coding: utf-8

"""
    O cociclo de Thom e as seções globais γ dos teoremas de orientação sigma
    (caso θ′ e caso de pares virtuais), sobre dados de ponto fixo de brinquedo.

    Coordenadas: perto de um ponto de torsão a com levantamento ā, as seções
    são funções da coordenada local z; a coordenada global é w = ā + z. As
    translações τ_a são realizadas como z ↦ z + ā e u_i ↦ u_i α^{m_i}.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict

from .curve import (CurvePoint, LiftedPoint, order, torsion_points, distance_to_lattice,
                    sample_annulus, lift as make_lift)
from .errors import HypothesisViolated, NotAUnit, ParameterError
from .jets import Jet, as_jet, jet_invert, DEFAULT_UNIT_TOL
from .lattices import borel_c2
from .classes import (ToyBundle, R_eval, F_eval, align_roots, _check_compatible)
from .theta import ThetaFunction, sigma, translate, DEFAULT_TRUNCATION_TOL

logger = logging.getLogger(__name__)

# tolerância relativa da igualdade das classes c₂ (jets com coeficientes racionais em float)
C2_TOL = 1e-9

# raio do conjunto apagado na decisão de pertença
DELETED_SET_RADIUS = 1e-9

# margem de rejeição das amostras na interseção
OVERLAP_MARGIN = 1e-3


def _one(num_vars, degree_cap):
    return Jet.constant(1.0, num_vars, degree_cap)


def _residual(value, reference):
    return Jet.relative_residual(_as_jet(value, reference), _as_jet(reference, value))


def _as_jet(value, like):
    if isinstance(like, Jet):
        return as_jet(value, like.num_vars, like.degree_cap)
    return as_jet(value)


@dataclass(frozen=True)
class VirtualPair:
    """Par ordenado (V₀, V₁) sobre a mesma componente, no mesmo espaço de jets."""

    V0: ToyBundle
    V1: ToyBundle

    def __post_init__(self):
        num_vars = max(self.V0.num_vars, self.V1.num_vars)
        degree_cap = min(self.V0.degree_cap, self.V1.degree_cap)
        for name in ('V0', 'V1'):
            bundle = getattr(self, name)
            roots = align_roots(bundle.roots, num_vars, degree_cap)
            object.__setattr__(self, name, ToyBundle(bundle.lattice, bundle.m, tuple(roots),
                                                     bundle.orientation_signs))

    @property
    def num_vars(self):
        return max(self.V0.num_vars, self.V1.num_vars)

    @property
    def degree_cap(self):
        return min(self.V0.degree_cap, self.V1.degree_cap)

    def direct_sum(self, other):
        return VirtualPair(self.V0.direct_sum(other.V0), self.V1.direct_sum(other.V1))

    def stabilize(self, W):
        """(V₀ ⊕ W, V₁ ⊕ W)."""
        return VirtualPair(self.V0.direct_sum(W), self.V1.direct_sum(W))

    def substitute(self, images):
        return VirtualPair(self.V0.substitute(images), self.V1.substitute(images))


@dataclass(frozen=True)
class SectionData:
    """Seção γ: a parte ordinária (função de w) e as partes especiais (função de z)."""

    gamma_ordinary: Callable[[complex], Jet]
    gamma_special: Dict[CurvePoint, Callable[[complex], Jet]]
    transition: Callable[[LiftedPoint, complex], Jet]


# -------- pontos especiais e classes de Euler --------

def is_special(V, a):
    """a = 0, ou algum m_j ≠ 0 com m_j·a = 0 (divisibilidade exata)."""
    n = order(a)
    return a.is_zero or any(mj != 0 and mj % n == 0 for mj in V.m)


def special_points(V, bound):
    """Pontos especiais de ordem <= bound; aceita também um VirtualPair."""
    bundles = (V.V0, V.V1) if isinstance(V, VirtualPair) else (V,)
    return [a for a in torsion_points(bound) if any(is_special(b, a) for b in bundles)]


def euler_ratio_e(V, n, z, params, unit_tol=DEFAULT_UNIT_TOL, tol=DEFAULT_TRUNCATION_TOL):
    """
    e(V^a, V^b) na coordenada local: (ε_n/ε_0) ∏_{0≠m_j≡0 (n)} σ(m_j z + x_j).
    NotAUnit quando z cai no conjunto apagado.
    """
    z = complex(z)
    value = _one(V.num_vars, V.degree_cap) * float(V.orientation(n) * V.orientation(0))
    for j in V.contributing_indices(n):
        value = value * sigma(V.roots[j] + V.m[j] * z, params, tol)
    if abs(value.constant_term) <= unit_tol:
        raise NotAUnit(value.constant_term, unit_tol)
    return value


def deleted_set_contains(V, n, z, params, radius=DELETED_SET_RADIUS):
    """True se m_j z ∈ Λ (a menos de ``radius``) para algum 0 ≠ m_j ≡ 0 mod n."""
    z = complex(z)
    return any(distance_to_lattice(V.m[j] * z, params) < radius
               for j in V.contributing_indices(n))


def _point_lift(point, lifts, params):
    for candidate in lifts or ():
        if candidate.base == point:
            return candidate
    return make_lift(point, 0, 0, params)


def _frame_transition(V, x, y, x_bar, y_bar, z_x, params, specials):
    """e(x, y) no referencial de x, na coordenada local z_x."""
    space = (V.num_vars, V.degree_cap)
    if x == y:
        return _one(*space)
    x_special, y_special = specials[x], specials[y]
    if x_special and not y_special:
        return euler_ratio_e(V, order(x), z_x, params)
    if y_special and not x_special:
        # transporte de e(y, x)⁻¹ para o referencial de x
        return jet_invert(euler_ratio_e(V, order(y), z_x + x_bar - y_bar, params))
    return _one(*space)


def cocycle_check(V, a, b, c, z_samples, params, lifts=None):
    """
    Resíduo máximo de ψ_bc(ψ_ab(e(a,b))·e(b,c)) = ψ_ac(e(a,c)), com
    (ψ_xy f)(z_y) = f(z_y + ȳ − x̄). No máximo um dos pontos pode ser especial.
    """
    points = (a, b, c)
    specials = {p: is_special(V, p) for p in points}
    special = [p for p in points if specials[p]]
    if len(set(special)) > 1:
        raise HypothesisViolated('Mais de um ponto especial entre %s, %s, %s' % points)
    bars = {p: _point_lift(p, lifts, params).abar for p in points}
    anchor = bars[special[0]] if special else bars[a]
    worst = 0.0
    for z in z_samples:
        w = anchor + complex(z)
        z_c = w - bars[c]
        z_b = z_c + bars[c] - bars[b]
        e_ab = _frame_transition(V, a, b, bars[a], bars[b], z_b + bars[b] - bars[a], params, specials)
        e_bc = _frame_transition(V, b, c, bars[b], bars[c], z_b, params, specials)
        lhs = e_ab * e_bc
        rhs = _frame_transition(V, a, c, bars[a], bars[c], z_c + bars[c] - bars[a], params, specials)
        worst = max(worst, _residual(lhs, rhs))
    return worst


# -------- hipótese c₂ --------

def check_c2(lattice, m, roots, lattice_other, m_other, roots_other, tol=C2_TOL):
    """HypothesisViolated se as classes c₂ de Borel diferem como jets (z adjunta)."""
    z_position = max([root.num_vars for root in tuple(roots) + tuple(roots_other)] + [0])
    left = borel_c2(lattice, m, list(roots), z_position)
    right = borel_c2(lattice_other, m_other, list(roots_other), z_position)
    difference = left.max_abs_diff(right)
    scale = max(1.0, left.max_abs(), right.max_abs())
    if difference > tol * scale:
        raise HypothesisViolated('c₂ de Borel diferem: max|Δ| = %.3e' % difference)
    return difference


def check_pair(P, tol=C2_TOL):
    return check_c2(P.V0.lattice, P.V0.m, P.V0.roots,
                    P.V1.lattice, P.V1.m, P.V1.roots, tol)


def check_thm8(V, Vprime, theta_prime, tol=C2_TOL):
    """c₂(V_𝕋) = ξ′(V′_𝕋), com ξ′ dado pelos dados de nível de θ′."""
    _check_compatible(theta_prime, Vprime.rank, Vprime.m)
    return check_c2(V.lattice, V.m, V.roots,
                    theta_prime.lattice, Vprime.m, Vprime.roots, tol)


# -------- seções γ --------

def _nonzero_sigma_product(V, w, params, tol):
    value = _one(V.num_vars, V.degree_cap)
    for mj, root in zip(V.m, V.roots):
        if mj:
            value = value * sigma(root + mj * w, params, tol)
    return value


def gamma_ordinary_thm8(V, Vprime, theta_prime, w, params,
                        unit_tol=DEFAULT_UNIT_TOL, tol=DEFAULT_TRUNCATION_TOL):
    """γ̄_B(w) = ε_0·θ′(m′w + x′) / ∏_{m_j≠0} σ(m_j w + x_j)."""
    check_thm8(V, Vprime, theta_prime)
    w = complex(w)
    numerator = theta_prime.evaluate([root + mj * w for mj, root in zip(Vprime.m, Vprime.roots)],
                                     params, tol)
    numerator = _as_jet(numerator, _one(Vprime.num_vars, Vprime.degree_cap)) * float(V.orientation(0))
    return numerator * jet_invert(_nonzero_sigma_product(V, w, params, tol), unit_tol)


def gamma_special_thm8(V, Vprime, theta_prime, lift, z, params,
                       unit_tol=DEFAULT_UNIT_TOL, tol=DEFAULT_TRUNCATION_TOL):
    """τ_a*γ_a(z) = R(V, V^a, ε, ā)(z) · θ′(V′, ā)(z)."""
    check_thm8(V, Vprime, theta_prime)
    unit = R_eval(V, lift, z, params, unit_tol, tol)
    return unit * F_eval(theta_prime, Vprime.m, lift, z, Vprime.roots, params, tol=tol)


def gamma_ordinary_thm9(P, w, params, unit_tol=DEFAULT_UNIT_TOL, tol=DEFAULT_TRUNCATION_TOL):
    """γ̄_B(w) = (ε_0(V₁)/ε_0(V₀)) ∏_{m⁰≠0} σ(m⁰w + x⁰) / ∏_{m¹≠0} σ(m¹w + x¹)."""
    check_pair(P)
    w = complex(w)
    sign = float(P.V0.orientation(0) * P.V1.orientation(0))
    numerator = _nonzero_sigma_product(P.V0, w, params, tol) * sign
    return numerator * jet_invert(_nonzero_sigma_product(P.V1, w, params, tol), unit_tol)


def gamma_special_thm9(P, lift, z, params, unit_tol=DEFAULT_UNIT_TOL, tol=DEFAULT_TRUNCATION_TOL):
    """τ_a*γ_a(z) = R(V₁, V₁^a, ε, ā) / R(V₀, V₀^a, ε, ā); sempre uma unidade."""
    check_pair(P)
    numerator = R_eval(P.V1, lift, z, params, unit_tol, tol)
    return numerator * jet_invert(R_eval(P.V0, lift, z, params, unit_tol, tol), unit_tol)


@dataclass(frozen=True)
class Thm8Instance:
    """Dados (V, V′, θ′) com c₂(V) = ξ′(V′)."""

    V: ToyBundle
    Vprime: ToyBundle
    theta_prime: ThetaFunction


def _gamma_pair(subject):
    if isinstance(subject, VirtualPair):
        return (lambda w, params: gamma_ordinary_thm9(subject, w, params),
                lambda lift, z, params: gamma_special_thm9(subject, lift, z, params))
    if isinstance(subject, Thm8Instance):
        args = (subject.V, subject.Vprime, subject.theta_prime)
        return (lambda w, params: gamma_ordinary_thm8(*args, w, params),
                lambda lift, z, params: gamma_special_thm8(*args, lift, z, params))
    raise ParameterError('Esperado VirtualPair ou Thm8Instance, recebido %r' % (subject,))


def section_data(subject, lifts, params):
    """Monta SectionData para os levantamentos dados (um por ponto especial)."""
    ordinary, special = _gamma_pair(subject)
    gamma_special = {
        lift.base: (lambda z, lift=lift: special(lift, z, params)) for lift in lifts
    }
    return SectionData(lambda w: ordinary(w, params), gamma_special,
                       lambda lift, z: transition_factor(subject, lift.n, z, params))


def transition_factor(subject, n, z, params):
    """e_σ(V^a, V^b, ε) (caso θ′) ou e_{V₁}/e_{V₀} (pares virtuais)."""
    if isinstance(subject, VirtualPair):
        return euler_ratio_e(subject.V1, n, z, params) * \
            jet_invert(euler_ratio_e(subject.V0, n, z, params))
    return euler_ratio_e(subject.V, n, z, params)


def gluing_check(subject, lift, z_samples, params):
    """
    Resíduo máximo de e(V^a, V^b)⁻¹ · τ_a*γ_a(z) = γ̄_B(ā + z) nas amostras z da
    interseção (o lado direito é a seção no ponto ordinário b = a + z).
    """
    ordinary, special = _gamma_pair(subject)
    worst = 0.0
    for z in z_samples:
        z = complex(z)
        lhs = jet_invert(transition_factor(subject, lift.n, z, params)) * special(lift, z, params)
        rhs = ordinary(lift.abar + z, params)
        worst = max(worst, _residual(lhs, rhs))
    logger.debug('gluing em %s: resíduo %.3e', lift.base, worst)
    return worst


def gamma_lift_check(subject, lift, other_lift, z_samples, params):
    """γ_a não depende do levantamento ā."""
    _, special = _gamma_pair(subject)
    return max([_residual(special(other_lift, z, params), special(lift, z, params))
                for z in z_samples] + [0.0])


def lambda_invariance_check(subject, w_samples, params):
    """Resíduo de γ̄_B(w + λ) = γ̄_B(w) para λ ∈ {2πi, 2πiτ}."""
    ordinary, _ = _gamma_pair(subject)
    worst = 0.0
    for w in w_samples:
        base = ordinary(w, params)
        for period in params.periods:
            worst = max(worst, _residual(ordinary(w + period, params), base))
    return worst


def unit_modulus(subject, lift, z, params):
    """|termo constante| de γ_a(z) (γ_a de um par virtual é uma unidade)."""
    _, special = _gamma_pair(subject)
    return abs(special(lift, z, params).constant_term)


def _section_residual(first, second, lift, z_samples, w_samples, params, pullback=None):
    """Compara γ̄_B nas amostras w e γ_a nas amostras z de duas seções."""
    ordinary_a, special_a = _gamma_pair(first)
    ordinary_b, special_b = _gamma_pair(second)
    transform = pullback or (lambda jet: jet)
    worst = 0.0
    for w in w_samples:
        worst = max(worst, _residual(ordinary_a(w, params), transform(ordinary_b(w, params))))
    for z in z_samples:
        worst = max(worst, _residual(special_a(lift, z, params),
                                     transform(special_b(lift, z, params))))
    return worst


def law_checks(P, Pother, W, lift, z_samples, w_samples, params, images=None):
    """
    Leis do teorema de pares virtuais, em (w, z) amostrados:

        estabilidade:      γ(V₀⊕W, V₁⊕W) = γ(V₀, V₁)
        exponencialidade:  γ(P ⊕ P′) = γ(P)·γ(P′)
        naturalidade:      γ(f*P) = f*γ(P), com f dada por ``images``
    """
    report = {}
    report['stability'] = _section_residual(P.stabilize(W), P, lift, z_samples, w_samples, params)

    total = P.direct_sum(Pother)
    ordinary_p, special_p = _gamma_pair(P)
    ordinary_q, special_q = _gamma_pair(Pother)
    ordinary_t, special_t = _gamma_pair(total)
    worst = 0.0
    for w in w_samples:
        worst = max(worst, _residual(ordinary_t(w, params),
                                     ordinary_p(w, params) * ordinary_q(w, params)))
    for z in z_samples:
        worst = max(worst, _residual(special_t(lift, z, params),
                                     special_p(lift, z, params) * special_q(lift, z, params)))
    report['exponentiality'] = worst

    if images is None:
        images = [Jet.variable(i, P.num_vars, P.degree_cap) for i in range(P.num_vars)]
    pulled = P.substitute(images)

    def pullback(jet):
        return jet.extend(P.num_vars, jet.degree_cap).substitute(images)

    report['naturality'] = _section_residual(pulled, P, lift, z_samples, w_samples, params,
                                             pullback=pullback)
    return report


def transfer_check(theta, V, lift, z_samples, params, tol=DEFAULT_TRUNCATION_TOL):
    """
    τ_a(θ(Q|_F)) = (τ_{a^m}θ)(Q(m)): θ em m(z + ā) + x contra a teta
    transladada por m·ā em m z + x.
    """
    _check_compatible(theta, V.rank, V.m)
    shifted_theta = translate(theta, [mj * lift.abar for mj in V.m])
    worst = 0.0
    for z in z_samples:
        z = complex(z)
        lhs = theta.evaluate([root + mj * (z + lift.abar) for mj, root in zip(V.m, V.roots)],
                             params, tol)
        rhs = shifted_theta.evaluate([root + mj * z for mj, root in zip(V.m, V.roots)],
                                     params, tol)
        worst = max(worst, _residual(lhs, rhs))
    return worst


def sample_overlap(rng, bundles, lift, params, inner=0.05, outer=0.2, margin=OVERLAP_MARGIN,
                   max_attempts=1000):
    """
    z no anel inner <= |z| <= outer tal que ā + z é ordinário para todos os
    fibrados (m_j(ā + z) a distância >= margin de Λ para m_j ≠ 0).
    """
    for _ in range(max_attempts):
        z = sample_annulus(rng, inner, outer)
        w = lift.abar + z
        if all(distance_to_lattice(mj * w, params) >= margin
               for bundle in bundles for mj in bundle.m if mj):
            return z
        logger.debug('amostra %s no conjunto apagado, reamostrando', z)
    raise ParameterError('Nenhuma amostra válida na interseção após %d tentativas' % max_attempts)


def bundles_of(subject):
    if isinstance(subject, VirtualPair):
        return (subject.V0, subject.V1)
    if isinstance(subject, Thm8Instance):
        return (subject.V, subject.Vprime)
    return (subject,)


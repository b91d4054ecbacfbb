# coding: utf-8

"""
    Classes características equivariantes em dados de ponto fixo "de
    brinquedo": a classe torcida F(θ, m̄, ā), a classe avaliada θ(Q, ā) e a
    unidade R.

    Um ``ToyBundle`` é a restrição de um fibrado 𝕋-equivariante spin a uma
    componente fixa, já decomposto em fibrados de linha: números de rotação
    m_j, raízes de Chern x_j (jets) e as orientações escolhidas dos
    sub-fibrados fixos.

    F é vista como função de ζ ∈ Ť⊗ℂ,

        F(ζ) = exp((k/n)·Î(m̄)·ζ) · exp((k/n)·φ(m̄)·ā) · θ(ζ + m̄ā),

    e o pullback por Q(m) é a substituição ζ_i = r_i z + x_i, com r o vetor de
    rotação do fibrado.
"""

import cmath
import math
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Tuple

import numpy

from .curve import TWO_PI_I, weil_pairing
from .errors import (ParameterError, IncompatibleLattices, DivisionNearZero)
from .jets import Jet, jet_invert, DEFAULT_DEGREE_CAP, DEFAULT_UNIT_TOL
from .lattices import LatticeWithForm, spin, as_vector
from .theta import sigma, sigma_d_theta, DEFAULT_TRUNCATION_TOL

logger = logging.getLogger(__name__)

# |F(ā)| abaixo disto invalida a lei de troca de levantamento
DIVISION_THRESHOLD = 1e-12


def align_roots(roots, num_vars=None, degree_cap=None):
    """Reindexa os jets num mesmo espaço de variáveis (max r, min D)."""
    roots = list(roots)
    if num_vars is None:
        num_vars = max([root.num_vars for root in roots] + [0])
    if degree_cap is None:
        degree_cap = min([root.degree_cap for root in roots] + [DEFAULT_DEGREE_CAP])
    return [root.extend(num_vars, degree_cap) for root in roots]


def _space(roots):
    if roots:
        return roots[0].num_vars, roots[0].degree_cap
    return 0, DEFAULT_DEGREE_CAP


@dataclass(frozen=True)
class ToyBundle:
    """
    Dados de ponto fixo de um fibrado spin de posto 2d.

    ``orientation_signs`` associa a ordem n ao sinal de V^{𝕋[n]} e a chave 0 ao
    sinal de V^𝕋. As consultas são canonizadas: duas ordens com o mesmo
    sub-fibrado fixo usam a mesma chave (a maior delas).
    """

    lattice: LatticeWithForm
    m: Tuple[int, ...]
    roots: Tuple[Jet, ...]
    orientation_signs: Dict[int, int] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        m = tuple(int(v) for v in as_vector(self.m))
        if len(m) != self.lattice.rank:
            raise ParameterError('Rotação de tamanho %d para reticulado de posto %d'
                                 % (len(m), self.lattice.rank))
        self.lattice.check_member(m)
        if len(self.roots) != len(m):
            raise ParameterError('São necessárias %d raízes de Chern, recebidas %d'
                                 % (len(m), len(self.roots)))
        roots = align_roots(self.roots)
        for root in roots:
            if abs(root.constant_term) > 0:
                raise ParameterError('Raízes de Chern devem ser jets nilpotentes')
        object.__setattr__(self, 'm', m)
        object.__setattr__(self, 'roots', tuple(roots))
        signs = {}
        for key, value in dict(self.orientation_signs).items():
            key, value = int(key), int(value)
            if key < 0 or value not in (1, -1):
                raise ParameterError('Orientação inválida: %s -> %s' % (key, value))
            canonical = self.canonical_key(key)
            if canonical == 1:
                if value != 1:
                    raise ParameterError('A orientação de V é fixa (+1); recebido %s -> %s' % (key, value))
                continue
            if signs.get(canonical, value) != value:
                raise ParameterError('Orientações conflitantes para o sub-fibrado de chave %d'
                                     % canonical)
            signs[canonical] = value
        object.__setattr__(self, 'orientation_signs', signs)

    @classmethod
    def spin(cls, m, roots, orientation_signs=None):
        return cls(spin(len(m)), tuple(m), tuple(roots), dict(orientation_signs or {}))

    @property
    def rank(self):
        return len(self.m)

    @property
    def num_vars(self):
        return _space(self.roots)[0]

    @property
    def degree_cap(self):
        return _space(self.roots)[1]

    def fixed_indices(self, n):
        """Índices de V^{𝕋[n]}: m_j ≡ 0 mod n (teste exato)."""
        if n < 1:
            raise ParameterError('Ordem inválida: %s' % n)
        return [j for j, mj in enumerate(self.m) if mj % n == 0]

    def contributing_indices(self, n):
        """Índices com 0 ≠ m_j ≡ 0 mod n."""
        return [j for j in self.fixed_indices(n) if self.m[j] != 0]

    def zero_indices(self):
        return [j for j, mj in enumerate(self.m) if mj == 0]

    def canonical_key(self, n):
        """
        1 quando o sub-fibrado fixo é o próprio V (inclusive V^𝕋 = V), 0 para
        V^𝕋, senão o mdc dos m_j não nulos fixados por 𝕋[n].
        """
        if n == 0:
            return 1 if len(self.zero_indices()) == self.rank else 0
        if len(self.fixed_indices(n)) == self.rank:
            return 1
        contributing = self.contributing_indices(n)
        if not contributing:
            return 0
        return math.gcd(*[abs(self.m[j]) for j in contributing])

    def canonical_keys(self):
        keys = {self.canonical_key(0), 1}
        for mj in set(abs(v) for v in self.m if v):
            for n in range(1, mj + 1):
                if mj % n == 0:
                    keys.add(self.canonical_key(n))
        return sorted(keys)

    def orientation(self, n):
        """Sinal ε(V^{𝕋[n]}); n = 0 pede o sinal de V^𝕋."""
        key = self.canonical_key(n)
        if key == 1:
            return 1
        return self.orientation_signs.get(key, 1)

    def _key_indices(self, key):
        if key == 0:
            return self.zero_indices()
        return self.fixed_indices(key)

    def weyl_move(self, w):
        """
        (w·m, w·x) com as orientações ajustadas pela paridade das trocas de
        sinal em cada sub-fibrado fixo, de modo que as classes de Euler não mudam.
        """
        signs = {}
        for key in self.canonical_keys():
            if key == 1:
                continue
            flips = sum(1 for j in self._key_indices(key) if w.signs[j] < 0)
            signs[key] = self.orientation(key) * (-1) ** flips
        return ToyBundle(self.lattice, tuple(w.apply(self.m)), tuple(w.apply(self.roots)), signs)

    def with_orientations(self, orientation_signs):
        return ToyBundle(self.lattice, self.m, self.roots, dict(orientation_signs))

    def direct_sum(self, other):
        """V ⊕ W em spin(2(d+d′)); as orientações se multiplicam por sub-fibrado."""
        num_vars = max(self.num_vars, other.num_vars)
        degree_cap = min(self.degree_cap, other.degree_cap)
        roots = align_roots(self.roots + other.roots, num_vars, degree_cap)
        total = ToyBundle(spin(self.rank + other.rank), self.m + other.m, tuple(roots))
        signs = {key: self.orientation(key) * other.orientation(key)
                 for key in total.canonical_keys() if key != 1}
        return total.with_orientations(signs)

    def substitute(self, images):
        """Pullback por uma aplicação de bases: x ↦ x∘f nas raízes."""
        return ToyBundle(self.lattice, self.m,
                         tuple(root.substitute(images) for root in self.roots),
                         self.orientation_signs)


@dataclass(frozen=True)
class EvaluatedClass:
    """Classe com valores em jets, como função da coordenada local z."""

    function: Callable[[complex], Jet]
    provenance: str

    def at(self, z):
        return self.function(z)

    __call__ = at


def _check_compatible(theta, bundle_rank, m):
    if theta.rank != bundle_rank:
        raise IncompatibleLattices('Teta %s de posto %d para fibrado de posto %d'
                                   % (theta.descriptor, theta.rank, bundle_rank))
    if not theta.lattice.is_member(m):
        raise IncompatibleLattices('Rotação %s fora do reticulado de %s'
                                   % (tuple(m), theta.descriptor))


def _prefactor_exponent(lattice, mbar, zeta, lift):
    """(k/n)·Î(m̄)·ζ + (k/n)·φ(m̄)·ā."""
    ratio = float(Fraction(lift.k, lift.n))
    adjoint = lattice.gram @ numpy.array(mbar, dtype=int)
    phi_value = lattice.quadratic_value(mbar)
    exponent = ratio * float(phi_value) * lift.abar
    for a, coordinate in zip(adjoint, zeta):
        if a:
            exponent = coordinate * (ratio * int(a)) + exponent
    return exponent


def F_eval(theta, mbar, lift, z, roots, params, rotation=None, tol=DEFAULT_TRUNCATION_TOL):
    """
    θ(Q, m̄, ā)(z) = F(θ, m̄, ā) em ζ_i = r_i z + x_i (r = ``rotation``, por
    omissão m̄), como jet nas raízes.
    """
    mbar = theta.lattice.check_member(mbar)
    rotation = mbar if rotation is None else as_vector(rotation)
    roots = align_roots(roots)
    if len(roots) != theta.rank or len(rotation) != theta.rank:
        raise ParameterError('%s requer %d raízes e rotações' % (theta.descriptor, theta.rank))
    num_vars, degree_cap = _space(roots)
    z = complex(z)
    zeta = [root + r * z for r, root in zip(rotation, roots)]
    exponent = _prefactor_exponent(theta.lattice, mbar, zeta, lift)
    shifted = [coordinate + mi * lift.abar for mi, coordinate in zip(mbar, zeta)]
    value = theta.evaluate(shifted, params, tol)
    return _as_exponential(exponent, num_vars, degree_cap) * value


def _lift_law(theta, mbar, lift, other_lift, z, roots, params, tol):
    before = F_eval(theta, mbar, lift, z, roots, params, tol=tol)
    if abs(before.constant_term) < DIVISION_THRESHOLD:
        raise DivisionNearZero('|F(ā)| = %.3e em z=%s' % (abs(before.constant_term), z))
    after = F_eval(theta, mbar, other_lift, z, roots, params, tol=tol)
    delta = lift.delta_to(other_lift)
    delta_s = other_lift.shift_s - lift.shift_s
    phi_value = int(theta.lattice.quadratic_value(mbar))
    predicted = weil_pairing(lift.base, lift, params) ** (delta * phi_value)
    predicted *= cmath.exp(TWO_PI_I * float(Fraction(lift.k * phi_value * delta_s, lift.n)))
    return before, after, predicted


def F_lift_transform(theta, mbar, lift, other_lift, z, roots, params, tol=DEFAULT_TRUNCATION_TOL):
    """
    (F(ā′)/F(ā), previsto) nos termos constantes, com

        previsto = w(a, q^{1/n})^{δφ(m̄)} · e^{2πi(k/n)φ(m̄)Δs},

    δ e Δs as diferenças dos deslocamentos em τ e em 1 entre os levantamentos.
    """
    before, after, predicted = _lift_law(theta, mbar, lift, other_lift, z, roots, params, tol)
    return after.constant_term / before.constant_term, predicted


def F_lift_residual(theta, mbar, lift, other_lift, z, roots, params, tol=DEFAULT_TRUNCATION_TOL):
    """Resíduo relativo de F(ā′) = previsto · F(ā), coeficiente a coeficiente no jet truncado."""
    before, after, predicted = _lift_law(theta, mbar, lift, other_lift, z, roots, params, tol)
    return after.relative_residual(before * predicted)


def theta_of_bundle(theta, V, lift, params, tol=DEFAULT_TRUNCATION_TOL):
    """θ(Q, ā): F avaliada com os dados (m, x) do fibrado."""
    _check_compatible(theta, V.rank, V.m)

    def function(z):
        return F_eval(theta, V.m, lift, z, V.roots, params, tol=tol)

    return EvaluatedClass(function, '%s(V,%s)' % (theta.descriptor, lift.base))


def sigma_factor_ratio(y, N, ell, k, params):
    """
    σ(y)/σ(y + m_j ā) para n | m_j, com N = m_j/n: a quasi-periodicidade dá
    (−1)^{Nℓ+Nk} e^{Nk·y} q^{(Nk)²/2}.
    """
    shift_s, shift_t = N * ell, N * k
    sign = -1.0 if (shift_s + shift_t) % 2 else 1.0
    return (y * float(shift_t)).exp() * (sign * params.q_power(Fraction(shift_t * shift_t, 2)))


def _reduced_shift(mj, lift, params):
    """
    m_j·ā = r + 2πi(A + Bτ) com (A, B) inteiros e r no paralelogramo centrado.
    Retorna (r, A, B).
    """
    s = mj * (lift.base.s + lift.shift_s)
    t = mj * (lift.base.t + lift.shift_t)
    A, B = math.floor(s + Fraction(1, 2)), math.floor(t + Fraction(1, 2))
    return params.lattice_point(float(s - A), float(t - B)), A, B


def R_eval(V, lift, z, params, unit_tol=DEFAULT_UNIT_TOL, tol=DEFAULT_TRUNCATION_TOL):
    """
    R(V, V^{𝕋[n]}, ε, ā) = ε_n ∏_{n|m_j} σ(m_j z + x_j) / F(σ_d, m, ā).

    Os fatores com m_j = 0 se cancelam exatamente; os demais fatores fixos se
    reduzem pela lei de quasi-periodicidade. O prefator exponencial é invertido
    exatamente e cada σ(y_j + m_j ā) restante é reduzido ao paralelogramo
    centrado antes do teste de invertibilidade. NotAUnit se algum fator
    reduzido não for invertível.
    """
    n, ell, k = lift.n, lift.ell, lift.k
    roots = list(V.roots)
    num_vars, degree_cap = V.num_vars, V.degree_cap
    z = complex(z)
    y = [root + mj * z for mj, root in zip(V.m, roots)]
    value = Jet.constant(float(V.orientation(n)), num_vars, degree_cap)
    for j in V.contributing_indices(n):
        value = value * sigma_factor_ratio(y[j], V.m[j] // n, ell, k, params)
    value = value * _as_exponential(-_prefactor_exponent(V.lattice, V.m, y, lift),
                                    num_vars, degree_cap)
    for j, mj in enumerate(V.m):
        if mj % n:
            reduced, A, B = _reduced_shift(mj, lift, params)
            ratio = sigma_factor_ratio(y[j] + reduced, 1, A, B, params)
            value = value * ratio * jet_invert(sigma(y[j] + reduced, params, tol), unit_tol)
    return value


def _as_exponential(exponent, num_vars, degree_cap):
    if isinstance(exponent, Jet):
        return exponent.exp()
    return Jet.constant(cmath.exp(exponent), num_vars, degree_cap)


def fixed_euler_class(V, n, z, params, tol=DEFAULT_TRUNCATION_TOL):
    """e_σ(V^{𝕋[n]}) = ε_n ∏_{n|m_j} σ(m_j z + x_j) (inclui os fatores σ(x_j) com m_j = 0)."""
    z = complex(z)
    value = Jet.constant(float(V.orientation(n)), V.num_vars, V.degree_cap)
    for j in V.fixed_indices(n):
        value = value * sigma(V.roots[j] + V.m[j] * z, params, tol)
    return value


def euler_factorization_check(V, lift, z, params, tol=DEFAULT_TRUNCATION_TOL):
    """Resíduo relativo de e_σ(V^{𝕋[n]}) = R · σ(V, ā)."""
    lhs = fixed_euler_class(V, lift.n, z, params, tol)
    sigma_class = theta_of_bundle(sigma_d_theta(V.rank), V, lift, params, tol)
    rhs = R_eval(V, lift, z, params, tol=tol) * sigma_class(z)
    return rhs.relative_residual(lhs)


def holomorphy_check(evaluated, z, h=1e-5):
    """
    Cauchy-Riemann por diferenças centrais no termo constante:
    |∂_y f − i·∂_x f| / max(|∂_x f|, ...).
    """
    z = complex(z)

    def value(point):
        return evaluated(point).constant_term

    dx = (value(z + h) - value(z - h)) / (2 * h)
    dy = (value(z + 1j * h) - value(z - 1j * h)) / (2 * h)
    scale = max(abs(dx), abs(value(z)), numpy.finfo(float).tiny)
    return abs(dy - 1j * dx) / scale

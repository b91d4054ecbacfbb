# coding: utf-8

"""
    Reticulados de cocaracteres Ť com os dados de uma classe característica de
    grau quatro: a forma quadrática φ, o pareamento I, o adjunto Î e a ação do
    grupo de Weyl por permutações com sinal.

    Presets:
        - ``spin(d)``: gram = identidade, soma das coordenadas par, grupo D_d;
        - ``torus(gram)``: gram fornecida, todo ℤ^d, grupo S_d.
"""

import logging
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy

from .errors import NotInLattice, IncompatibleLattices, ParameterError
from .jets import Jet, DEFAULT_DEGREE_CAP

logger = logging.getLogger(__name__)

GROUP_KINDS = ('signed_permutations_even', 'permutations', 'full_signed', 'custom')

# acima deste posto os estabilizadores são amostrados por rejeição
EXHAUSTIVE_RANK_LIMIT = 4


@dataclass(frozen=True)
class SignedPermutation:
    """
    Permutação com sinais: (w·m)[perm[i]] = signs[i]·m[i].
    """

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        signs = tuple(int(s) for s in self.signs)
        if sorted(perm) != list(range(len(perm))) or len(signs) != len(perm):
            raise ParameterError('Permutação com sinais inválida: %s %s' % (perm, signs))
        if any(s not in (1, -1) for s in signs):
            raise ParameterError('Sinais devem ser ±1: %s' % (signs,))
        object.__setattr__(self, 'perm', perm)
        object.__setattr__(self, 'signs', signs)

    @classmethod
    def identity(cls, rank):
        return cls(tuple(range(rank)), (1,) * rank)

    @classmethod
    def swap(cls, rank, i, j):
        perm = list(range(rank))
        perm[i], perm[j] = perm[j], perm[i]
        return cls(tuple(perm), (1,) * rank)

    @classmethod
    def sign_change(cls, rank, positions):
        signs = [1] * rank
        for pos in positions:
            signs[pos] = -1
        return cls(tuple(range(rank)), tuple(signs))

    @property
    def rank(self):
        return len(self.perm)

    @property
    def negative_count(self):
        return sum(1 for s in self.signs if s < 0)

    def apply(self, values):
        """Aplica a números, jets ou qualquer coisa que aceite multiplicação por ±1."""
        values = list(values)
        if len(values) != self.rank:
            raise ParameterError('Vetor de tamanho %d para permutação de posto %d'
                                 % (len(values), self.rank))
        result = [None] * self.rank
        for i, value in enumerate(values):
            result[self.perm[i]] = value if self.signs[i] > 0 else -value
        return result

    def compose(self, other):
        """(self ∘ other)·m = self·(other·m)."""
        perm = tuple(self.perm[other.perm[i]] for i in range(self.rank))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.rank))
        return SignedPermutation(perm, signs)

    def inverse(self):
        perm = [0] * self.rank
        signs = [1] * self.rank
        for i, p in enumerate(self.perm):
            perm[p] = i
            signs[p] = self.signs[i]
        return SignedPermutation(tuple(perm), tuple(signs))

    def matrix(self):
        result = numpy.zeros((self.rank, self.rank), dtype=int)
        for i, p in enumerate(self.perm):
            result[p, i] = self.signs[i]
        return result

    def offset(self, start, total):
        """Imersão como bloco [start, start + rank) de um grupo de posto ``total``."""
        perm = list(range(total))
        signs = [1] * total
        for i, p in enumerate(self.perm):
            perm[start + i] = start + p
            signs[start + i] = self.signs[i]
        return SignedPermutation(tuple(perm), tuple(signs))


def _block_elements(kind, size, generators):
    if kind == 'custom':
        return _closure(size, generators)
    result = []
    for perm in itertools.permutations(range(size)):
        if kind == 'permutations':
            result.append(SignedPermutation(perm, (1,) * size))
            continue
        for signs in itertools.product((1, -1), repeat=size):
            if kind == 'signed_permutations_even' and signs.count(-1) % 2:
                continue
            result.append(SignedPermutation(perm, signs))
    return result


def _closure(size, generators):
    identity = SignedPermutation.identity(size)
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for element in frontier:
            for generator in generators:
                candidate = generator.compose(element)
                if candidate not in elements:
                    elements.add(candidate)
                    new.append(candidate)
        frontier = new
    return sorted(elements, key=lambda w: (w.perm, w.signs))


@dataclass(frozen=True)
class WeylBlock:
    kind: str
    size: int
    generators: Tuple[SignedPermutation, ...] = ()

    def __post_init__(self):
        if self.kind not in GROUP_KINDS:
            raise ParameterError('Tipo de grupo desconhecido: %s' % self.kind)

    def random_element(self, rng):
        if self.kind == 'custom':
            elements = _block_elements(self.kind, self.size, self.generators)
            return elements[int(rng.integers(len(elements)))]
        perm = tuple(int(p) for p in rng.permutation(self.size))
        if self.kind == 'permutations':
            return SignedPermutation(perm, (1,) * self.size)
        signs = [int(s) for s in rng.choice((1, -1), size=self.size)]
        if self.kind == 'signed_permutations_even' and signs.count(-1) % 2 and self.size:
            signs[-1] = -signs[-1]
        return SignedPermutation(perm, tuple(signs))

    def order(self):
        if self.kind == 'custom':
            return len(_block_elements(self.kind, self.size, self.generators))
        base = math.factorial(self.size)
        if self.kind == 'permutations':
            return base
        if self.kind == 'full_signed':
            return base * 2 ** self.size
        return base * 2 ** max(self.size - 1, 0)


class WeylGroup(object):
    """Produto de blocos de Weyl agindo em coordenadas consecutivas."""

    def __init__(self, blocks):
        self.blocks = tuple(blocks)

    @property
    def rank(self):
        return sum(block.size for block in self.blocks)

    def order(self):
        result = 1
        for block in self.blocks:
            result *= block.order()
        return result

    def _assemble(self, parts):
        total = self.rank
        element = SignedPermutation.identity(total)
        start = 0
        for block, part in zip(self.blocks, parts):
            element = part.offset(start, total).compose(element)
            start += block.size
        return element

    def elements(self):
        per_block = [_block_elements(b.kind, b.size, b.generators) for b in self.blocks]
        for parts in itertools.product(*per_block):
            yield self._assemble(parts)

    def random_element(self, rng):
        return self._assemble([block.random_element(rng) for block in self.blocks])

    def direct_sum(self, other):
        return WeylGroup(self.blocks + other.blocks)

    def __eq__(self, other):
        return isinstance(other, WeylGroup) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return 'WeylGroup(%s)' % ', '.join('%s(%d)' % (b.kind, b.size) for b in self.blocks)


@dataclass(frozen=True)
class Cocharacter:
    """Vetor inteiro m de Ť; ``modulus`` n quando representa m: ℤ/n → T."""

    m: Tuple[int, ...]
    modulus: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'm', tuple(int(v) for v in self.m))

    def __len__(self):
        return len(self.m)

    def __iter__(self):
        return iter(self.m)


def as_vector(m):
    if isinstance(m, Cocharacter):
        return m.m
    return tuple(int(v) for v in m)


class LatticeWithForm(object):
    """
    Reticulado Ť ⊂ ℤ^d com a matriz de Gram de I e o grupo de Weyl.

    ``membership`` é uma lista de blocos (início, tamanho, regra) com regra em
    {'even_sum', 'all'}.
    """

    def __init__(self, name, gram, membership, weyl):
        gram = numpy.array(gram, dtype=int)
        if gram.ndim != 2 or gram.shape[0] != gram.shape[1]:
            raise ParameterError('A matriz de Gram deve ser quadrada: %s' % (gram.shape,))
        if not numpy.array_equal(gram, gram.T):
            raise ParameterError('A matriz de Gram deve ser simétrica')
        if weyl.rank != gram.shape[0]:
            raise IncompatibleLattices('Grupo de Weyl de posto %d para Gram de posto %d'
                                       % (weyl.rank, gram.shape[0]))
        gram.setflags(write=False)
        self.name = name
        self.gram = gram
        self.membership = tuple(membership)
        self.weyl = weyl
        self._check_weyl_invariance()

    def _check_weyl_invariance(self):
        start = 0
        for block in self.weyl.blocks:
            for generator in self._block_generators(block):
                w = generator.offset(start, self.rank).matrix()
                if not numpy.array_equal(w.T @ self.gram @ w, self.gram):
                    raise ParameterError(
                        'A forma de %s não é invariante pelo grupo %r; use um grupo custom'
                        % (self.name, self.weyl))
            start += block.size

    @staticmethod
    def _block_generators(block):
        if block.kind == 'custom':
            return list(block.generators)
        generators = [SignedPermutation.swap(block.size, i, i + 1) for i in range(block.size - 1)]
        if block.kind != 'permutations' and block.size >= 2:
            generators.append(SignedPermutation.sign_change(block.size, (0, 1)))
        if block.kind == 'full_signed' and block.size >= 1:
            generators.append(SignedPermutation.sign_change(block.size, (0,)))
        return generators

    @property
    def rank(self):
        return self.gram.shape[0]

    def is_member(self, m):
        m = as_vector(m)
        if len(m) != self.rank:
            return False
        for start, size, rule in self.membership:
            if rule == 'even_sum' and sum(m[start:start + size]) % 2:
                return False
        return True

    def check_member(self, m):
        if not self.is_member(m):
            raise NotInLattice(as_vector(m), self.name)
        return as_vector(m)

    def quadratic_value(self, m):
        """I(m, m)/2 como racional exato, sem verificar a pertença."""
        m = numpy.array(as_vector(m), dtype=object)
        return Fraction(int(m @ self.gram.astype(object) @ m), 2)

    def direct_sum(self, other, name=None):
        rank = self.rank
        gram = numpy.zeros((rank + other.rank,) * 2, dtype=int)
        gram[:rank, :rank] = self.gram
        gram[rank:, rank:] = other.gram
        membership = self.membership + tuple(
            (start + rank, size, rule) for start, size, rule in other.membership)
        return LatticeWithForm(name or '%s+%s' % (self.name, other.name),
                               gram, membership, self.weyl.direct_sum(other.weyl))

    def scaled(self, factor, name=None):
        """Mesmo reticulado com a forma multiplicada por ``factor`` (nível k·ξ)."""
        return LatticeWithForm(name or '%d*%s' % (factor, self.name),
                               self.gram * int(factor), self.membership, self.weyl)

    def random_member(self, rng, bound=3):
        """Membro com coordenadas em [-bound, bound], corrigindo a paridade por bloco."""
        m = [int(v) for v in rng.integers(-bound, bound + 1, size=self.rank)]
        for start, size, rule in self.membership:
            if rule == 'even_sum' and size and sum(m[start:start + size]) % 2:
                pos = start + int(rng.integers(size))
                m[pos] += -1 if m[pos] > 0 else 1
        return tuple(m)

    def __eq__(self, other):
        return (isinstance(other, LatticeWithForm)
                and numpy.array_equal(self.gram, other.gram)
                and self.membership == other.membership
                and self.weyl == other.weyl)

    def __hash__(self):
        return hash((self.gram.tobytes(), self.membership, self.weyl))

    def __repr__(self):
        return 'LatticeWithForm(%s)' % self.name


def spin(d):
    """Ť de Spin(2d): ℤ^d com soma par, forma ½Σm_i², grupo D_d."""
    return LatticeWithForm('spin(%d)' % (2 * d), numpy.identity(d, dtype=int),
                           [(0, d, 'even_sum')],
                           WeylGroup([WeylBlock('signed_permutations_even', d)]))


def torus(gram, group='permutations', generators=()):
    """Ť de um toro/U(d): todo ℤ^d, com a forma dada pela matriz de Gram."""
    gram = numpy.array(gram, dtype=int)
    d = gram.shape[0]
    name = 'torus(%s)' % ';'.join(','.join(str(v) for v in row) for row in gram)
    return LatticeWithForm(name, gram, [(0, d, 'all')],
                           WeylGroup([WeylBlock(group, d, tuple(generators))]))


def preset(name):
    """
    Converte os nomes usados na configuração: ``spin(2d)`` (p.ex. 'spin(4)') ou
    ``torus(a,b;c,d)``.
    """
    name = name.strip().replace(' ', '')
    if name.startswith('spin(') and name.endswith(')'):
        value = int(name[5:-1])
        if value <= 0 or value % 2:
            raise ParameterError('spin(2d) requer um inteiro par positivo: %s' % name)
        return spin(value // 2)
    if name.startswith('torus(') and name.endswith(')'):
        rows = [[int(v) for v in row.split(',')] for row in name[6:-1].split(';')]
        return torus(rows)
    raise ParameterError('Preset de reticulado desconhecido: %s' % name)


# -------- operações --------

def phi(L, m):
    """φ(m) = I(m, m)/2, inteiro nos membros; NotInLattice caso contrário."""
    L.check_member(m)
    value = L.quadratic_value(m)
    assert value.denominator == 1
    return int(value)


def pairing(L, m, m2):
    """I(m, m') = mᵀ·gram·m'."""
    L.check_member(m)
    L.check_member(m2)
    return int(numpy.array(as_vector(m)) @ L.gram @ numpy.array(as_vector(m2)))


def ihat(L, m):
    """Î(m) = gram·m, de modo que Î(m)(m') = I(m, m')."""
    L.check_member(m)
    return tuple(int(v) for v in L.gram @ numpy.array(as_vector(m)))


def phi_mod(L, m, n):
    """φ(m) mod n; bem definido nos levantamentos m + nΔ."""
    if n <= 0:
        raise ParameterError('O módulo deve ser positivo: %s' % n)
    return phi(L, m) % n


def weyl_apply(w, m):
    if isinstance(m, Cocharacter):
        return Cocharacter(w.apply(m.m), m.modulus)
    return tuple(w.apply(as_vector(m)))


def fixes(L, w, m, modulus=None):
    """True se w·m = m (ou w·m − m ∈ nŤ quando ``modulus`` = n)."""
    m = as_vector(m)
    moved = as_vector(weyl_apply(w, m))
    if modulus is None:
        return moved == m
    difference = [a - b for a, b in zip(moved, m)]
    if any(v % modulus for v in difference):
        return False
    return L.is_member([v // modulus for v in difference])


def stabilizer_elements(L, m, modulus=None):
    """Enumeração exaustiva de W(m) (só para posto <= 4)."""
    if L.rank > EXHAUSTIVE_RANK_LIMIT:
        raise ParameterError('Enumeração exaustiva só até posto %d' % EXHAUSTIVE_RANK_LIMIT)
    L.check_member(m)
    return [w for w in L.weyl.elements() if fixes(L, w, m, modulus)]


def stabilizer_sample(L, m, rng, count, modulus=None, max_attempts=10000):
    """
    ``count`` elementos de W(m) por amostragem de rejeição em W (a identidade
    sempre entra); para posto <= 4 usa a enumeração exaustiva.
    """
    L.check_member(m)
    if L.rank <= EXHAUSTIVE_RANK_LIMIT:
        elements = stabilizer_elements(L, m, modulus)
        return [elements[int(rng.integers(len(elements)))] for _ in range(count)]
    result = []
    attempts = 0
    while len(result) < count and attempts < max_attempts:
        attempts += 1
        w = L.weyl.random_element(rng)
        if fixes(L, w, m, modulus):
            result.append(w)
    while len(result) < count:
        result.append(SignedPermutation.identity(L.rank))
    return result


def borel_c2(L, m, roots, z_position=None, degree_cap=None):
    """
    ½·(m z + x)ᵀ·gram·(m z + x), com z adjunta como variável extra do jet.
    O grau máximo é ``degree_cap`` ou, por omissão, o das raízes.

    As partes em z², z¹ e z⁰ são φ(m)z², Î(m)(x)·z e ½·xᵀ·gram·x.
    """
    m = L.check_member(m)
    if len(roots) != L.rank:
        raise ParameterError('São necessárias %d raízes, recebidas %d' % (L.rank, len(roots)))
    num_vars = max([root.num_vars for root in roots] + [0])
    if degree_cap is None:
        degree_cap = min([root.degree_cap for root in roots], default=DEFAULT_DEGREE_CAP)
    if z_position is None:
        z_position = num_vars
    total_vars = max(num_vars, z_position + 1)
    z = Jet.variable(z_position, total_vars, degree_cap)
    coordinates = [root.extend(total_vars, degree_cap) + z * mi for mi, root in zip(m, roots)]
    result = Jet.zero(total_vars, degree_cap)
    for i in range(L.rank):
        for j in range(L.rank):
            if L.gram[i, j]:
                result = result + coordinates[i] * coordinates[j] * (L.gram[i, j] / 2.0)
    return result

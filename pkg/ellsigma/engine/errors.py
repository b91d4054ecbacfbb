# coding: utf-8

"""
    Exceções do engine.

    Todas derivam de ``EllSigmaError`` para que a linha de comandos possa
    reportar erros de domínio sem esconder erros de programação.
"""


class EllSigmaError(Exception):
    """Erro base do engine."""


class ParameterError(EllSigmaError, ValueError):
    """Parâmetro inválido: curva degenerada, configuração inválida, etc."""


class NotInLattice(EllSigmaError, ValueError):
    """O vetor não pertence ao reticulado de cocaracteres."""

    def __init__(self, vector, lattice_name):
        self.vector = tuple(vector)
        self.lattice_name = lattice_name
        super(NotInLattice, self).__init__(
            'O vetor %s não pertence ao reticulado %s' % (self.vector, lattice_name))


class IncompatibleLattices(EllSigmaError, ValueError):
    """Reticulados incompatíveis para a operação solicitada."""


class NotAUnit(EllSigmaError, ArithmeticError):
    """
    O jet não é invertível: o termo constante é (numericamente) zero.
    Em geral indica uma classe de Euler que se anula ou uma seção que não é unidade.
    """

    def __init__(self, constant_term, unit_tol):
        self.constant_term = constant_term
        self.unit_tol = unit_tol
        super(NotAUnit, self).__init__(
            'Jet não invertível: |a0| = %.3e <= %.1e' % (abs(constant_term), unit_tol))


class SampleAtZero(EllSigmaError, ArithmeticError):
    """A amostra caiu (perto de) um zero da função: deve-se reamostrar."""


class DivisionNearZero(EllSigmaError, ArithmeticError):
    """Denominador quase nulo numa razão verificada: deve-se reamostrar."""


class HypothesisViolated(EllSigmaError, ValueError):
    """Uma hipótese do teorema (p.ex. a igualdade das classes c2) não vale."""


class UnknownSuite(EllSigmaError, KeyError):
    """Nome de suíte de verificação desconhecido."""

    def __str__(self):
        return 'Suíte desconhecida: %s' % self.args[0]

# coding: utf-8

"""
    Conversão dos argumentos da linha de comandos para os tipos do engine.

    Números complexos: "re,im", "i", "-i", "2i" ou literais do Python ("0.3+0.8j").
    Pontos de torsão: "s,t" com racionais "p/q".
"""

import logging
from fractions import Fraction

from ..curve import CurvePoint
from ..errors import ParameterError

logger = logging.getLogger(__name__)

__all__ = ['parse_complex', 'parse_rational', 'parse_point', 'parse_int_vector',
           'parse_shifts', 'format_complex']


def parse_complex(text):
    """
    Retorna o complexo representado por ``text``.

    >>> parse_complex('i')
    1j
    >>> parse_complex('0.3,0.8')
    (0.3+0.8j)
    """
    if isinstance(text, complex):
        return text
    value = str(text).strip().replace(' ', '')
    if not value:
        raise ParameterError('Número complexo vazio')
    try:
        if ',' in value:
            real, imag = value.split(',')
            return complex(float(real), float(imag))
        if value.endswith('i'):
            coefficient = value[:-1]
            if coefficient in ('', '+'):
                return 1j
            if coefficient == '-':
                return -1j
            return complex(0.0, float(coefficient))
        return complex(value)
    except ValueError:
        raise ParameterError("Não foi possível interpretar '%s' como número complexo" % text) from None


def parse_rational(text):
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ParameterError("Não foi possível interpretar '%s' como racional" % text) from None


def parse_point(text):
    """Retorna o ponto de torsão dado por "s,t" (p.ex. "1/2,0")."""
    parts = str(text).split(',')
    if len(parts) != 2:
        raise ParameterError("Ponto de torsão deve ter a forma 's,t': '%s'" % text)
    return CurvePoint(parse_rational(parts[0]), parse_rational(parts[1]))


def parse_int_vector(text):
    """Retorna a tupla de inteiros de "1,1,0"; texto vazio é o vetor vazio."""
    value = str(text).strip()
    if not value:
        return ()
    try:
        return tuple(int(part) for part in value.split(','))
    except ValueError:
        raise ParameterError("Vetor inteiro inválido: '%s'" % text) from None


def parse_shifts(text):
    """Deslocamentos "j,k" do levantamento."""
    shifts = parse_int_vector(text)
    if len(shifts) != 2:
        raise ParameterError("Deslocamentos devem ter a forma 'j,k': '%s'" % text)
    return shifts


def format_complex(value, digits=15):
    value = complex(value)
    return '%.*g%+.*gi' % (digits, value.real, digits, value.imag)

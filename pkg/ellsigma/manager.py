#!/usr/bin/env python
# coding: utf-8
import os
import sys
import unittest

import click

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.dirname(HERE))

ELLSIGMA_COVERAGE = os.environ.get('ELLSIGMA_COVERAGE', None)

if ELLSIGMA_COVERAGE:
    try:
        import coverage
    except ImportError:
        msg = 'Não é possível importar o modulo coverage'
        raise RuntimeError(msg)
    COV = coverage.coverage(branch=True, include='*/ellsigma/engine/*')
    COV.start()
else:
    COV = None

from flask.cli import FlaskGroup  # noqa
from ellsigma.engine import create_app  # noqa


@click.group(cls=FlaskGroup, create_app=create_app, add_default_commands=False)
def manager():
    """Verificação numérica da orientação sigma equivariante."""


@manager.command()
@click.option('-p', '--pattern', default='test_*.py', help='Padrão dos módulos de teste.')
@click.option('-f', '--failfast', is_flag=True, default=False)
def test(pattern='test_*.py', failfast=False):
    """ Executa tests unitarios.
    Pode definir a variável: ELLSIGMA_CONFIG="path do arquivo de conf para testing"
    antes de executar este comando:
    > export ELLSIGMA_CONFIG="/foo/bar/config.testing" && python manager.py test

    Utilize -p para rodar testes específicos, ex.: test_thom*.'
    Com ELLSIGMA_COVERAGE=1 roda com coverage.
    """
    tests = unittest.TestLoader().discover(os.path.join(HERE, 'tests'), pattern=pattern,
                                           top_level_dir=os.path.dirname(HERE))

    result = unittest.TextTestRunner(verbosity=2, failfast=failfast).run(tests)

    if COV:
        COV.stop()
        COV.save()
        print('Coverage Summary:')
        COV.report()
        COV.erase()

    if result.wasSuccessful():
        return sys.exit()
    else:
        return sys.exit(1)


def main():
    manager()


if __name__ == '__main__':
    main()

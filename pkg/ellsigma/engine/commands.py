# coding: utf-8

"""
    Comandos da linha de comandos, registrados em ``app.cli``:

        eval     avalia σ, σ_d, jets de σ, F, R, a pairing de Weil, φ e pontos especiais
        verify   roda as suítes de verificação e grava o relatório JSON
        suites   lista as suítes conhecidas
"""

import sys
import math
import functools
import logging

import click
from flask import current_app

from .curve import CurveParams, lift, weil_pairing
from .errors import EllSigmaError
from .jets import Jet
from .lattices import spin, preset, phi, ihat
from .theta import (sigma, sigma_jet, sigma_d, parse_theta, truncation_order,
                    DEFAULT_TRUNCATION_TOL)
from .classes import ToyBundle, F_eval, R_eval
from .thom import special_points
from .controllers import (RunConfig, ALL_SUITES, list_suites, run_verification,
                          write_report)
from .utils import (parse_complex, parse_point, parse_int_vector, parse_shifts,
                    format_complex)

logger = logging.getLogger(__name__)

EVAL_TARGETS = ('sigma', 'sigma_d', 'sigma_jet', 'F', 'R', 'weil', 'phi', 'special_points')


def domain_errors(func):
    """Erros do engine vão para o stderr, literalmente, com código de saída 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except EllSigmaError as exc:
            click.echo('Erro: %s' % exc, err=True)
            sys.exit(1)
    return wrapper


def _variables(rank, degree_cap):
    """Raízes de Chern genéricas x_1..x_rank."""
    return [Jet.variable(i, rank, degree_cap) for i in range(rank)]


def _echo_value(label, value, params, z=0j):
    click.echo('%s = %s' % (label, format_complex(value)))
    order = truncation_order(params, math.exp(complex(z).real))
    click.echo('  (tau=%s, |q|=%.3e, N=%d, tol=%.0e)'
               % (format_complex(params.tau), abs(params.q), order, DEFAULT_TRUNCATION_TOL))


def _echo_jet(label, jet, params, z=0j):
    _echo_value(label, jet.constant_term, params, z)
    for mono, value in jet.terms(tol=1e-15).items():
        if any(mono):
            click.echo('  %s: %s' % (','.join(str(e) for e in mono), format_complex(value)))


def _shifts(shifts):
    return parse_shifts(shifts) if shifts else (0, 0)


def register_commands(app):

    @app.cli.command('eval')
    @click.argument('what', type=click.Choice(EVAL_TARGETS))
    @click.option('--tau', default=None, help='Parâmetro da curva ("re,im", "i", ...).')
    @click.option('--z', 'z_values', multiple=True, help='Ponto z (repetir para sigma_d).')
    @click.option('--m', 'm', default='', help='Rotações, p.ex. "1,1".')
    @click.option('--a', 'a', default=None, help='Ponto de torsão "s,t", p.ex. "1/2,0".')
    @click.option('--shifts', default=None, help='Deslocamentos "j,k" do levantamento.')
    @click.option('--theta', default=None, help='Descritor de teta, p.ex. "sigma_d(2)".')
    @click.option('--lattice', default=None, help='Preset de reticulado (default: spin(2d)).')
    @click.option('--degree-cap', type=int, default=None, help='Grau máximo dos jets.')
    @click.option('--torsion-bound', type=int, default=None, help='Ordem máxima de torsão.')
    @domain_errors
    def eval_command(what, tau, z_values, m, a, shifts, theta, lattice, degree_cap,
                     torsion_bound):
        """Avalia uma função do engine e imprime o resultado."""
        config = current_app.config
        params = CurveParams(parse_complex(tau or config['TAU']))
        degree_cap = degree_cap or config['DEGREE_CAP']
        z_list = [parse_complex(value) for value in z_values] or [0j]
        z = z_list[0]

        if what == 'sigma':
            _echo_value('sigma(%s)' % format_complex(z), sigma(z, params), params, z)
        elif what == 'sigma_d':
            _echo_value('sigma_d(%d)' % len(z_list), sigma_d(len(z_list), z_list, params), params)
        elif what == 'sigma_jet':
            _echo_jet('sigma_jet(%s)' % format_complex(z),
                      sigma_jet(z, params, degree_cap), params, z)
        elif what == 'weil':
            point = parse_point(a or '0,0')
            value = weil_pairing(point, lift(point, *_shifts(shifts), params), params)
            _echo_value('w(%s)' % point, value, params)
        elif what == 'phi':
            vector = parse_int_vector(m)
            L = preset(lattice) if lattice else spin(len(vector))
            click.echo('phi(%s) = %d' % (','.join(map(str, vector)), phi(L, vector)))
            click.echo('ihat(%s) = %s' % (','.join(map(str, vector)),
                                          ','.join(map(str, ihat(L, vector)))))
        elif what == 'special_points':
            vector = parse_int_vector(m)
            bound = torsion_bound or config['TORSION_BOUND']
            bundle = ToyBundle.spin(vector, _variables(len(vector), degree_cap))
            for point in special_points(bundle, bound):
                click.echo(str(point))
        else:
            vector = parse_int_vector(m)
            point = parse_point(a or '0,0')
            lifted = lift(point, *_shifts(shifts), params)
            roots = _variables(len(vector), degree_cap)
            if what == 'F':
                descriptor = theta or 'sigma_d(%d)' % len(vector)
                value = F_eval(parse_theta(descriptor), vector, lifted, z, roots, params)
                _echo_jet('F(%s, %s, %s)(%s)' % (descriptor, m, point, format_complex(z)),
                          value, params)
            else:
                bundle = ToyBundle.spin(vector, roots)
                _echo_jet('R(%s, %s)(%s)' % (m, point, format_complex(z)),
                          R_eval(bundle, lifted, z, params), params)

    @app.cli.command('verify')
    @click.argument('suite', default=ALL_SUITES)
    @click.option('--tau', default=None, help='Parâmetro da curva.')
    @click.option('--d', 'spin_rank', type=int, default=None, help='Posto d de Spin(2d).')
    @click.option('--trials', type=int, default=None, help='Tentativas por suíte.')
    @click.option('--seed', type=int, default=None, help='Semente.')
    @click.option('--tol', type=float, default=None, help='Tolerância do resíduo máximo.')
    @click.option('--degree-cap', type=int, default=None, help='Grau máximo D dos jets.')
    @click.option('--torsion-bound', type=int, default=None, help='Ordem máxima de torsão.')
    @click.option('--out', default=None, help='Caminho do relatório JSON.')
    @click.option('--jobs', type=int, default=None, help='Threads para as tentativas.')
    @domain_errors
    def verify_command(suite, **options):
        """Roda a suíte SUITE (ou 'all'); sai com 0 sse todas passam."""
        config = RunConfig.from_app_config(current_app.config, **options)
        report = run_verification(suite, config)
        for result in report.suites:
            click.echo('%-20s %-4s trials=%-5d max_residual=%.3e (%.2fs)'
                       % (result.name, 'ok' if result.passed else 'FAIL', result.trials,
                          result.max_residual, result.wall_time))
            for failure in result.failures:
                click.echo('  tentativa %d (seed=%d): %s'
                           % (failure.trial, failure.seed, failure.error))
        path = write_report(report)
        click.echo('Relatório: %s' % path)
        sys.exit(0 if report.passed else 1)

    @app.cli.command('suites')
    def suites_command():
        """Lista as suítes de verificação."""
        for name, description in list_suites():
            click.echo('%-20s %s' % (name, description))

# coding: utf-8

"""
    Conjunto de funções que agrupam as operações numéricas em suítes de
    verificação e os resultados em estruturas úteis para a linha de comandos
    (RunConfig, Report), evitando que a camada superior acesse diretamente os
    módulos numéricos.
"""

import json
import math
import time
import zlib
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict, field
from typing import List

import numpy

from .curve import CurveParams
from .errors import EllSigmaError, ParameterError
from .jets import DEFAULT_UNIT_TOL
from .theta import DEFAULT_TRUNCATION_TOL
from .suites import SUITES, get_suite, run_trial
from .utils import parse_complex, format_complex

logger = logging.getLogger(__name__)

REPORT_SCHEMA_VERSION = '1'

ALL_SUITES = 'all'

# chaves da configuração do app -> campos da RunConfig
CONFIG_KEYS = {
    'TAU': 'tau',
    'SPIN_RANK': 'spin_rank',
    'TORSION_BOUND': 'torsion_bound',
    'TRIALS': 'trials',
    'SEED': 'seed',
    'TOL': 'tol',
    'DEGREE_CAP': 'degree_cap',
    'JOBS': 'jobs',
    'REPORT_PATH': 'out',
    'SIGMA_TRUNCATION_TOL': 'sigma_truncation_tol',
    'UNIT_TOL': 'unit_tol',
}


# -------- RUNCONFIG --------

@dataclass(frozen=True)
class RunConfig:
    """Parâmetros de uma execução de ``verify``."""

    tau: complex = 1j
    spin_rank: int = 2
    torsion_bound: int = 6
    trials: int = 200
    seed: int = 0
    tol: float = 1e-9
    degree_cap: int = 4
    jobs: int = 1
    out: str = 'report.json'
    sigma_truncation_tol: float = DEFAULT_TRUNCATION_TOL
    unit_tol: float = DEFAULT_UNIT_TOL

    def __post_init__(self):
        object.__setattr__(self, 'tau', parse_complex(self.tau))
        self.validate()

    def validate(self):
        """Levanta ParameterError com a mensagem do primeiro campo inválido."""
        checks = (
            (self.tau.imag > 0, 'Im(tau) deve ser positivo, recebido tau=%s' % self.tau),
            (self.tol > 0, 'tol deve ser positivo, recebido %s' % self.tol),
            (self.trials >= 1, 'trials deve ser >= 1, recebido %s' % self.trials),
            (self.degree_cap >= 2, 'degree_cap deve ser >= 2, recebido %s' % self.degree_cap),
            (self.spin_rank >= 1, 'd deve ser >= 1, recebido %s' % self.spin_rank),
            (self.torsion_bound >= 1,
             'torsion_bound deve ser >= 1, recebido %s' % self.torsion_bound),
            (self.jobs >= 1, 'jobs deve ser >= 1, recebido %s' % self.jobs),
            (self.sigma_truncation_tol > 0,
             'sigma_truncation_tol deve ser positivo, recebido %s' % self.sigma_truncation_tol),
            (self.unit_tol > 0, 'unit_tol deve ser positivo, recebido %s' % self.unit_tol),
        )
        for ok, message in checks:
            if not ok:
                raise ParameterError(message)

    @property
    def params(self):
        return CurveParams(self.tau)

    @classmethod
    def from_app_config(cls, config, **overrides):
        """
        Retorna a RunConfig a partir de ``app.config``; os valores em
        ``overrides`` que não forem None têm prioridade (opções da linha de comandos).
        """
        values = {}
        for key, name in CONFIG_KEYS.items():
            if key in config:
                values[name] = config[key]
        values.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(**values)
        except TypeError as exc:
            raise ParameterError('Configuração inválida: %s' % exc) from None

    def to_dict(self):
        """Eco da configuração para o relatório (tau como "re,im")."""
        data = asdict(self)
        data['tau'] = format_complex(self.tau)
        return data


# -------- REPORT --------

@dataclass(frozen=True)
class TrialFailure:
    """Tentativa interrompida por um erro de domínio ou com resíduo NaN."""

    trial: int
    seed: int
    error: str

    def to_dict(self):
        return asdict(self)


@dataclass
class SuiteResult:
    name: str
    trials: int
    max_residual: float
    passed: bool
    wall_time: float
    failures: List[TrialFailure] = field(default_factory=list)

    def to_dict(self):
        return {
            'name': self.name,
            'trials': self.trials,
            # JSON não tem infinito; uma tentativa falha vira null
            'max_residual': self.max_residual if math.isfinite(self.max_residual) else None,
            'pass': self.passed,
            'wall_time': self.wall_time,
            'failures': [failure.to_dict() for failure in self.failures],
        }


@dataclass
class Report:
    config: RunConfig
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def passed(self):
        return all(result.passed for result in self.suites)

    def to_dict(self):
        return {
            'schema_version': REPORT_SCHEMA_VERSION,
            'config': self.config.to_dict(),
            'suites': [result.to_dict() for result in self.suites],
            'pass': self.passed,
        }


# -------- SUITES --------

def list_suites():
    """Retorna a lista de (nome, descrição) das suítes conhecidas."""
    return [(suite.name, suite.description) for suite in SUITES.values()]


def trial_rng(seed, name, trial):
    """Gerador da tentativa ``trial`` da suíte ``name``: independe da ordem de execução."""
    return numpy.random.default_rng([seed, zlib.crc32(name.encode('utf-8')), trial])


def run_suite(name, config):
    """
    Executa ``config.trials`` tentativas da suíte e retorna o SuiteResult.
    Com ``jobs`` > 1 as tentativas rodam num ThreadPoolExecutor; a agregação
    usa só máximo e contagem. Uma tentativa que levanta EllSigmaError ou
    retorna NaN é registrada como falha (resíduo infinito) sem interromper
    as demais.
    """
    suite = get_suite(name)
    logger.info('Suíte %s: %d tentativas (seed=%d)', name, config.trials, config.seed)
    start = time.perf_counter()

    def one(trial):
        try:
            residual = run_trial(suite, trial_rng(config.seed, name, trial), config)
        except EllSigmaError as exc:
            logger.warning('Suíte %s: tentativa %d (seed=%d) falhou: %s',
                           name, trial, config.seed, exc)
            return math.inf, TrialFailure(trial, config.seed, str(exc))
        if math.isnan(residual):
            logger.warning('Suíte %s: tentativa %d (seed=%d) deu resíduo NaN',
                           name, trial, config.seed)
            return math.inf, TrialFailure(trial, config.seed, 'resíduo NaN')
        return residual, None

    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as executor:
            outcomes = list(executor.map(one, range(config.trials)))
    else:
        outcomes = [one(trial) for trial in range(config.trials)]

    worst = max(residual for residual, _ in outcomes)
    failures = [failure for _, failure in outcomes if failure is not None]
    result = SuiteResult(name, len(outcomes), worst, not failures and worst <= config.tol,
                         time.perf_counter() - start, failures)
    if result.passed:
        logger.info('Suíte %s: resíduo máximo %.3e (ok)', name, worst)
    else:
        logger.warning('Suíte %s: resíduo máximo %.3e > tol %.1e (%d tentativas falharam)',
                       name, worst, config.tol, len(failures))
    return result


def run_verification(suite, config):
    """Executa a suíte pedida (ou todas, com 'all') e retorna o Report."""
    names = list(SUITES) if suite == ALL_SUITES else [get_suite(suite).name]
    return Report(config, [run_suite(name, config) for name in names])


def build_report(report):
    return report.to_dict()


def write_report(report, path=None):
    """Grava o relatório JSON (chaves ordenadas) em ``path`` ou em ``config.out``."""
    path = path or report.config.out
    with open(path, 'w', encoding='utf-8') as handler:
        json.dump(build_report(report), handler, sort_keys=True, indent=2, ensure_ascii=False)
        handler.write('\n')
    logger.info('Relatório gravado em %s', path)
    return path

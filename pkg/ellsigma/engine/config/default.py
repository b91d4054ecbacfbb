# coding: utf-8

import os

"""
  Na configuração padrão, definimos os parâmetros das suítes de verificação nos
  valores de referência (τ = i, Spin(4), torsão de ordem <= 6, grau 4, 200 tentativas).

  Para ajustar configurações, pode definir as variáveis de ambiente (ver abaixo) no seu host,
  ou escrever um arquivo python de configuração e apontar o caminho absoluto
  na variável de ambiente: **ELLSIGMA_CONFIG**, por exemplo:

      1. criar o arquivo: ``vim /foo/var/baz/ellsigma.config.py``, pode consultar o arquivo:
         ``ellsigma/engine/config/default.py``
      2. definir a variável de ambiente **ELLSIGMA_CONFIG**: ``export ELLSIGMA_CONFIG="/foo/var/baz/ellsigma.config.py"``
      3. rodar: ``python manager.py verify all``

  As opções da linha de comandos (--tau, --d, --trials, ...) têm prioridade sobre estes valores.

  Variavies de ambiente:

      - Modo Debug:
        - ELLSIGMA_DEBUG_MODE:   ativa/desativa o modo Debug (logging em DEBUG) (default: False)

      - Curva:
        - ELLSIGMA_TAU:          parâmetro τ da curva, "re,im", "i" ou literal python (default: 'i')

      - Suítes de verificação:
        - ELLSIGMA_SPIN_RANK:    posto d do grupo Spin(2d) dos fibrados de teste (default: 2)
        - ELLSIGMA_TORSION_BOUND: maior ordem dos pontos de torsão amostrados (default: 6)
        - ELLSIGMA_TRIALS:       tentativas por suíte (default: 200)
        - ELLSIGMA_SEED:         semente das sequências aleatórias (default: 0)
        - ELLSIGMA_TOL:          tolerância do resíduo máximo de cada suíte (default: 1e-9)
        - ELLSIGMA_DEGREE_CAP:   grau máximo D dos jets (default: 4)
        - ELLSIGMA_JOBS:         número de threads para as tentativas (default: 1)
        - ELLSIGMA_REPORT_PATH:  caminho do relatório JSON (default: 'report.json')

      - Numérico:
        - ELLSIGMA_SIGMA_TRUNCATION_TOL: alvo do truncamento do produto de σ (default: 1e-17)
        - ELLSIGMA_UNIT_TOL:     limiar de invertibilidade de jets (default: 1e-12)

      - Logging:
        - ELLSIGMA_LOGGING_CONFIG: caminho de um arquivo ini de logging (default: logger.ini desta pasta;
                                   string vazia desativa a configuração por arquivo)

      - Testes:
        - ELLSIGMA_COVERAGE:     se definida, ``python manager.py test`` roda com coverage

"""

PROJECT_PATH = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
HERE = os.path.dirname(os.path.abspath(__file__))

# ativa/desativa o modo Debug
# ELLSIGMA_DEBUG_MODE DEVE SER SEMPRE UM STRING 'False' OR 'True'
DEBUG = os.environ.get('ELLSIGMA_DEBUG_MODE', 'False') == 'True'

# ativa/desativa o modo Testing
TESTING = False

# parâmetro da curva
TAU = os.environ.get('ELLSIGMA_TAU', 'i')

# suítes
SPIN_RANK = int(os.environ.get('ELLSIGMA_SPIN_RANK', 2))
TORSION_BOUND = int(os.environ.get('ELLSIGMA_TORSION_BOUND', 6))
TRIALS = int(os.environ.get('ELLSIGMA_TRIALS', 200))
SEED = int(os.environ.get('ELLSIGMA_SEED', 0))
TOL = float(os.environ.get('ELLSIGMA_TOL', 1e-9))
DEGREE_CAP = int(os.environ.get('ELLSIGMA_DEGREE_CAP', 4))
JOBS = int(os.environ.get('ELLSIGMA_JOBS', 1))
REPORT_PATH = os.environ.get('ELLSIGMA_REPORT_PATH', 'report.json')

# numérico
SIGMA_TRUNCATION_TOL = float(os.environ.get('ELLSIGMA_SIGMA_TRUNCATION_TOL', 1e-17))
UNIT_TOL = float(os.environ.get('ELLSIGMA_UNIT_TOL', 1e-12))

# logging
LOGGING_CONFIG = os.environ.get('ELLSIGMA_LOGGING_CONFIG', os.path.join(HERE, 'logger.ini'))

# coding: utf-8

import logging
import logging.config

from flask import Flask

logger = logging.getLogger(__name__)


def configure_logging(app):
    """Aplica o arquivo ini de logging (``LOGGING_CONFIG``), se definido."""
    path = app.config.get('LOGGING_CONFIG')
    if path:
        logging.config.fileConfig(path, disable_existing_loggers=False)
    if app.config['DEBUG']:
        logging.getLogger('ellsigma').setLevel(logging.DEBUG)
    logger.debug('Logging configurado a partir de: %s', path or '(nenhum arquivo)')


def create_app(config=None):
    app = Flask(__name__, instance_relative_config=False)

    # Configurações
    app.config.from_object('ellsigma.engine.config.default')  # Configuração basica
    app.config.from_envvar('ELLSIGMA_CONFIG', silent=True)  # configuração do ambiente
    if config:
        app.config.update(config)  # sobrescreve (ex.: testes)

    configure_logging(app)

    # Comandos: eval, verify, suites
    from .commands import register_commands
    register_commands(app)

    return app

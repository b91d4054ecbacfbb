# Importa as funções de utils.py
from .utils import *

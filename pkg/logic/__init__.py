"""
逻辑内核：语法、结构与团队、广义量词
"""

from .errors import CheckerError
from .parser import parse, pretty
from .registry import QuantifierRegistry
from .syntax import free_variables

__all__ = [
    'CheckerError',
    'parse',
    'pretty',
    'QuantifierRegistry',
    'free_variables',
]

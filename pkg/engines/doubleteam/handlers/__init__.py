"""
双团队引擎处理器统一导出
"""

from .eval_handler import EvalHandler
from .quantifier_handler import QuantifierHandler

__all__ = [
    'EvalHandler',
    'QuantifierHandler'
]

"""
差分测试处理器统一导出
"""

from .diff_handler import DiffHandler

__all__ = [
    'DiffHandler'
]

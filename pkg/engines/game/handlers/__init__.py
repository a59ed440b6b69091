"""
语义博弈处理器统一导出
"""

from .game_handler import GameHandler

__all__ = [
    'GameHandler'
]

"""
语义博弈引擎包
"""

from .game_engine_client import GameEngineClient

__all__ = ['GameEngineClient']

"""
双团队语义引擎包
"""

from .doubleteam_engine_client import DoubleTeamEngineClient

__all__ = ['DoubleTeamEngineClient']

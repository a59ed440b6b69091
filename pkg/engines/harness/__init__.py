"""
差分测试引擎包
"""

from .harness_engine_client import HarnessEngineClient

__all__ = ['HarnessEngineClient']

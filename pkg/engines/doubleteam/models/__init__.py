"""
双团队引擎数据模型统一导出
"""

# 配置模型
from .config import EvalConfig
# 结果模型
from .verdict import EvalStats, Verdict, FlatnessReport

__all__ = [
    # 配置模型
    'EvalConfig',

    # 结果模型
    'EvalStats',
    'Verdict',
    'FlatnessReport',
]

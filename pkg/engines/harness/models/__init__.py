"""
差分测试数据模型统一导出
"""

# 配置模型
from .corpus_spec import CorpusSpec, CheckKind, HARD_INSTANCE_CAP
# 报告模型
from .report import Status, Instance, InstanceResult, DiffReport

__all__ = [
    # 配置模型
    'CorpusSpec',
    'CheckKind',
    'HARD_INSTANCE_CAP',

    # 报告模型
    'Status',
    'Instance',
    'InstanceResult',
    'DiffReport',
]

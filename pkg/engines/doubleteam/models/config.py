"""
双团队求值配置模型
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalConfig:
    """求值上限配置"""
    max_domain: int = 4  # 论域大小上限
    max_team: int = 6  # 每个节点处团队大小上限
    enumeration_cap: int = 2 ** 16  # 𝕍 选择与见证函数的枚举上限
    memo: bool = True  # 是否记忆化 (节点, U, V) 的判定结果

    def __post_init__(self):
        """验证配置"""
        if self.max_domain < 1:
            raise ValueError("max_domain 必须为正数")
        if self.max_team < 1:
            raise ValueError("max_team 必须为正数")
        if self.enumeration_cap < 1:
            raise ValueError("enumeration_cap 必须为正数")

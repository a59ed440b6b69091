"""
策略搜索上限与搜索结果模型
"""

from dataclasses import dataclass
from typing import Optional

from .strategy import FinalTeams, Strategy


@dataclass(frozen=True)
class GameLimits:
    """搜索上限"""
    max_candidates: int = 2 ** 20  # 尝试的 𝒜 选择总数上限
    max_plays: int = 2 ** 20  # 展开的对局数上限
    max_domain: Optional[int] = None  # 论域大小上限，None 表示不限
    max_team: Optional[int] = None  # 初始团队大小上限，None 表示不限

    def __post_init__(self):
        """验证配置"""
        if self.max_candidates < 1:
            raise ValueError("max_candidates 必须为正数")
        if self.max_plays < 1:
            raise ValueError("max_plays 必须为正数")
        if self.max_domain is not None and self.max_domain < 1:
            raise ValueError("max_domain 必须为正数")
        if self.max_team is not None and self.max_team < 1:
            raise ValueError("max_team 必须为正数")


@dataclass
class SearchResult:
    """一致存活策略搜索结果"""
    strategy: Optional[Strategy]
    exhausted: bool
    candidates: int = 0
    final_teams: Optional[FinalTeams] = None

    @property
    def found(self) -> bool:
        return self.strategy is not None

"""
语义博弈引擎客户端 - 协调策略搜索处理器
"""

import logging
from dataclasses import replace
from typing import Optional

from logic.models import Formula, Structure, Team
from logic.registry import QuantifierRegistry

from .models import GameLimits, SearchResult, Strategy
from .search import enumerate_plays, find_uniform_survival_strategy, verify_strategy
from ..engine_client_interface import IEngineClient
from ..inputs import RunInput

logger = logging.getLogger(__name__)


class GameEngineClient(IEngineClient):
    """语义博弈引擎客户端 - 作为中转站协调各个处理器"""

    def __init__(self, limits: Optional[GameLimits] = None):
        """初始化客户端和各个处理器"""
        self.limits = limits or GameLimits()
        super().__init__()

    def limits_for(self, run_input: RunInput) -> GameLimits:
        """命令行的论域与团队上限"""
        return replace(self.limits, max_domain=run_input.max_domain, max_team=run_input.max_team)

    def search(self, A: Structure, U: Team, V: Team, phi: Formula, registry: QuantifierRegistry,
               limits: Optional[GameLimits] = None) -> SearchResult:
        limits = limits or self.limits
        result = find_uniform_survival_strategy(A, U, V, phi, registry, limits)
        if result.found:
            # 返回的策略总是经过独立验证
            if not verify_strategy(A, U, V, phi, result.strategy, registry, limits):
                logger.error("搜索得到的策略未通过验证")
        return result

    def plays(self, A: Structure, U: Team, V: Team, phi: Formula, strategy: Strategy,
              registry: QuantifierRegistry, limits: Optional[GameLimits] = None):
        return enumerate_plays(A, U, V, phi, strategy, registry, limits or self.limits)

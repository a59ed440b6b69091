"""
求值结果数据模型
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict


@dataclass
class EvalStats:
    """求值计数器"""
    nodes_visited: int = 0
    witness_functions_tried: int = 0
    vchoices_tried: int = 0
    cache_hits: int = 0

    def to_dict(self) -> Dict[str, int]:
        return {
            "nodesVisited": self.nodes_visited,
            "witnessFunctionsTried": self.witness_functions_tried,
            "vChoicesTried": self.vchoices_tried,
            "cacheHits": self.cache_hits,
        }


@dataclass(frozen=True)
class Verdict:
    """双团队求值结果"""
    value: bool
    stats: EvalStats = field(default_factory=EvalStats, compare=False)

    def __bool__(self) -> bool:
        return self.value

    def to_dict(self, engine: str = "double-team") -> Dict[str, Any]:
        return {"verdict": self.value, "engine": engine, "stats": self.stats.to_dict()}


@dataclass(frozen=True)
class FlatnessReport:
    """扁平性检查：双团队判定与逐赋值经典判定的比较"""
    team_value: bool
    fo_value: bool

    @property
    def agree(self) -> bool:
        return self.team_value == self.fo_value

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        return {"teamValue": data["team_value"], "foValue": data["fo_value"], "agree": self.agree}

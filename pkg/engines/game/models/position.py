"""
博弈位置与走法数据模型
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from logic.models import Assignment


class Sign(Enum):
    """位置的符号 #"""
    POSITIVE = "+"
    NEGATIVE = "-"

    def flipped(self) -> "Sign":
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE


@dataclass(frozen=True)
class Position:
    """(t, #, ψ)：赋值、符号与子公式实例编号"""
    assignment: Assignment
    sign: Sign
    node: int

    def __lt__(self, other: "Position") -> bool:
        return (self.node, self.sign.value, self.assignment) < (other.node, other.sign.value, other.assignment)

    def to_dict(self) -> Dict[str, Any]:
        return {"assignment": self.assignment.as_dict(), "sign": self.sign.value, "node": self.node}


class PlayResult(Enum):
    """对局结果"""
    WIN = "win"
    SURVIVE = "survive"
    LOSE = "lose"


class MoveKind(Enum):
    """轮到谁走"""
    FORCED = "forced"  # 否定：无选择
    AGENT = "agent"  # 𝒜 选择
    INTERROGATOR = "interrogator"  # ℐ 选择
    TERMINAL = "terminal"


# 后继：下一个位置，或以 𝒜 存活结束（空集分支）
Continuation = Union[Position, PlayResult]


@dataclass(frozen=True)
class Move:
    """某位置上的走法描述"""
    kind: MoveKind
    # FORCED / INTERROGATOR：后继位置
    successors: Tuple[Continuation, ...] = ()
    # AGENT：(选择, 该选择之后 ℐ 可选的后继)
    options: Tuple[Tuple[Any, Tuple[Continuation, ...]], ...] = ()
    # TERMINAL：结果
    result: Optional[PlayResult] = None

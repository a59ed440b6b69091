"""
策略、终局团队与对局结果数据模型
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

from logic.errors import StrategyError
from logic.models import Assignment, Element, Team

from .position import PlayResult, Position, Sign

OR_SIDES = ("left", "right")


@dataclass(frozen=True)
class OrPick:
    """正析取位置上选择的非空子集 S ⊆ {left, right}"""
    sides: FrozenSet[str]

    def __post_init__(self):
        if not self.sides or not self.sides <= set(OR_SIDES):
            raise StrategyError(f"析取选择必须是 {{left,right}} 的非空子集: {sorted(self.sides)}")

    def to_dict(self) -> Dict[str, List[str]]:
        return {"or": [side for side in OR_SIDES if side in self.sides]}


@dataclass(frozen=True)
class WitnessSet:
    """量词位置上选择的集合 S"""
    elements: FrozenSet[Element]

    def to_dict(self) -> Dict[str, List[Element]]:
        return {"set": sorted(self.elements)}


AgentChoice = Union[OrPick, WitnessSet]


def choice_from_dict(data: Mapping[str, Any]) -> AgentChoice:
    if "or" in data:
        return OrPick(frozenset(data["or"]))
    if "set" in data:
        return WitnessSet(frozenset(str(a) for a in data["set"]))
    raise StrategyError(f"无法识别的策略选择: {data}")


@dataclass
class Strategy:
    """𝒜 的位置策略：位置 -> 选择"""
    choices: Dict[Position, AgentChoice] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.choices)

    def __contains__(self, pos: Position) -> bool:
        return pos in self.choices

    def get(self, pos: Position) -> Optional[AgentChoice]:
        return self.choices.get(pos)

    def with_choice(self, pos: Position, choice: AgentChoice) -> "Strategy":
        """返回加入一个选择后的新策略（原策略不变）"""
        choices = dict(self.choices)
        choices[pos] = choice
        return Strategy(choices)

    def to_list(self) -> List[Dict[str, Any]]:
        """序列化为 JSON 列表，按位置排序"""
        return [{**pos.to_dict(), "choice": self.choices[pos].to_dict()} for pos in sorted(self.choices)]

    @classmethod
    def from_list(cls, data: List[Mapping[str, Any]]) -> "Strategy":
        choices = {}
        for entry in data:
            try:
                pos = Position(Assignment.of(entry["assignment"]), Sign(entry["sign"]), int(entry["node"]))
                choices[pos] = choice_from_dict(entry["choice"])
            except (KeyError, ValueError) as e:
                raise StrategyError(f"策略条目格式错误: {entry}") from e
        return cls(choices)


@dataclass
class FinalTeams:
    """每个广义原子实例的正/负终局赋值团队"""
    per_atom: Dict[int, Tuple[Team, Team]] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            str(node): {"S": S.to_dict(), "T": T.to_dict()}
            for node, (S, T) in sorted(self.per_atom.items())
        }


@dataclass(frozen=True)
class PlayOutcome:
    """一局的终点与结果，附带路径与沿途 𝒜 的选择"""
    terminal: Position
    result: PlayResult
    path: Tuple[Position, ...] = ()
    choices: Tuple[Tuple[Position, AgentChoice], ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {"terminal": self.terminal.to_dict(), "result": self.result.value, "length": len(self.path)}

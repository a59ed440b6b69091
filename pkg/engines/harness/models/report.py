"""
差分测试报告数据模型
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from logic.models import DoubleTeam, Formula, Structure


class Status(Enum):
    """单个实例的检查结果"""
    AGREE = "agree"
    DISCREPANCY = "discrepancy"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Instance:
    """(结构, 双团队, 公式) 实例"""
    index: int
    structure: Structure
    double_team: DoubleTeam
    formula: Formula

    def to_dict(self) -> Dict[str, Any]:
        from logic.parser import pretty
        return {
            "index": self.index,
            "structure": self.structure.to_dict(),
            "doubleTeam": self.double_team.to_dict(),
            "formula": pretty(self.formula),
        }


@dataclass
class InstanceResult:
    """单个实例在各引擎上的判定"""
    instance: Instance
    status: Status
    verdicts: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    shrunk: Optional[Instance] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {**self.instance.to_dict(), "verdicts": self.verdicts}
        if self.error is not None:
            data["error"] = self.error
        if self.shrunk is not None:
            shrunk = self.shrunk.to_dict()
            shrunk.pop("index")
            data["shrunk"] = shrunk
        return data


@dataclass
class DiffReport:
    """差分测试报告"""
    spec: Dict[str, Any]
    checked: int = 0
    agreed: int = 0
    discrepancies: List[InstanceResult] = field(default_factory=list)
    inconclusive: List[InstanceResult] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.discrepancies and not self.inconclusive

    def add(self, result: InstanceResult) -> None:
        self.checked += 1
        if result.status is Status.AGREE:
            self.agreed += 1
        elif result.status is Status.DISCREPANCY:
            self.discrepancies.append(result)
        else:
            self.inconclusive.append(result)

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        data = {
            "spec": self.spec,
            "counts": {
                **self.counts,
                "instances": self.checked,
                "agree": self.agreed,
                "discrepancies": len(self.discrepancies),
                "inconclusive": len(self.inconclusive),
            },
            "passed": self.passed,
            "discrepancies": [r.to_dict() for r in self.discrepancies],
            "inconclusive": [r.to_dict() for r in self.inconclusive],
        }
        if timing and self.wall_time is not None:
            data["wallTime"] = round(self.wall_time, 3)
        return data

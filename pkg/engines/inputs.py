"""
命令行输入 - 读取模型、团队、公式与量词定义文件
"""

import argparse
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, List, Optional

from logic.errors import CheckerError, ModelError, QuantifierDefinitionError, UsageError
from logic.models import DoubleTeam, Formula, Structure
from logic.models.files import DefinitionsFile, load_double_team, load_structure
from logic.parser import parse
from logic.registry import QuantifierRegistry
from logic.syntax import free_variables

logger = logging.getLogger(__name__)


def read_json(path: str, error: type = UsageError) -> Any:
    """读取 JSON 文件；缺失或格式错误时抛出给定的检查器错误"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise UsageError(f"文件不存在: {path}") from None
    except OSError as e:
        raise UsageError(f"无法读取 {path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise error(f"{path} 不是合法的 JSON: {e}") from None


def load_registry(paths: List[str], verify_closure: bool = True) -> QuantifierRegistry:
    """内置名称加上定义文件中的外延量词与原子"""
    definitions = [DefinitionsFile.parse(read_json(p, QuantifierDefinitionError)) for p in paths]
    return QuantifierRegistry(definitions, verify_closure=verify_closure)


def add_run_input_arguments(parser: argparse.ArgumentParser, with_teams: bool = True) -> None:
    """注册 --model/--teams/--formula 等输入参数"""
    parser.add_argument("--model", "-m", required=True, help="结构 JSON 文件")
    if with_teams:
        parser.add_argument("--teams", "-t", nargs="+", default=[],
                            help='双团队文件 {"U":...,"V":...}，或两个团队文件 U.json V.json')
        parser.add_argument("--sentence", action="store_true", help="句子模式：(U,V) = ({∅}, ∅)")
    formula = parser.add_mutually_exclusive_group(required=True)
    formula.add_argument("--formula", "-f", help="公式文本")
    formula.add_argument("--formula-file", help="包含公式文本的文件")
    parser.add_argument("--quantifiers", "-q", nargs="*", default=[], help="量词/原子定义 JSON 文件")
    parser.add_argument("--max-domain", type=int, default=None, help="论域大小上限（team 引擎默认 4，game 引擎默认不限）")
    parser.add_argument("--max-team", type=int, default=None, help="团队大小上限（team 引擎默认 6，game 引擎默认不限）")


@dataclass
class RunInput:
    """一次运行的输入"""
    model_path: str
    formula: Optional[str] = None
    formula_file: Optional[str] = None
    team_paths: List[str] = field(default_factory=list)
    quantifier_paths: List[str] = field(default_factory=list)
    sentence: bool = False
    engine: str = "team"
    max_domain: Optional[int] = None
    max_team: Optional[int] = None

    def __post_init__(self):
        """验证输入"""
        if not self.model_path:
            raise UsageError("需要 --model")
        if (self.formula is None) == (self.formula_file is None):
            raise UsageError("--formula 与 --formula-file 必须且只能给一个")
        if len(self.team_paths) > 2:
            raise UsageError("--teams 最多接受两个文件")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunInput":
        return cls(
            model_path=args.model,
            formula=args.formula,
            formula_file=args.formula_file,
            team_paths=list(getattr(args, "teams", []) or []),
            quantifier_paths=list(args.quantifiers or []),
            sentence=getattr(args, "sentence", False),
            engine=getattr(args, "engine", "team"),
            max_domain=args.max_domain,
            max_team=args.max_team,
        )

    def formula_text(self) -> str:
        if self.formula is not None:
            return self.formula
        try:
            return Path(self.formula_file).read_text(encoding="utf-8").strip()
        except FileNotFoundError:
            raise UsageError(f"文件不存在: {self.formula_file}") from None
        except OSError as e:
            raise UsageError(f"无法读取 {self.formula_file}: {e.strerror or e}") from None

    def load(self) -> "LoadedInput":
        """读取全部文件并解析公式"""
        registry = load_registry(self.quantifier_paths)
        structure = load_structure(read_json(self.model_path, ModelError))
        phi = parse(self.formula_text(), registry)
        double_team = self._double_team(phi)
        logger.info("输入加载完成: 论域大小 %d，团队大小 (%d, %d)",
                    structure.size, len(double_team.U), len(double_team.V))
        return LoadedInput(structure, double_team, phi, registry)

    def _double_team(self, phi: Formula) -> DoubleTeam:
        if self.sentence or not self.team_paths:
            free = free_variables(phi)
            if free:
                raise UsageError(f"公式有自由变量 {sorted(free)}，需要 --teams")
            return DoubleTeam.sentence()
        if len(self.team_paths) == 1:
            return load_double_team(read_json(self.team_paths[0], ModelError))
        data = {"U": read_json(self.team_paths[0], ModelError), "V": read_json(self.team_paths[1], ModelError)}
        return load_double_team(data)


@dataclass
class LoadedInput:
    """已解析的输入"""
    structure: Structure
    double_team: DoubleTeam
    formula: Formula
    registry: QuantifierRegistry


def error_payload(error: Exception) -> dict:
    """错误的 JSON 表示"""
    return {"error": str(error), "kind": type(error).__name__}


__all__ = [
    'RunInput',
    'LoadedInput',
    'add_run_input_arguments',
    'error_payload',
    'load_registry',
    'read_json',
]

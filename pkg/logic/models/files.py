"""
JSON 输入文件模型（pydantic 校验）
"""

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .structure import DoubleTeam, Relation, Structure, Team
from ..errors import ModelError, QuantifierDefinitionError

# JSON 中的元素可以写成字符串或数字，统一读作字符串
Label = Union[str, int]


def _label(value: Label) -> str:
    return str(value)


class RelationEntry(BaseModel):
    """关系条目"""
    arity: int = Field(ge=1)
    tuples: List[List[Label]] = []


class StructureFile(BaseModel):
    """结构文件: {"domain":[...],"relations":{"P":{"arity":1,"tuples":[["0"]]}}}"""
    model_config = ConfigDict(extra="forbid")

    domain: List[Label]
    relations: Dict[str, RelationEntry] = {}

    def to_structure(self) -> Structure:
        return Structure(
            domain=tuple(_label(a) for a in self.domain),
            relations={
                name: Relation(entry.arity, frozenset(tuple(_label(a) for a in row) for row in entry.tuples))
                for name, entry in self.relations.items()
            },
        )


class TeamFile(BaseModel):
    """团队文件: {"vars":["x"],"assignments":[{"x":"0"}]}"""
    vars: Optional[List[str]] = None
    assignments: List[Dict[str, Label]] = []

    def resolved_vars(self) -> Optional[List[str]]:
        if self.vars is not None:
            return self.vars
        if self.assignments:
            return sorted(self.assignments[0])
        return None

    def to_team(self, variables: List[str]) -> Team:
        return Team.of(variables, ({k: _label(v) for k, v in a.items()} for a in self.assignments))


class DoubleTeamFile(BaseModel):
    """双团队文件: {"U":<team>,"V":<team>}，团队也可以直接写成赋值列表"""
    U: TeamFile
    V: TeamFile

    @field_validator("U", "V", mode="before")
    @classmethod
    def _wrap_list(cls, value):
        if isinstance(value, list):
            return {"assignments": value}
        return value

    def to_double_team(self) -> DoubleTeam:
        u, v = self.U, self.V
        shared = u.vars if u.vars is not None else v.vars
        if shared is None:
            shared = u.resolved_vars() or v.resolved_vars() or []
        u_vars = u.vars if u.vars is not None else shared
        v_vars = v.vars if v.vars is not None else shared
        return DoubleTeam(u.to_team(u_vars), v.to_team(v_vars))


class QuantifierEntry(BaseModel):
    """外延量词定义: {"name":"qx","type":[1],"tables":{"2":[[["0"]],[["1"]]]}}"""
    name: str
    type: List[int] = Field(min_length=1)
    tables: Dict[str, List[List[List[Union[Label, List[Label]]]]]] = {}

    @field_validator("type")
    @classmethod
    def _positive(cls, value: List[int]) -> List[int]:
        if any(i < 1 for i in value):
            raise ValueError("类型分量必须为正整数")
        return value


class AtomEntry(BaseModel):
    """广义原子定义: {"name":"a","base":"qx","split":1}"""
    name: str
    base: str
    split: int = Field(ge=0)


class DefinitionsFile(BaseModel):
    """量词定义文件：单个量词、量词列表，或 {"quantifiers":[...],"atoms":[...]}"""
    quantifiers: List[QuantifierEntry] = []
    atoms: List[AtomEntry] = []

    @classmethod
    def parse(cls, data) -> "DefinitionsFile":
        try:
            if isinstance(data, list):
                return cls(quantifiers=data)
            if isinstance(data, dict) and "name" in data:
                return cls(quantifiers=[data])
            return cls.model_validate(data)
        except ValidationError as e:
            raise QuantifierDefinitionError(f"量词定义文件格式错误: {e}") from e


def load_structure(data) -> Structure:
    try:
        return StructureFile.model_validate(data).to_structure()
    except ValidationError as e:
        raise ModelError(f"结构文件格式错误: {e}") from e


def load_double_team(data) -> DoubleTeam:
    try:
        return DoubleTeamFile.model_validate(data).to_double_team()
    except ValidationError as e:
        raise ModelError(f"团队文件格式错误: {e}") from e

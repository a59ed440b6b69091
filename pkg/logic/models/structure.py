"""
有限关系结构、赋值、团队与双团队数据模型
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from typing_extensions import TypeAlias

from .syntax import VarName
from ..errors import ModelError, VariableDomainError

Element: TypeAlias = str
ElementTuple: TypeAlias = Tuple[Element, ...]
RelationSet: TypeAlias = FrozenSet[ElementTuple]


@dataclass(frozen=True)
class Relation:
    """关系解释：元数与元组集合"""
    arity: int
    tuples: RelationSet = frozenset()

    def __post_init__(self):
        if self.arity < 1:
            raise ModelError(f"关系元数必须为正: {self.arity}")
        for row in self.tuples:
            if len(row) != self.arity:
                raise ModelError(f"元组 {row} 的长度与元数 {self.arity} 不一致")


@dataclass(frozen=True)
class Structure:
    """纯关系词汇上的有限模型"""
    domain: Tuple[Element, ...]
    relations: Mapping[str, Relation] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        """结构验证"""
        if not self.domain:
            raise ModelError("论域不能为空")
        if len(set(self.domain)) != len(self.domain):
            raise ModelError(f"论域中有重复元素: {self.domain}")
        elements = set(self.domain)
        for name, relation in self.relations.items():
            for row in relation.tuples:
                outside = [a for a in row if a not in elements]
                if outside:
                    raise ModelError(f"关系 {name} 的元组 {row} 含有论域外元素 {outside}")

    @property
    def size(self) -> int:
        return len(self.domain)

    def relation(self, name: str) -> Relation:
        try:
            return self.relations[name]
        except KeyError:
            raise ModelError(f"结构中没有关系 {name}") from None

    def relabel(self, mapping: Mapping[Element, Element]) -> "Structure":
        """沿论域双射重命名元素"""
        return Structure(
            domain=tuple(mapping[a] for a in self.domain),
            relations={
                name: Relation(rel.arity, frozenset(tuple(mapping[a] for a in row) for row in rel.tuples))
                for name, rel in self.relations.items()
            },
        )

    def restrict(self, keep: Iterable[Element]) -> "Structure":
        """限制到论域的一个非空子集"""
        keep = set(keep)
        return Structure(
            domain=tuple(a for a in self.domain if a in keep),
            relations={
                name: Relation(rel.arity, frozenset(row for row in rel.tuples if set(row) <= keep))
                for name, rel in self.relations.items()
            },
        )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Structure":
        """从 JSON 字典创建结构"""
        from .files import load_structure
        return load_structure(data)

    def to_dict(self) -> Dict[str, Any]:
        """转换为 JSON 字典"""
        return {
            "domain": list(self.domain),
            "relations": {
                name: {"arity": rel.arity, "tuples": [list(row) for row in sorted(rel.tuples)]}
                for name, rel in sorted(self.relations.items())
            },
        }


@dataclass(frozen=True, order=True)
class Assignment:
    """变量赋值，按变量名排序存储以便规范化"""
    bindings: Tuple[Tuple[VarName, Element], ...] = ()

    @classmethod
    def of(cls, mapping: Optional[Mapping[VarName, Element]] = None) -> "Assignment":
        mapping = mapping or {}
        return cls(tuple(sorted((str(k), str(v)) for k, v in mapping.items())))

    @property
    def domain(self) -> FrozenSet[VarName]:
        return frozenset(name for name, _ in self.bindings)

    def __getitem__(self, name: VarName) -> Element:
        for var, value in self.bindings:
            if var == name:
                return value
        raise VariableDomainError(f"赋值 {self.as_dict()} 没有解释变量 {name}")

    def as_dict(self) -> Dict[VarName, Element]:
        return dict(self.bindings)

    def relabel(self, mapping: Mapping[Element, Element]) -> "Assignment":
        return Assignment(tuple((var, mapping[value]) for var, value in self.bindings))

    def values(self) -> FrozenSet[Element]:
        return frozenset(value for _, value in self.bindings)


EMPTY_ASSIGNMENT = Assignment()


@dataclass(frozen=True)
class Team:
    """团队：变量域相同的赋值集合；空团队显式携带变量域"""
    variables: FrozenSet[VarName] = frozenset()
    members: FrozenSet[Assignment] = frozenset()

    def __post_init__(self):
        """团队验证"""
        for s in self.members:
            if s.domain != self.variables:
                raise ModelError(
                    f"赋值 {s.as_dict()} 的变量域与团队变量域 {sorted(self.variables)} 不一致")

    @classmethod
    def empty(cls, variables: Iterable[VarName] = ()) -> "Team":
        return cls(frozenset(variables), frozenset())

    @classmethod
    def unit(cls) -> "Team":
        """{∅}：只含空赋值的团队"""
        return cls(frozenset(), frozenset({EMPTY_ASSIGNMENT}))

    @classmethod
    def of(cls, variables: Iterable[VarName], assignments: Iterable[Mapping[VarName, Element]]) -> "Team":
        return cls(frozenset(variables), frozenset(Assignment.of(a) for a in assignments))

    def __iter__(self) -> Iterator[Assignment]:
        return iter(self.canonical())

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: Assignment) -> bool:
        return s in self.members

    def is_empty(self) -> bool:
        return not self.members

    def canonical(self) -> Tuple[Assignment, ...]:
        """规范顺序（排序后的赋值），用于记忆化键与枚举顺序"""
        return tuple(sorted(self.members))

    def union(self, other: "Team") -> "Team":
        if self.variables != other.variables:
            raise VariableDomainError(
                f"团队变量域不同，无法合并: {sorted(self.variables)} / {sorted(other.variables)}")
        return Team(self.variables, self.members | other.members)

    def subset(self, members: Iterable[Assignment]) -> "Team":
        return Team(self.variables, frozenset(members))

    def relabel(self, mapping: Mapping[Element, Element]) -> "Team":
        return Team(self.variables, frozenset(s.relabel(mapping) for s in self.members))

    def restrict(self, keep: Iterable[Element]) -> "Team":
        """丢弃使用了被删除元素的赋值"""
        keep = set(keep)
        return Team(self.variables, frozenset(s for s in self.members if s.values() <= keep))

    def to_dict(self) -> Dict[str, Any]:
        return {"vars": sorted(self.variables), "assignments": [s.as_dict() for s in self.canonical()]}


@dataclass(frozen=True)
class DoubleTeam:
    """双团队 (U, V)：U 为验证赋值，V 为证伪赋值"""
    U: Team
    V: Team

    def __post_init__(self):
        if self.U.variables != self.V.variables:
            raise ModelError(
                f"双团队的变量域必须相同: {sorted(self.U.variables)} / {sorted(self.V.variables)}")

    @property
    def variables(self) -> FrozenSet[VarName]:
        return self.U.variables

    @classmethod
    def sentence(cls) -> "DoubleTeam":
        """句子约定：({∅}, ∅)"""
        return cls(Team.unit(), Team.empty())

    def swapped(self) -> "DoubleTeam":
        return DoubleTeam(self.V, self.U)

    def relabel(self, mapping: Mapping[Element, Element]) -> "DoubleTeam":
        return DoubleTeam(self.U.relabel(mapping), self.V.relabel(mapping))

    def restrict(self, keep: Iterable[Element]) -> "DoubleTeam":
        return DoubleTeam(self.U.restrict(keep), self.V.restrict(keep))

    @classmethod
    def from_dict(cls, data: Any) -> "DoubleTeam":
        """从 JSON 字典创建双团队"""
        from .files import load_double_team
        return load_double_team(data)

    def to_dict(self) -> Dict[str, Any]:
        return {"U": self.U.to_dict(), "V": self.V.to_dict()}


class VValue(Enum):
    """𝕍 的三个元素：(⊤,⊤), (⊤,⊥), (⊥,⊤)"""
    BOTH = (True, True)
    LEFT = (True, False)
    RIGHT = (False, True)

    @property
    def first(self) -> bool:
        return self.value[0]

    @property
    def second(self) -> bool:
        return self.value[1]


# 固定的字典序，析取子句按此顺序枚举
V_ORDER: List[VValue] = [VValue.BOTH, VValue.LEFT, VValue.RIGHT]

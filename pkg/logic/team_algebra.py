"""
团队代数 - 赋值扩展、团队扩展、补函数、𝕍 分割与投影关系
"""

import itertools
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from typing_extensions import TypeAlias

from .errors import LengthMismatchError, RepetitionError, VariableDomainError
from .models import (
    Assignment, Element, ElementTuple, RelationSet, Structure, Team, VarTuple, VValue
)

WitnessFunction: TypeAlias = Mapping[Assignment, RelationSet]
VChoice: TypeAlias = Mapping[Assignment, VValue]


def respects_repetitions(xs: VarTuple, values: ElementTuple) -> bool:
    """值元组是否重复了变量元组中重复变量的对应值"""
    if len(xs) != len(values):
        return False
    seen: Dict[str, Element] = {}
    for var, value in zip(xs, values):
        if seen.setdefault(var, value) != value:
            return False
    return True


def repetition_respecting_tuples(xs: VarTuple, domain: Sequence[Element]) -> List[ElementTuple]:
    """论域上所有遵守 xs 重复模式的元组，按论域顺序的字典序排列"""
    distinct = list(dict.fromkeys(xs))
    rows = []
    for values in itertools.product(domain, repeat=len(distinct)):
        binding = dict(zip(distinct, values))
        rows.append(tuple(binding[var] for var in xs))
    return rows


def extend(s: Assignment, xs: VarTuple, values: ElementTuple) -> Assignment:
    """s[x̄/ā]"""
    if len(xs) != len(values):
        raise LengthMismatchError(f"变量元组 {xs} 与值元组 {values} 长度不一致")
    if not respects_repetitions(xs, values):
        raise RepetitionError(f"值元组 {values} 没有遵守变量元组 {xs} 的重复")
    bindings = s.as_dict()
    bindings.update(zip(xs, values))
    return Assignment.of(bindings)


def extend_by_set(s: Assignment, xs: VarTuple, rows: Iterable[ElementTuple]) -> Team:
    """s[x̄/T] = { s[x̄/ā] | ā ∈ T }，s[x̄/∅] = ∅"""
    variables = s.domain | frozenset(xs)
    return Team(variables, frozenset(extend(s, xs, row) for row in rows))


def team_extend(V: Team, xs: VarTuple, f: WitnessFunction) -> Team:
    """V[x̄/f] = ⋃_{s∈V} s[x̄/f(s)]；V 为空时结果为空团队"""
    variables = V.variables | frozenset(xs)
    members = set()
    for s in V.members:
        if s not in f:
            raise VariableDomainError(f"函数在团队成员 {s.as_dict()} 上未定义")
        members.update(extend(s, xs, row) for row in f[s])
    return Team(variables, frozenset(members))


def complement_fn(f: WitnessFunction, xs: VarTuple, domain: Sequence[Element]) -> Dict[Assignment, RelationSet]:
    """f′(s) = 遵守重复模式的 Aⁿ ∖ f(s)"""
    universe = frozenset(repetition_respecting_tuples(xs, domain))
    return {s: universe - rows for s, rows in f.items()}


def split(U: Team, h: VChoice) -> Tuple[Team, Team, Team, Team]:
    """(U[h1], U[h1′], U[h2], U[h2′])"""
    for s in U.members:
        if s not in h:
            raise VariableDomainError(f"𝕍 选择在团队成员 {s.as_dict()} 上未定义")
    u1 = U.subset(s for s in U.members if h[s].first)
    u1c = U.subset(s for s in U.members if h[s] is VValue.RIGHT)
    u2 = U.subset(s for s in U.members if h[s].second)
    u2c = U.subset(s for s in U.members if h[s] is VValue.LEFT)
    return u1, u1c, u2, u2c


def rel(A: Structure, V: Team, ys: VarTuple) -> FrozenSet[ElementTuple]:
    """Rel(𝔄, V, ȳ)：团队在 ȳ 上的投影关系"""
    missing = set(ys) - V.variables
    if missing:
        raise VariableDomainError(f"变量 {sorted(missing)} 不在团队变量域 {sorted(V.variables)} 中")
    return frozenset(tuple(s[y] for y in ys) for s in V.members)

"""
广义量词 - 成员判定、对偶、逐模型提升、同构封闭性检查与广义原子
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Mapping, Sequence, Set, Tuple

from .errors import ArityError, CapExceededError, QuantifierDefinitionError
from .models import (
    AtomDef, DoubleTeam, Element, ElementTuple, QuantifierDef, QuantifierSource,
    RelationSet, RelationTuple, Structure, VarTuple
)
from .team_algebra import rel, repetition_respecting_tuples

logger = logging.getLogger(__name__)

DEFAULT_LIFT_CAP = 2 ** 16


# =============================================================================
# 成员判定与对偶
# =============================================================================

def check_well_typed(Q: QuantifierDef, domain: Sequence[Element], rels: Sequence[RelationSet]) -> None:
    """检查关系元组是否符合类型签名"""
    if len(rels) != len(Q.type_sig):
        raise ArityError(f"量词 {Q.name} 需要 {len(Q.type_sig)} 个关系，实际 {len(rels)} 个")
    elements = set(domain)
    for j, (arity, relation) in enumerate(zip(Q.type_sig, rels)):
        for row in relation:
            if len(row) != arity:
                raise ArityError(f"量词 {Q.name} 第 {j + 1} 个关系的元组 {row} 长度不是 {arity}")
            if not set(row) <= elements:
                raise ArityError(f"量词 {Q.name} 第 {j + 1} 个关系的元组 {row} 含有论域外元素")


def member(Q: QuantifierDef, A: Structure, rels: Sequence[RelationSet]) -> bool:
    """(A, B1,...,Bn) ∈ Q"""
    rels = tuple(frozenset(r) for r in rels)
    check_well_typed(Q, A.domain, rels)
    return bool(Q.membership(A.domain, rels))


def dual(Q: QuantifierDef) -> QuantifierDef:
    """Q̄：同类型、成员判定逐点取反"""
    if Q.dual_of is not None:
        return Q.dual_of

    def membership(domain, rels, _inner=Q.membership):
        return not _inner(domain, rels)

    return QuantifierDef(
        name=f"dual({Q.name})",
        type_sig=Q.type_sig,
        membership=membership,
        source=Q.source,
        dual_of=Q,
    )


# =============================================================================
# 提升：枚举 Q^𝔄 中遵守重复模式的成员
# =============================================================================

def subsets(rows: Sequence[ElementTuple]) -> Iterator[RelationSet]:
    """二进制计数器顺序枚举子集"""
    for k in range(2 ** len(rows)):
        yield frozenset(row for i, row in enumerate(rows) if k >> i & 1)


def lift(Q: QuantifierDef, A: Structure, patterns: Sequence[VarTuple],
         cap: int = DEFAULT_LIFT_CAP) -> Iterator[RelationTuple]:
    """按确定顺序枚举 Q^𝔄 中所有关系都遵守对应变量元组重复模式的成员"""
    if len(patterns) != len(Q.type_sig):
        raise ArityError(f"量词 {Q.name} 需要 {len(Q.type_sig)} 个变量元组，实际 {len(patterns)} 个")
    candidates = []
    total = 1
    for arity, xs in zip(Q.type_sig, patterns):
        if len(xs) != arity:
            raise ArityError(f"量词 {Q.name} 的变量元组 {xs} 长度不是 {arity}")
        rows = repetition_respecting_tuples(xs, A.domain)
        candidates.append(rows)
        total *= 2 ** len(rows)
    if total > cap:
        raise CapExceededError(f"量词 {Q.name} 的候选关系元组数 {total} 超出枚举上限 {cap}")
    for rels in itertools.product(*(list(subsets(rows)) for rows in candidates)):
        if Q.membership(A.domain, rels):
            yield rels


# =============================================================================
# 同构封闭性
# =============================================================================

@dataclass(frozen=True)
class IsoViolation:
    """同构封闭性反例"""
    quantifier: str
    size: int
    permutation: Tuple[Element, ...]
    relations: RelationTuple
    image: RelationTuple
    accepted: bool

    def to_dict(self) -> Dict[str, object]:
        def dump(rels):
            return [[list(row) for row in sorted(r)] for r in rels]

        return {
            "quantifier": self.quantifier,
            "size": self.size,
            "permutation": {str(i): a for i, a in enumerate(self.permutation)},
            "relations": dump(self.relations),
            "image": dump(self.image),
            "accepted": self.accepted,
        }


def canonical_domain(size: int) -> Tuple[Element, ...]:
    return tuple(str(i) for i in range(size))


def _all_relation_tuples(Q: QuantifierDef, domain: Sequence[Element]) -> Iterator[RelationTuple]:
    pools = [list(subsets(list(itertools.product(domain, repeat=arity)))) for arity in Q.type_sig]
    return itertools.product(*pools)


def _permute(rels: RelationTuple, mapping: Mapping[Element, Element]) -> RelationTuple:
    return tuple(frozenset(tuple(mapping[a] for a in row) for row in r) for r in rels)


def check_iso_closure(Q: QuantifierDef, max_size: int) -> List[IsoViolation]:
    """在所有大小不超过 max_size 的规范论域上暴力检查置换不变性

    每个被接受/拒绝不一致的关系元组只报告第一个见证置换。
    """
    violations = []
    for size in range(1, max_size + 1):
        domain = canonical_domain(size)
        perms = list(itertools.permutations(domain))
        for rels in _all_relation_tuples(Q, domain):
            verdict = bool(Q.membership(domain, rels))
            for perm in perms[1:]:
                mapping = dict(zip(domain, perm))
                image = _permute(rels, mapping)
                if bool(Q.membership(domain, image)) != verdict:
                    violations.append(IsoViolation(Q.name, size, perm, rels, image, verdict))
                    break
    if violations:
        logger.info("量词 %s 有 %d 处同构封闭性反例", Q.name, len(violations))
    return violations


# =============================================================================
# 广义原子
# =============================================================================

def atom_holds(atom: AtomDef, A: Structure, dt: DoubleTeam,
               pos_args: Sequence[VarTuple], neg_args: Sequence[VarTuple]) -> bool:
    """(Rel(U,ȳ1),...,Rel(U,ȳn),Rel(V,ȳn+1),...,Rel(V,ȳn+m)) ∈ Q^𝔄"""
    if len(pos_args) != atom.split_n or len(neg_args) != len(atom.base.type_sig) - atom.split_n:
        raise ArityError(
            f"原子 {atom.name} 的类型为 ({atom.pos_type}, {atom.neg_type})，"
            f"实际参数 {len(pos_args)} ; {len(neg_args)} 个")
    rels = [rel(A, dt.U, ys) for ys in pos_args] + [rel(A, dt.V, ys) for ys in neg_args]
    return member(atom.base, A, rels)


# =============================================================================
# 内置量词与原子
# =============================================================================

def _power(domain: Sequence[Element], arity: int) -> int:
    return len(domain) ** arity


def cardinality_quantifier(name: str, arity: int, test) -> QuantifierDef:
    """由关系基数定义的类型 (i) 量词；test(|B|, |A^i|) -> bool"""

    def membership(domain, rels):
        return test(len(rels[0]), _power(domain, arity))

    return QuantifierDef(name=name, type_sig=(arity,), membership=membership)


def builtin_quantifier(base: str, param, arity: int, name: str) -> QuantifierDef:
    """按基名构造内置量词"""
    tests = {
        "exists": lambda b, total: b > 0,
        "forall": lambda b, total: b == total,
        "even": lambda b, total: b % 2 == 0,
        "majority": lambda b, total: 2 * b > total,
        "empty": lambda b, total: False,
        "full": lambda b, total: True,
    }
    if base in tests:
        if param is not None:
            raise QuantifierDefinitionError(f"量词 {base} 不接受参数")
        return cardinality_quantifier(name, arity, tests[base])
    if base in ("at_least", "exactly"):
        if param is None:
            raise QuantifierDefinitionError(f"量词 {base} 需要参数，例如 {base}<2>")
        if base == "at_least":
            return cardinality_quantifier(name, arity, lambda b, total: b >= param)
        return cardinality_quantifier(name, arity, lambda b, total: b == param)
    if base == "most":
        if param is not None or arity != 1:
            raise QuantifierDefinitionError("量词 most 的类型固定为 (1,1)")

        def most(domain, rels):
            first, second = rels
            return len(first & second) > len(first - second)

        return QuantifierDef(name=name, type_sig=(1, 1), membership=most)
    raise QuantifierDefinitionError(f"未知的内置量词: {base}")


BUILTIN_QUANTIFIER_BASES = ("exists", "forall", "at_least", "exactly", "even", "majority", "empty", "full", "most")
BUILTIN_ATOM_BASES = ("none", "double", "releq", "dep")


def builtin_atom(base: str, param, name: str) -> AtomDef:
    """按基名构造内置原子"""
    if base == "none":
        if param is not None:
            raise QuantifierDefinitionError("原子 none 不接受参数")
        quantifier = QuantifierDef(name="none", type_sig=(1, 1), membership=lambda domain, rels: False)
        return AtomDef(name=name, base=quantifier, split_n=1)
    k = 1 if param is None else param
    if k < 1:
        raise QuantifierDefinitionError(f"原子 {name} 的参数必须为正整数")
    if base == "double":
        quantifier = QuantifierDef(
            name=name, type_sig=(k, k),
            membership=lambda domain, rels: len(rels[1]) == 2 * len(rels[0]))
        return AtomDef(name=name, base=quantifier, split_n=1)
    if base == "releq":
        quantifier = QuantifierDef(
            name=name, type_sig=(k, k),
            membership=lambda domain, rels: rels[0] == rels[1])
        return AtomDef(name=name, base=quantifier, split_n=1)
    if base == "dep":
        k = 2 if param is None else param

        def functional(domain, rels):
            seen: Dict[ElementTuple, Element] = {}
            for row in rels[0]:
                if seen.setdefault(row[:-1], row[-1]) != row[-1]:
                    return False
            return True

        quantifier = QuantifierDef(name=name, type_sig=(k,), membership=functional)
        return AtomDef(name=name, base=quantifier, split_n=1)
    raise QuantifierDefinitionError(f"未知的内置原子: {base}")


# =============================================================================
# 外延量词
# =============================================================================

def extensional_quantifier(name: str, type_sig: Sequence[int],
                           tables: Mapping[int, Set[RelationTuple]]) -> QuantifierDef:
    """按规范论域 {0..k-1} 上的接受表定义量词，经论域顺序双射搬运到任意模型

    未列出的大小上拒绝一切关系元组。
    """
    type_sig = tuple(type_sig)
    frozen_tables: Dict[int, FrozenSet[RelationTuple]] = {size: frozenset(rows) for size, rows in tables.items()}

    def membership(domain, rels):
        accepted = frozen_tables.get(len(domain))
        if not accepted:
            return False
        to_canonical = {a: str(i) for i, a in enumerate(domain)}
        return _permute(tuple(rels), to_canonical) in accepted

    return QuantifierDef(name=name, type_sig=type_sig, membership=membership,
                         source=QuantifierSource.EXTENSIONAL)

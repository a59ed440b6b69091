"""
双团队语义求值器与经典（单赋值）求值器
"""

import itertools
import logging
import threading
from typing import Dict, Hashable, Optional, Tuple

from logic.errors import (
    ArityError, CapExceededError, UnsupportedFormulaError, VariableDomainError
)
from logic.gq import atom_holds, dual, lift
from logic.models import (
    Assignment, DoubleTeam, Equality, Formula, GAtom, Not, Or, Quant,
    RelAtom, Structure, Team, V_ORDER
)
from logic.registry import QuantifierRegistry
from logic.syntax import free_variables, has_generalized_atoms
from logic.team_algebra import (
    complement_fn, extend, repetition_respecting_tuples, split, team_extend
)

from .models import EvalConfig, EvalStats, FlatnessReport, Verdict

logger = logging.getLogger(__name__)

MemoKey = Tuple[int, frozenset, frozenset, frozenset]


class VerdictCache:
    """(节点编号, U, V) -> 判定 的共享缓存

    只对同一个 (结构, 公式, 名称表) 有效；写入是先到先得，已存的判定不会被覆盖。
    """

    def __init__(self):
        self._entries: Dict[Hashable, bool] = {}
        self._lock = threading.Lock()

    def get(self, key: Hashable) -> Optional[bool]:
        return self._entries.get(key)

    def insert(self, key: Hashable, value: bool) -> bool:
        with self._lock:
            return self._entries.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._entries)


# =============================================================================
# 经典语义
# =============================================================================

def atomic_fo(A: Structure, s: Assignment, phi: Formula) -> bool:
    """等式与关系原子的经典真值"""
    if isinstance(phi, Equality):
        return s[phi.y1] == s[phi.y2]
    relation = A.relation(phi.rel)
    if len(phi.args) != relation.arity:
        raise ArityError(f"关系 {phi.rel} 的元数为 {relation.arity}，公式中给了 {len(phi.args)} 个参数")
    return tuple(s[y] for y in phi.args) in relation.tuples


def eval_fo(A: Structure, s: Assignment, phi: Formula,
            registry: Optional[QuantifierRegistry] = None) -> bool:
    """𝔄, s ⊨_FO φ；广义量词用见证集合子句"""
    registry = registry if registry is not None else QuantifierRegistry()
    missing = free_variables(phi) - s.domain
    if missing:
        raise VariableDomainError(f"赋值没有解释自由变量 {sorted(missing)}")
    return _fo(A, s, phi, registry)


def _fo(A: Structure, s: Assignment, phi: Formula, registry: QuantifierRegistry) -> bool:
    if isinstance(phi, (Equality, RelAtom)):
        return atomic_fo(A, s, phi)
    if isinstance(phi, Not):
        return not _fo(A, s, phi.sub, registry)
    if isinstance(phi, Or):
        return _fo(A, s, phi.left, registry) or _fo(A, s, phi.right, registry)
    if isinstance(phi, Quant):
        quantifier = registry.quantifier(phi.qname)
        witnesses = tuple(
            frozenset(row for row in repetition_respecting_tuples(xs, A.domain)
                      if _fo(A, extend(s, xs, row), sub, registry))
            for xs, sub in zip(phi.tuples, phi.subs)
        )
        return bool(quantifier.membership(A.domain, witnesses))
    if isinstance(phi, GAtom):
        raise UnsupportedFormulaError(f"经典语义不解释广义原子 {phi.aname}")
    raise TypeError(f"未知的公式节点: {type(phi).__name__}")


# =============================================================================
# 双团队语义
# =============================================================================

class DoubleTeamEvaluator:
    """𝔄, (U, V) ⊨ φ 的组合式求值器"""

    def __init__(self, structure: Structure, registry: Optional[QuantifierRegistry] = None,
                 config: Optional[EvalConfig] = None, cache: Optional[VerdictCache] = None):
        self.structure = structure
        self.registry = registry if registry is not None else QuantifierRegistry()
        self.config = config or EvalConfig()
        self.shared_cache = cache
        if structure.size > self.config.max_domain:
            raise CapExceededError(f"论域大小 {structure.size} 超出上限 {self.config.max_domain}")

    def evaluate(self, dt: DoubleTeam, phi: Formula) -> Verdict:
        missing = free_variables(phi) - dt.variables
        if missing:
            raise VariableDomainError(
                f"自由变量 {sorted(missing)} 不在双团队变量域 {sorted(dt.variables)} 中")
        stats = EvalStats()
        cache = None
        if self.config.memo:
            cache = self.shared_cache if self.shared_cache is not None else VerdictCache()
        value = self._eval(dt.U, dt.V, phi, stats, cache)
        logger.debug("求值完成: %s，访问节点 %d", value, stats.nodes_visited)
        return Verdict(value, stats)

    def _eval(self, U: Team, V: Team, phi: Formula, stats: EvalStats, cache: Optional[VerdictCache]) -> bool:
        stats.nodes_visited += 1
        if len(U) > self.config.max_team or len(V) > self.config.max_team:
            raise CapExceededError(
                f"节点 {phi.node_id} 处团队大小 ({len(U)}, {len(V)}) 超出上限 {self.config.max_team}")
        key: Optional[MemoKey] = None
        if cache is not None:
            key = (phi.node_id, U.variables, U.members, V.members)
            known = cache.get(key)
            if known is not None:
                stats.cache_hits += 1
                return known
        value = self._clause(U, V, phi, stats, cache)
        if cache is not None:
            value = cache.insert(key, value)
        return value

    def _clause(self, U: Team, V: Team, phi: Formula, stats: EvalStats, cache: Optional[VerdictCache]) -> bool:
        A = self.structure
        if isinstance(phi, (Equality, RelAtom)):
            return (all(atomic_fo(A, s, phi) for s in U.canonical())
                    and not any(atomic_fo(A, t, phi) for t in V.canonical()))
        if isinstance(phi, Not):
            return self._eval(V, U, phi.sub, stats, cache)
        if isinstance(phi, Or):
            return self._disjunction(U, V, phi, stats, cache)
        if isinstance(phi, Quant):
            return self._quantifier(U, V, phi, stats, cache)
        if isinstance(phi, GAtom):
            atom = self.registry.atom(phi.aname)
            return atom_holds(atom, A, DoubleTeam(U, V), phi.pos_args, phi.neg_args)
        raise TypeError(f"未知的公式节点: {type(phi).__name__}")

    def _disjunction(self, U: Team, V: Team, phi: Or, stats: EvalStats, cache: Optional[VerdictCache]) -> bool:
        members = U.canonical()
        if 3 ** len(members) > self.config.enumeration_cap:
            raise CapExceededError(f"析取节点 {phi.node_id} 的 𝕍 选择数 3^{len(members)} 超出枚举上限")
        for values in itertools.product(V_ORDER, repeat=len(members)):
            stats.vchoices_tried += 1
            u1, u1c, u2, u2c = split(U, dict(zip(members, values)))
            assert u1.members | u2.members == U.members
            if (self._eval(u1, V.union(u1c), phi.left, stats, cache)
                    and self._eval(u2, V.union(u2c), phi.right, stats, cache)):
                return True
        return False

    def _quantifier(self, U: Team, V: Team, phi: Quant, stats: EvalStats, cache: Optional[VerdictCache]) -> bool:
        A = self.structure
        cap = self.config.enumeration_cap
        quantifier = self.registry.quantifier(phi.qname)
        positive = list(lift(quantifier, A, phi.tuples, cap))
        negative = list(lift(dual(quantifier), A, phi.tuples, cap))
        u_members, v_members = U.canonical(), V.canonical()
        # 非空团队到空集没有函数；空团队只有空函数
        candidates = len(positive) ** len(u_members) * len(negative) ** len(v_members)
        if candidates > cap:
            raise CapExceededError(f"量词节点 {phi.node_id} 的见证函数组合数 {candidates} 超出枚举上限 {cap}")
        for f_values in itertools.product(positive, repeat=len(u_members)):
            f = dict(zip(u_members, f_values))
            for g_values in itertools.product(negative, repeat=len(v_members)):
                stats.witness_functions_tried += 1
                g = dict(zip(v_members, g_values))
                if all(self._component(U, V, phi, i, f, g, stats, cache) for i in range(len(phi.subs))):
                    return True
        return False

    def _component(self, U: Team, V: Team, phi: Quant, i: int, f, g, stats, cache) -> bool:
        A = self.structure
        xs = phi.tuples[i]
        fi = {s: rels[i] for s, rels in f.items()}
        gi = {t: rels[i] for t, rels in g.items()}
        positive = team_extend(U, xs, fi).union(team_extend(V, xs, gi))
        negative = team_extend(U, xs, complement_fn(fi, xs, A.domain)).union(
            team_extend(V, xs, complement_fn(gi, xs, A.domain)))
        return self._eval(positive, negative, phi.subs[i], stats, cache)


# =============================================================================
# 对外操作
# =============================================================================

def eval_double_team(A: Structure, dt: DoubleTeam, phi: Formula, config: Optional[EvalConfig] = None,
                     registry: Optional[QuantifierRegistry] = None,
                     cache: Optional[VerdictCache] = None) -> Verdict:
    """𝔄, (U, V) ⊨ φ"""
    return DoubleTeamEvaluator(A, registry, config, cache).evaluate(dt, phi)


def sentence_true(A: Structure, phi: Formula, config: Optional[EvalConfig] = None,
                  registry: Optional[QuantifierRegistry] = None) -> bool:
    """𝔄 ⊨ φ 当且仅当 𝔄, ({∅}, ∅) ⊨ φ"""
    free = free_variables(phi)
    if free:
        raise VariableDomainError(f"句子不能含自由变量: {sorted(free)}")
    return eval_double_team(A, DoubleTeam.sentence(), phi, config, registry).value


def fo_side(A: Structure, dt: DoubleTeam, phi: Formula,
            registry: Optional[QuantifierRegistry] = None) -> bool:
    """∀s∈U (𝔄,s ⊨_FO φ) 且 ∀t∈V (𝔄,t ⊭_FO φ)"""
    registry = registry if registry is not None else QuantifierRegistry()
    if has_generalized_atoms(phi):
        raise UnsupportedFormulaError("经典语义不解释广义原子")
    return (all(eval_fo(A, s, phi, registry) for s in dt.U.canonical())
            and not any(eval_fo(A, t, phi, registry) for t in dt.V.canonical()))


def flatness_check(A: Structure, dt: DoubleTeam, phi: Formula, config: Optional[EvalConfig] = None,
                   registry: Optional[QuantifierRegistry] = None) -> FlatnessReport:
    """比较双团队判定与逐赋值经典判定"""
    registry = registry if registry is not None else QuantifierRegistry()
    if has_generalized_atoms(phi):
        raise UnsupportedFormulaError("扁平性检查不适用于含广义原子的公式")
    fo_value = fo_side(A, dt, phi, registry)
    team_value = eval_double_team(A, dt, phi, config, registry).value
    if team_value != fo_value:
        logger.warning("扁平性不一致: 双团队 %s，经典 %s", team_value, fo_value)
    return FlatnessReport(team_value=team_value, fo_value=fo_value)


__all__ = [
    'VerdictCache',
    'DoubleTeamEvaluator',
    'atomic_fo',
    'eval_fo',
    'eval_double_team',
    'sentence_true',
    'fo_side',
    'flatness_check',
]

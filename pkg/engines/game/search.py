"""
一致存活策略搜索、对局展开与独立验证
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from logic.errors import (
    CapExceededError, IllegalChoiceError, SearchLimitError, StrategyError, VariableDomainError
)
from logic.gq import atom_holds
from logic.models import DoubleTeam, Formula, Structure, Team, VarName
from logic.registry import QuantifierRegistry
from logic.syntax import bound_variables, free_variables

from .models import (
    Continuation, FinalTeams, GameLimits, MoveKind, PlayOutcome, PlayResult, Position,
    SearchResult, Sign, Strategy
)
from .rules import Game

logger = logging.getLogger(__name__)


def _positions(items: Iterable[Continuation]) -> Tuple[Position, ...]:
    return tuple(item for item in items if isinstance(item, Position))


def collect_final_teams(game: Game, scopes: Dict[int, FrozenSet[VarName]],
                        endpoints: Iterable[Position]) -> FinalTeams:
    """按原子实例汇总正/负终局赋值；未到达的原子得到 (∅, ∅)"""
    positive: Dict[int, Set] = {atom.node_id: set() for atom in game.atom_nodes()}
    negative: Dict[int, Set] = {atom.node_id: set() for atom in game.atom_nodes()}
    for pos in endpoints:
        if pos.node in positive:
            (positive if pos.sign is Sign.POSITIVE else negative)[pos.node].add(pos.assignment)
    return FinalTeams({
        node: (Team(scopes[node], frozenset(positive[node])), Team(scopes[node], frozenset(negative[node])))
        for node in positive
    })


def atoms_hold(game: Game, final: FinalTeams) -> bool:
    """每个原子实例在其终局团队上成立"""
    for atom in game.atom_nodes():
        S, T = final.per_atom[atom.node_id]
        if not atom_holds(game.registry.atom(atom.aname), game.structure, DoubleTeam(S, T),
                          atom.pos_args, atom.neg_args):
            return False
    return True


def _check_teams(U: Team, V: Team, phi: Formula) -> None:
    DoubleTeam(U, V)
    missing = free_variables(phi) - U.variables
    if missing:
        raise VariableDomainError(f"自由变量 {sorted(missing)} 不在团队变量域 {sorted(U.variables)} 中")


def _check_limits(A: Structure, U: Team, V: Team, limits: GameLimits) -> None:
    if limits.max_domain is not None and A.size > limits.max_domain:
        raise CapExceededError(f"论域大小 {A.size} 超出上限 {limits.max_domain}")
    if limits.max_team is not None and max(len(U), len(V)) > limits.max_team:
        raise CapExceededError(f"团队大小 ({len(U)}, {len(V)}) 超出上限 {limits.max_team}")


# =============================================================================
# 搜索
# =============================================================================

class StrategySearch:
    """在 𝒜 的选择位置上做深度优先回溯

    待展开位置按发现顺序（先进先出）处理；全部展开后再检查原子的一致性条件。
    """

    def __init__(self, structure: Structure, U: Team, V: Team, phi: Formula,
                 registry: Optional[QuantifierRegistry] = None, limits: Optional[GameLimits] = None):
        _check_teams(U, V, phi)
        self.game = Game(structure, phi, registry)
        self.U, self.V = U, V
        self.limits = limits or GameLimits()
        _check_limits(structure, U, V, self.limits)
        self.scopes = bound_variables(phi, U.variables)
        self.candidates = 0

    def run(self) -> SearchResult:
        initial = tuple(self.game.initial_positions(self.U, self.V))
        found = self._solve(Strategy(), initial, frozenset())
        if found is None:
            logger.info("搜索穷尽，没有一致存活策略（尝试 %d 个选择）", self.candidates)
            return SearchResult(strategy=None, exhausted=True, candidates=self.candidates)
        strategy, visited = found
        final = collect_final_teams(self.game, self.scopes, visited)
        return SearchResult(strategy=strategy, exhausted=False, candidates=self.candidates, final_teams=final)

    def _solve(self, strategy: Strategy, pending: Tuple[Position, ...],
               visited: FrozenSet[Position]) -> Optional[Tuple[Strategy, FrozenSet[Position]]]:
        seen = set(visited)
        queue = list(pending)
        while queue:
            pos = queue.pop(0)
            if pos in seen:
                continue
            seen.add(pos)
            move = self.game.transitions(pos)
            if move.kind is MoveKind.TERMINAL:
                if move.result is PlayResult.LOSE:
                    return None
                continue
            if move.kind is not MoveKind.AGENT:
                queue.extend(_positions(move.successors))
                continue
            frozen = frozenset(seen)
            for choice, continuation in move.options:
                self.candidates += 1
                if self.candidates > self.limits.max_candidates:
                    raise SearchLimitError(f"策略搜索超出候选上限 {self.limits.max_candidates}")
                found = self._solve(strategy.with_choice(pos, choice),
                                    tuple(queue) + _positions(continuation), frozen)
                if found is not None:
                    return found
            return None
        final = collect_final_teams(self.game, self.scopes, seen)
        if atoms_hold(self.game, final):
            return strategy, frozenset(seen)
        return None


def find_uniform_survival_strategy(A: Structure, U: Team, V: Team, phi: Formula,
                                   registry: Optional[QuantifierRegistry] = None,
                                   limits: Optional[GameLimits] = None) -> SearchResult:
    """搜索 G(𝔄, U, V, φ) 中 𝒜 的一致存活策略"""
    return StrategySearch(A, U, V, phi, registry, limits).run()


# =============================================================================
# 对局展开与验证
# =============================================================================

def enumerate_plays(A: Structure, U: Team, V: Team, phi: Formula, strategy: Strategy,
                    registry: Optional[QuantifierRegistry] = None,
                    limits: Optional[GameLimits] = None) -> Tuple[List[PlayOutcome], FinalTeams]:
    """按策略展开 ℐ 的所有选择，返回全部对局结果与终局团队"""
    _check_teams(U, V, phi)
    limits = limits or GameLimits()
    _check_limits(A, U, V, limits)
    game = Game(A, phi, registry)
    outcomes: List[PlayOutcome] = []
    stack: List[Tuple[Continuation, Tuple[Position, ...], tuple]] = [
        (pos, (), ()) for pos in reversed(game.initial_positions(U, V))
    ]
    while stack:
        item, path, chosen = stack.pop()
        if isinstance(item, PlayResult):
            outcomes.append(PlayOutcome(path[-1], item, path, chosen))
        else:
            path = path + (item,)
            move = game.transitions(item)
            if move.kind is MoveKind.TERMINAL:
                outcomes.append(PlayOutcome(item, move.result, path, chosen))
            elif move.kind is MoveKind.AGENT:
                choice = strategy.get(item)
                if choice is None:
                    raise StrategyError(f"策略在可达位置 {item.to_dict()} 上未定义")
                successors = game.continuations(item, choice)
                stack.extend((nxt, path, chosen + ((item, choice),)) for nxt in reversed(successors))
            else:
                stack.extend((nxt, path, chosen) for nxt in reversed(move.successors))
        if len(outcomes) > limits.max_plays:
            raise SearchLimitError(f"对局数超出上限 {limits.max_plays}")
    endpoints = [outcome.terminal for outcome in outcomes]
    final = collect_final_teams(game, bound_variables(phi, U.variables), endpoints)
    return outcomes, final


def verify_strategy(A: Structure, U: Team, V: Team, phi: Formula, strategy: Strategy,
                    registry: Optional[QuantifierRegistry] = None,
                    limits: Optional[GameLimits] = None) -> bool:
    """独立检查：所有对局都赢或存活，且每个原子实例在终局团队上成立"""
    try:
        outcomes, final = enumerate_plays(A, U, V, phi, strategy, registry, limits)
    except IllegalChoiceError as e:
        logger.info("策略不合法: %s", e)
        return False
    if any(outcome.result is PlayResult.LOSE for outcome in outcomes):
        return False
    return atoms_hold(Game(A, phi, registry), final)

"""
语义博弈规则 - 位置转移
"""

from typing import Dict, List, Optional, Tuple

from logic.errors import GameError, IllegalChoiceError
from logic.gq import dual, lift
from logic.models import (
    Equality, Formula, GAtom, Not, Or, Quant, RelAtom, Structure, Team
)
from logic.registry import QuantifierRegistry
from logic.syntax import index_nodes
from logic.team_algebra import extend

from .models import (
    AgentChoice, Continuation, Move, MoveKind, OrPick, PlayResult, Position, Sign, WitnessSet
)
from ..doubleteam.semantics import atomic_fo

_BOTH = OrPick(frozenset({"left", "right"}))
_LEFT = OrPick(frozenset({"left"}))
_RIGHT = OrPick(frozenset({"right"}))


class Game:
    """G(𝔄, U, V, φ) 的规则：只处理类型 (1) 的量词"""

    def __init__(self, structure: Structure, phi: Formula, registry: Optional[QuantifierRegistry] = None):
        self.structure = structure
        self.phi = phi
        self.registry = registry if registry is not None else QuantifierRegistry()
        self.nodes: Dict[int, Formula] = index_nodes(phi)
        self._witness_sets: Dict[Tuple[int, Sign], List[WitnessSet]] = {}
        for node in self.nodes.values():
            if isinstance(node, Quant) and not self.registry.quantifier(node.qname).is_unary:
                raise GameError(f"博弈只支持类型 (1) 的量词，{node.qname} 的类型为 "
                                f"{self.registry.quantifier(node.qname).type_sig}")

    def initial_positions(self, U: Team, V: Team) -> List[Position]:
        """ℐ 可选的开局位置：U 中的 (s,+,φ) 与 V 中的 (t,−,φ)"""
        root = self.phi.node_id
        return ([Position(s, Sign.POSITIVE, root) for s in U.canonical()]
                + [Position(t, Sign.NEGATIVE, root) for t in V.canonical()])

    def node(self, pos: Position) -> Formula:
        try:
            return self.nodes[pos.node]
        except KeyError:
            raise GameError(f"公式中没有编号为 {pos.node} 的节点") from None

    def witness_sets(self, node: Quant, sign: Sign) -> List[WitnessSet]:
        """正位置为 Q^𝔄，负位置为 Q̄^𝔄，按提升顺序"""
        key = (node.node_id, sign)
        if key not in self._witness_sets:
            quantifier = self.registry.quantifier(node.qname)
            if sign is Sign.NEGATIVE:
                quantifier = dual(quantifier)
            self._witness_sets[key] = [
                WitnessSet(frozenset(row[0] for row in rels[0]))
                for rels in lift(quantifier, self.structure, node.tuples)
            ]
        return self._witness_sets[key]

    def transitions(self, pos: Position) -> Move:
        """当前位置上轮到谁走以及所有合法后继"""
        phi = self.node(pos)
        t, sign = pos.assignment, pos.sign
        if isinstance(phi, (Equality, RelAtom)):
            holds = atomic_fo(self.structure, t, phi)
            won = holds if sign is Sign.POSITIVE else not holds
            return Move(MoveKind.TERMINAL, result=PlayResult.WIN if won else PlayResult.LOSE)
        if isinstance(phi, GAtom):
            return Move(MoveKind.TERMINAL, result=PlayResult.SURVIVE)
        if isinstance(phi, Not):
            return Move(MoveKind.FORCED, successors=(Position(t, sign.flipped(), phi.sub.node_id),))
        if isinstance(phi, Or):
            left, right = phi.left.node_id, phi.right.node_id
            if sign is Sign.NEGATIVE:
                return Move(MoveKind.INTERROGATOR,
                            successors=(Position(t, sign, left), Position(t, sign, right)))
            return Move(MoveKind.AGENT, options=tuple(
                (choice, self._or_continuations(t, phi, choice)) for choice in (_BOTH, _LEFT, _RIGHT)))
        if isinstance(phi, Quant):
            options = self.witness_sets(phi, sign)
            if not options:
                return Move(MoveKind.TERMINAL, result=PlayResult.LOSE)
            return Move(MoveKind.AGENT, options=tuple(
                (choice, self._quantifier_continuations(t, phi, choice)) for choice in options))
        raise GameError(f"未知的公式节点: {type(phi).__name__}")

    def continuations(self, pos: Position, choice: AgentChoice) -> Tuple[Continuation, ...]:
        """𝒜 在 pos 做出 choice 之后 ℐ 的可选后继；不合法的选择抛出 IllegalChoiceError"""
        phi = self.node(pos)
        if isinstance(phi, Or) and pos.sign is Sign.POSITIVE and isinstance(choice, OrPick):
            return self._or_continuations(pos.assignment, phi, choice)
        if isinstance(phi, Quant) and isinstance(choice, WitnessSet):
            if choice in self.witness_sets(phi, pos.sign):
                return self._quantifier_continuations(pos.assignment, phi, choice)
        raise IllegalChoiceError(f"位置 {pos.to_dict()} 上的选择 {choice.to_dict()} 不合法")

    def _or_continuations(self, t, phi: Or, choice: OrPick) -> Tuple[Continuation, ...]:
        left, right = phi.left.node_id, phi.right.node_id
        if choice.sides == {"left", "right"}:
            return Position(t, Sign.POSITIVE, left), Position(t, Sign.POSITIVE, right)
        if choice.sides == {"left"}:
            return Position(t, Sign.POSITIVE, left), Position(t, Sign.NEGATIVE, right)
        return Position(t, Sign.POSITIVE, right), Position(t, Sign.NEGATIVE, left)

    def _quantifier_continuations(self, t, phi: Quant, choice: WitnessSet) -> Tuple[Continuation, ...]:
        xs = phi.tuples[0]
        body = phi.subs[0].node_id
        inside = [a for a in self.structure.domain if a in choice.elements]
        outside = [a for a in self.structure.domain if a not in choice.elements]
        result: List[Continuation] = []
        # ℐ 选 S 且 S = ∅，或选 A∖S 且 A∖S = ∅ 时 𝒜 存活
        result.extend(Position(extend(t, xs, (a,)), Sign.POSITIVE, body) for a in inside)
        if not inside:
            result.append(PlayResult.SURVIVE)
        result.extend(Position(extend(t, xs, (a,)), Sign.NEGATIVE, body) for a in outside)
        if not outside:
            result.append(PlayResult.SURVIVE)
        return tuple(result)

    def atom_nodes(self) -> List[GAtom]:
        return [node for node in self.nodes.values() if isinstance(node, GAtom)]


def transitions(A: Structure, pos: Position, phi: Formula,
                registry: Optional[QuantifierRegistry] = None) -> Move:
    """单个位置的走法（便捷入口）"""
    return Game(A, phi, registry).transitions(pos)


__all__ = ['Game', 'transitions']

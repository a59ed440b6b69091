"""
公式语法工具 - 自由变量、节点索引、变量域与子树替换
"""

from dataclasses import replace
from typing import Dict, FrozenSet, Iterable, Set

from .models import Equality, Formula, GAtom, Not, Or, Quant, RelAtom, VarName


def free_variables(phi: Formula) -> FrozenSet[VarName]:
    """自由变量；量词在第 j 个子公式中约束第 j 个元组中的变量"""
    if isinstance(phi, Equality):
        return frozenset((phi.y1, phi.y2))
    if isinstance(phi, RelAtom):
        return frozenset(phi.args)
    if isinstance(phi, GAtom):
        return frozenset(v for ys in phi.pos_args + phi.neg_args for v in ys)
    if isinstance(phi, Not):
        return free_variables(phi.sub)
    if isinstance(phi, Or):
        return free_variables(phi.left) | free_variables(phi.right)
    if isinstance(phi, Quant):
        result: Set[VarName] = set()
        for xs, sub in zip(phi.tuples, phi.subs):
            result |= free_variables(sub) - set(xs)
        return frozenset(result)
    raise TypeError(f"未知的公式节点: {type(phi).__name__}")


def index_nodes(phi: Formula) -> Dict[int, Formula]:
    """节点编号 -> 子公式实例"""
    return {node.node_id: node for node in phi.walk()}


def bound_variables(phi: Formula, base: Iterable[VarName] = ()) -> Dict[int, FrozenSet[VarName]]:
    """每个节点处赋值的变量域：初始团队变量域加上祖先量词约束的变量"""
    result: Dict[int, FrozenSet[VarName]] = {}

    def visit(node: Formula, scope: FrozenSet[VarName]) -> None:
        result[node.node_id] = scope
        if isinstance(node, Quant):
            for xs, sub in zip(node.tuples, node.subs):
                visit(sub, scope | frozenset(xs))
        else:
            for child in node.children():
                visit(child, scope)

    visit(phi, frozenset(base))
    return result


def renumber(phi: Formula, start: int = 0) -> Formula:
    """按先序重新分配节点编号"""
    counter = [start]

    def visit(node: Formula) -> Formula:
        node_id = counter[0]
        counter[0] += 1
        if isinstance(node, Not):
            return replace(node, node_id=node_id, sub=visit(node.sub))
        if isinstance(node, Or):
            left = visit(node.left)
            return replace(node, node_id=node_id, left=left, right=visit(node.right))
        if isinstance(node, Quant):
            return replace(node, node_id=node_id, subs=tuple(visit(sub) for sub in node.subs))
        return replace(node, node_id=node_id)

    return visit(phi)


def replace_subtree(phi: Formula, node_id: int, new: Formula) -> Formula:
    """把编号为 node_id 的子树换成 new，并重新编号"""

    def visit(node: Formula) -> Formula:
        if node.node_id == node_id:
            return new
        if isinstance(node, Not):
            return replace(node, sub=visit(node.sub))
        if isinstance(node, Or):
            return replace(node, left=visit(node.left), right=visit(node.right))
        if isinstance(node, Quant):
            return replace(node, subs=tuple(visit(sub) for sub in node.subs))
        return node

    return renumber(visit(phi))


def depth(phi: Formula) -> int:
    """原子深度为 0"""
    children = phi.children()
    return 0 if not children else 1 + max(depth(child) for child in children)


def size(phi: Formula) -> int:
    return sum(1 for _ in phi.walk())


def has_generalized_atoms(phi: Formula) -> bool:
    return any(isinstance(node, GAtom) for node in phi.walk())


def quantifier_names(phi: Formula) -> Set[str]:
    return {node.qname for node in phi.walk() if isinstance(node, Quant)}

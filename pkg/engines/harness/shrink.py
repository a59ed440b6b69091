"""
反例贪心缩减
"""

import logging
from typing import Callable, Iterator

from logic.errors import CheckerError
from logic.models import DoubleTeam
from logic.syntax import free_variables, replace_subtree

from .models import Instance

logger = logging.getLogger(__name__)

FailurePredicate = Callable[[Instance], bool]


def _candidates(instance: Instance) -> Iterator[Instance]:
    """比 instance 严格更小的候选：删论域元素、删团队成员、用子公式替换节点"""
    A, dt, phi = instance.structure, instance.double_team, instance.formula
    if A.size > 1:
        for a in A.domain:
            keep = [b for b in A.domain if b != a]
            yield Instance(instance.index, A.restrict(keep), dt.restrict(keep), phi)
    for s in dt.U.canonical():
        yield Instance(instance.index, A, DoubleTeam(dt.U.subset(dt.U.members - {s}), dt.V), phi)
    for t in dt.V.canonical():
        yield Instance(instance.index, A, DoubleTeam(dt.U, dt.V.subset(dt.V.members - {t})), phi)
    for node in phi.walk():
        for child in node.children():
            smaller = replace_subtree(phi, node.node_id, child)
            if free_variables(smaller) <= dt.variables:
                yield Instance(instance.index, A, dt, smaller)


def _still_fails(failing: FailurePredicate, candidate: Instance) -> bool:
    try:
        return failing(candidate)
    except CheckerError:
        return False


def shrink(instance: Instance, failing: FailurePredicate) -> Instance:
    """贪心缩减：接受第一个仍然失败的更小候选，直到没有候选仍失败"""
    current = instance
    steps = 0
    while True:
        for candidate in _candidates(current):
            if _still_fails(failing, candidate):
                current = candidate
                steps += 1
                break
        else:
            break
    logger.info("缩减了 %d 步", steps)
    return current

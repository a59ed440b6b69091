"""
测试共享夹具与 hypothesis 策略
"""

from pathlib import Path
from typing import Dict, Iterable, List

import pytest
from hypothesis import strategies as st

from logic.models import (
    DoubleTeam, Equality, Formula, GAtom, Not, Or, Quant, RelAtom, Relation, Structure, Team
)
from logic.registry import QuantifierRegistry
from logic.syntax import renumber

SPECS_DIR = Path(__file__).resolve().parent.parent / "specs"

VARIABLES = ("x", "y", "z")


def structure(domain: Iterable, **relations: Dict) -> Structure:
    """structure(["0","1"], P=(1, [("0",)]))"""
    return Structure(
        tuple(str(a) for a in domain),
        {name: Relation(arity, frozenset(tuple(str(a) for a in row) for row in rows))
         for name, (arity, rows) in relations.items()},
    )


def team(variables: Iterable[str], *assignments: Dict) -> Team:
    return Team.of(variables, assignments)


def double_team(variables: Iterable[str], U: List[Dict], V: List[Dict]) -> DoubleTeam:
    variables = list(variables)
    return DoubleTeam(team(variables, *U), team(variables, *V))


@pytest.fixture
def registry() -> QuantifierRegistry:
    return QuantifierRegistry()


@pytest.fixture
def two_point() -> Structure:
    """论域 {0,1}，P = {0}，R = {(0,1)}"""
    return structure(["0", "1"], P=(1, [("0",)]), R=(2, [("0", "1")]))


# =============================================================================
# 公式策略
# =============================================================================

_var = st.sampled_from(VARIABLES)
_pair = st.tuples(_var, _var)


def _atoms() -> st.SearchStrategy:
    return st.one_of(
        st.builds(lambda a, b: Equality(y1=a, y2=b), _var, _var),
        st.builds(lambda a: RelAtom(rel="P", args=(a,)), _var),
        st.builds(lambda a, b: RelAtom(rel="R", args=(a, b)), _var, _var),
        st.builds(lambda a, b: GAtom(aname="none", pos_args=((a,),), neg_args=((b,),)), _var, _var),
        st.builds(lambda p: GAtom(aname="dep", pos_args=(p,), neg_args=()), _pair),
    )


def _extend(children: st.SearchStrategy) -> st.SearchStrategy:
    unary_quantifier = st.sampled_from(["exists", "forall", "majority", "dual(empty)", "at_least<2>"])
    return st.one_of(
        st.builds(lambda sub: Not(sub=sub), children),
        st.builds(lambda a, b: Or(left=a, right=b), children, children),
        st.builds(lambda q, x, sub: Quant(qname=q, tuples=((x,),), subs=(sub,)), unary_quantifier, _var, children),
        st.builds(lambda p, sub: Quant(qname="exists[2]", tuples=(p,), subs=(sub,)), _pair, children),
        st.builds(lambda x, y, a, b: Quant(qname="most", tuples=((x,), (y,)), subs=(a, b)),
                  _var, _var, children, children),
    )


formulas: st.SearchStrategy = st.recursive(_atoms(), _extend, max_leaves=12).map(renumber)


def size_of(phi: Formula) -> int:
    return sum(1 for _ in phi.walk())

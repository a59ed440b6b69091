"""
逻辑内核数据模型统一导出
"""

# 语法模型
from .syntax import (
    Formula, Equality, RelAtom, Not, Or, Quant, GAtom,
    VarName, VarTuple, check_var_name, check_var_tuple
)
# 结构与团队模型
from .structure import (
    Element, ElementTuple, RelationSet, Relation, Structure,
    Assignment, EMPTY_ASSIGNMENT, Team, DoubleTeam, VValue, V_ORDER
)
# 量词模型
from .quantifier import QuantifierDef, AtomDef, QuantifierSource, RelationTuple, Membership

__all__ = [
    # 语法模型
    'Formula',
    'Equality',
    'RelAtom',
    'Not',
    'Or',
    'Quant',
    'GAtom',
    'VarName',
    'VarTuple',
    'check_var_name',
    'check_var_tuple',

    # 结构与团队模型
    'Element',
    'ElementTuple',
    'RelationSet',
    'Relation',
    'Structure',
    'Assignment',
    'EMPTY_ASSIGNMENT',
    'Team',
    'DoubleTeam',
    'VValue',
    'V_ORDER',

    # 量词模型
    'QuantifierDef',
    'AtomDef',
    'QuantifierSource',
    'RelationTuple',
    'Membership',
]

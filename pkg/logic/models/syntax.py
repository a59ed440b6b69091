"""
公式语法树数据模型
"""

import re
from dataclasses import dataclass, field
from typing import Iterator, Tuple

from typing_extensions import TypeAlias

from ..errors import FormulaParseError

VarName: TypeAlias = str
VarTuple: TypeAlias = Tuple[VarName, ...]

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def check_var_name(name: str) -> VarName:
    """校验变量名"""
    if not name or not _IDENTIFIER.match(name):
        raise FormulaParseError(f"非法变量名: {name!r}")
    return name


def check_var_tuple(xs) -> VarTuple:
    """校验变量元组（非空，允许重复）"""
    xs = tuple(xs)
    if not xs:
        raise FormulaParseError("变量元组不能为空")
    for name in xs:
        check_var_name(name)
    return xs


@dataclass(frozen=True)
class Formula:
    """公式节点基类

    node_id 不参与比较：两个结构相同的子树相等，但各自保留不同的实例编号。
    """
    node_id: int = field(default=-1, compare=False)

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def walk(self) -> Iterator["Formula"]:
        """先序遍历"""
        yield self
        for child in self.children():
            yield from child.walk()


@dataclass(frozen=True)
class Equality(Formula):
    """y1 = y2"""
    y1: VarName = ""
    y2: VarName = ""


@dataclass(frozen=True)
class RelAtom(Formula):
    """R(y1,...,yk)"""
    rel: str = ""
    args: VarTuple = ()


@dataclass(frozen=True)
class Not(Formula):
    """否定"""
    sub: Formula = None

    def children(self) -> Tuple[Formula, ...]:
        return (self.sub,)


@dataclass(frozen=True)
class Or(Formula):
    """析取"""
    left: Formula = None
    right: Formula = None

    def children(self) -> Tuple[Formula, ...]:
        return self.left, self.right


@dataclass(frozen=True)
class Quant(Formula):
    """广义量词应用 Q x̄1,...,x̄n (φ1,...,φn)"""
    qname: str = ""
    tuples: Tuple[VarTuple, ...] = ()
    subs: Tuple[Formula, ...] = ()

    def children(self) -> Tuple[Formula, ...]:
        return self.subs


@dataclass(frozen=True)
class GAtom(Formula):
    """广义原子 A(ȳ1,...,ȳn ; ȳn+1,...,ȳn+m)"""
    aname: str = ""
    pos_args: Tuple[VarTuple, ...] = ()
    neg_args: Tuple[VarTuple, ...] = ()


ATOMIC_KINDS = (Equality, RelAtom)

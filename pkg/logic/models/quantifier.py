"""
广义量词与广义原子定义模型
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Tuple

from typing_extensions import TypeAlias

from .structure import Element, RelationSet
from ..errors import QuantifierDefinitionError

RelationTuple: TypeAlias = Tuple[RelationSet, ...]
# 成员判定：(论域, (B1,...,Bn)) -> bool
Membership: TypeAlias = Callable[[Tuple[Element, ...], RelationTuple], bool]


class QuantifierSource(Enum):
    """量词来源"""
    BUILTIN = "builtin-parametric"
    EXTENSIONAL = "extensional-table"


@dataclass(frozen=True)
class QuantifierDef:
    """类型为 (i1,...,in) 的广义量词：类型签名 + 成员判定"""
    name: str
    type_sig: Tuple[int, ...]
    membership: Membership = field(compare=False, repr=False)
    source: QuantifierSource = QuantifierSource.BUILTIN
    # 对偶量词记录其来源，dual(dual(Q)) 可以回到 Q
    dual_of: Optional["QuantifierDef"] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        """定义验证"""
        if not self.name:
            raise QuantifierDefinitionError("量词名称不能为空")
        if not self.type_sig or any(i < 1 for i in self.type_sig):
            raise QuantifierDefinitionError(f"量词 {self.name} 的类型签名无效: {self.type_sig}")

    @property
    def is_unary(self) -> bool:
        """类型是否为 (1)"""
        return self.type_sig == (1,)


@dataclass(frozen=True)
class AtomDef:
    """由量词 Q 与分割点 n 定义的广义原子 A_{Q,n}"""
    name: str
    base: QuantifierDef
    split_n: int

    def __post_init__(self):
        """定义验证"""
        if not 0 <= self.split_n <= len(self.base.type_sig):
            raise QuantifierDefinitionError(
                f"原子 {self.name} 的分割点 {self.split_n} 超出基量词类型 {self.base.type_sig}")

    @property
    def pos_type(self) -> Tuple[int, ...]:
        return self.base.type_sig[:self.split_n]

    @property
    def neg_type(self) -> Tuple[int, ...]:
        return self.base.type_sig[self.split_n:]

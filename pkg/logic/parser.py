"""
公式解析与打印 - 基于 lark 的 LALR 语法
"""

from typing import List, Optional, Sequence

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from .errors import FormulaDepthError, FormulaParseError, TypeMismatchError
from .models import Equality, Formula, GAtom, Not, Or, Quant, RelAtom, VarTuple
from .registry import QuantifierRegistry
from .syntax import depth, renumber

# 优先级: ~ > & > |，二元运算左结合。
# E/A 的体是一元层公式：E x. P(x) | R(x) 读作 (E x. P(x)) | R(x)。
FORMULA_GRAMMAR = r"""
?start: disj

?disj: conj
     | disj "|" conj                 -> or_

?conj: unary
     | conj "&" unary                -> and_

?unary: "~" unary                    -> not_
      | "E" NAME "." unary           -> exists
      | "A" NAME "." unary           -> forall
      | atom

?atom: "(" disj ")"
     | NAME "=" NAME                 -> equality
     | NAME "(" names ")"            -> relatom
     | _QOPEN qname ">" vtuple ("," vtuple)* "." "(" disj ("," disj)* ")"  -> quant
     | "@<" qname ">" "(" tuplelist ";" tuplelist ")"                      -> gatom

qname: QNAME
     | "dual" "(" qname ")"          -> qname_dual

names: NAME ("," NAME)*
vtuple: NAME
      | "(" names ")"
tuplelist: (vtuple ("," vtuple)*)?

_QOPEN.2: "Q<"
QNAME: /[A-Za-z_][A-Za-z0-9_]*(<[0-9]+>)?(\[[0-9]+(,[0-9]+)*\])?/
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""

_PARSER = Lark(FORMULA_GRAMMAR, parser="lalr", lexer="contextual")

# 求值器与博弈按公式结构递归，解析时拒绝更深的公式
MAX_NESTING = 200


class FormulaBuilder(Transformer):
    """把语法树转换成 Formula，并按名称表检查量词/原子的类型"""

    def __init__(self, registry: QuantifierRegistry):
        super().__init__()
        self.registry = registry

    # ---- 连接词 ----

    def or_(self, items):
        return Or(left=items[0], right=items[1])

    def and_(self, items):
        left, right = items
        return Not(sub=Or(left=Not(sub=left), right=Not(sub=right)))

    def not_(self, items):
        return Not(sub=items[0])

    def exists(self, items):
        var, body = items
        return self._quant("exists", [(str(var),)], [body])

    def forall(self, items):
        var, body = items
        return self._quant("forall", [(str(var),)], [body])

    # ---- 原子 ----

    def equality(self, items):
        return Equality(y1=str(items[0]), y2=str(items[1]))

    def relatom(self, items):
        return RelAtom(rel=str(items[0]), args=items[1])

    def quant(self, items):
        name, rest = items[0], items[1:]
        tuples = [x for x in rest if isinstance(x, tuple)]
        subs = [x for x in rest if isinstance(x, Formula)]
        return self._quant(name, tuples, subs)

    def gatom(self, items):
        name, pos_args, neg_args = items
        atom = self.registry.atom(name)
        if len(pos_args) != len(atom.pos_type) or len(neg_args) != len(atom.neg_type):
            raise TypeMismatchError(
                f"原子 {name} 的类型为 ({list(atom.pos_type)} ; {list(atom.neg_type)})，"
                f"实际参数为 {len(pos_args)} ; {len(neg_args)} 个元组")
        for xs, arity in zip(pos_args + neg_args, atom.pos_type + atom.neg_type):
            if len(xs) != arity:
                raise TypeMismatchError(f"原子 {name} 的参数元组 {xs} 长度应为 {arity}")
        return GAtom(aname=name, pos_args=tuple(pos_args), neg_args=tuple(neg_args))

    # ---- 名称与元组 ----

    def qname(self, items):
        return str(items[0])

    def qname_dual(self, items):
        return f"dual({items[0]})"

    def names(self, items):
        return tuple(str(t) for t in items)

    def vtuple(self, items):
        head = items[0]
        return (str(head),) if isinstance(head, Token) else head

    def tuplelist(self, items):
        return list(items)

    def _quant(self, name: str, tuples: Sequence[VarTuple], subs: Sequence[Formula]) -> Quant:
        quantifier = self.registry.quantifier(name)
        n = len(quantifier.type_sig)
        if len(tuples) != n or len(subs) != n:
            raise TypeMismatchError(
                f"量词 {name} 的类型为 {quantifier.type_sig}，"
                f"实际有 {len(tuples)} 个变量元组、{len(subs)} 个子公式")
        for xs, arity in zip(tuples, quantifier.type_sig):
            if len(xs) != arity:
                raise TypeMismatchError(f"量词 {name} 的变量元组 {xs} 长度应为 {arity}")
        return Quant(qname=name, tuples=tuple(tuples), subs=tuple(subs))


def parse(text: str, registry: Optional[QuantifierRegistry] = None) -> Formula:
    """解析公式；节点编号按先序分配"""
    registry = registry if registry is not None else QuantifierRegistry()
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as e:
        where = f"第 {e.line} 行第 {e.column} 列" if getattr(e, "line", -1) > 0 else "输入末尾"
        raise FormulaParseError(f"公式语法错误（{where}）: {text!r}") from None
    try:
        phi = FormulaBuilder(registry).transform(tree)
        nesting = depth(phi)
    except VisitError as e:
        if isinstance(e.orig_exc, RecursionError):
            raise FormulaDepthError(f"公式嵌套过深（上限 {MAX_NESTING} 层）") from None
        raise e.orig_exc from None
    except RecursionError:
        raise FormulaDepthError(f"公式嵌套过深（上限 {MAX_NESTING} 层）") from None
    if nesting > MAX_NESTING:
        raise FormulaDepthError(f"公式嵌套深度 {nesting} 超出上限 {MAX_NESTING}")
    return renumber(phi)


# =============================================================================
# 打印
# =============================================================================

def _tuple(xs: VarTuple) -> str:
    return xs[0] if len(xs) == 1 else f"({','.join(xs)})"


def _tuples(groups: Sequence[VarTuple]) -> str:
    return ", ".join(_tuple(xs) for xs in groups)


def _unary(phi: Formula) -> str:
    if isinstance(phi, Or):
        return f"({pretty(phi)})"
    if isinstance(phi, Not):
        return "~" + _unary(phi.sub)
    if isinstance(phi, Equality):
        return f"{phi.y1} = {phi.y2}"
    if isinstance(phi, RelAtom):
        return f"{phi.rel}({', '.join(phi.args)})"
    if isinstance(phi, Quant):
        subs: List[str] = [pretty(sub) for sub in phi.subs]
        return f"Q<{phi.qname}> {_tuples(phi.tuples)} . ({', '.join(subs)})"
    if isinstance(phi, GAtom):
        return f"@<{phi.aname}>({_tuples(phi.pos_args)} ; {_tuples(phi.neg_args)})"
    raise TypeError(f"未知的公式节点: {type(phi).__name__}")


def pretty(phi: Formula) -> str:
    """打印为可再解析的文本；量词总是使用封闭的 Q<...> 形式"""
    if isinstance(phi, Or):
        return f"{pretty(phi.left)} | {_unary(phi.right)}"
    return _unary(phi)

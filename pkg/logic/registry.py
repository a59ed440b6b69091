"""
量词/原子名称表 - 解析内置、参数化、对偶与外延定义的名称
"""

import logging
import re
import threading
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .errors import QuantifierDefinitionError, UnknownNameError
from .gq import (
    BUILTIN_ATOM_BASES, BUILTIN_QUANTIFIER_BASES, builtin_atom, builtin_quantifier,
    canonical_domain, check_iso_closure, dual, extensional_quantifier
)
from .models import AtomDef, QuantifierDef, RelationTuple, check_var_name
from .models.files import AtomEntry, DefinitionsFile, QuantifierEntry

logger = logging.getLogger(__name__)

_NAME = re.compile(
    r"(?P<base>[A-Za-z_][A-Za-z0-9_]*)"
    r"(?:<(?P<param>[0-9]+)>)?"
    r"(?:\[(?P<type>[0-9]+(?:,[0-9]+)*)\])?\Z"
)
_DUAL = re.compile(r"dual\((?P<inner>.+)\)\Z")

# quant-check 未指定定义文件时检查的内置名称
BUILTIN_SAMPLES = (
    "exists", "forall", "at_least<1>", "at_least<2>", "exactly<1>", "even", "majority",
    "empty", "full", "most", "exists[2]", "majority[2]", "dual(majority)",
)
BUILTIN_ATOM_SAMPLES = ("none", "double", "releq", "dep")


def _split_name(name: str) -> Tuple[str, Optional[int], Optional[Tuple[int, ...]]]:
    match = _NAME.match(name.replace(" ", ""))
    if not match:
        raise UnknownNameError(f"无法识别的名称: {name!r}")
    param = match.group("param")
    type_sig = match.group("type")
    return (
        match.group("base"),
        int(param) if param is not None else None,
        tuple(int(i) for i in type_sig.split(",")) if type_sig is not None else None,
    )


def _table_row(entry: QuantifierEntry, size: int, raw) -> RelationTuple:
    """把 JSON 中的一条接受记录转为关系元组；一元分量允许直接写元素"""
    if len(raw) != len(entry.type):
        raise QuantifierDefinitionError(
            f"量词 {entry.name} 大小 {size} 的记录 {raw} 需要 {len(entry.type)} 个关系")
    domain = set(canonical_domain(size))
    rels = []
    for arity, relation in zip(entry.type, raw):
        rows = set()
        for row in relation:
            row = tuple(str(a) for a in row) if isinstance(row, list) else (str(row),)
            if len(row) != arity:
                raise QuantifierDefinitionError(f"量词 {entry.name} 的元组 {row} 长度不是 {arity}")
            if not set(row) <= domain:
                raise QuantifierDefinitionError(f"量词 {entry.name} 的元组 {row} 不在规范论域 0..{size - 1} 中")
            rows.add(row)
        rels.append(frozenset(rows))
    return tuple(rels)


class QuantifierRegistry:
    """量词与原子名称表

    内置名称按需构造并缓存；外延量词在加载时默认做同构封闭性检查。
    """

    def __init__(self, definitions: Optional[Union[DefinitionsFile, Iterable[DefinitionsFile]]] = None,
                 verify_closure: bool = True):
        self.verify_closure = verify_closure
        self._quantifiers: Dict[str, QuantifierDef] = {}
        self._atoms: Dict[str, AtomDef] = {}
        self._loaded_quantifiers: Dict[str, QuantifierDef] = {}
        self._loaded_atoms: Dict[str, AtomEntry] = {}
        self._lock = threading.Lock()
        if isinstance(definitions, DefinitionsFile):
            definitions = [definitions]
        for item in definitions or ():
            self.load(item)

    # =========================================================================
    # 加载
    # =========================================================================

    def load(self, definitions: DefinitionsFile) -> None:
        """加载外延量词与原子定义"""
        for entry in definitions.quantifiers:
            self._check_new_name(entry.name, BUILTIN_QUANTIFIER_BASES)
            tables = {}
            for key, rows in entry.tables.items():
                try:
                    size = int(key)
                except ValueError:
                    raise QuantifierDefinitionError(f"量词 {entry.name} 的表键必须是论域大小: {key!r}") from None
                if size < 1:
                    raise QuantifierDefinitionError(f"量词 {entry.name} 的论域大小必须为正: {size}")
                tables[size] = {_table_row(entry, size, raw) for raw in rows}
            quantifier = extensional_quantifier(entry.name, entry.type, tables)
            if self.verify_closure and tables:
                violations = check_iso_closure(quantifier, max(tables))
                if violations:
                    first = violations[0]
                    raise QuantifierDefinitionError(
                        f"量词 {entry.name} 不是同构封闭的（大小 {first.size}，置换 {list(first.permutation)}）")
            self._loaded_quantifiers[entry.name] = quantifier
            logger.info("加载外延量词: %s 类型 %s", entry.name, tuple(entry.type))
        for entry in definitions.atoms:
            self._check_new_name(entry.name, BUILTIN_ATOM_BASES)
            self._loaded_atoms[entry.name] = entry
            logger.info("加载广义原子: %s (基量词 %s，分割点 %d)", entry.name, entry.base, entry.split)

    def _check_new_name(self, name: str, reserved: Iterable[str]) -> None:
        try:
            check_var_name(name)
        except ValueError:
            raise QuantifierDefinitionError(f"定义名称必须是标识符: {name!r}") from None
        if name in reserved or name == "dual":
            raise QuantifierDefinitionError(f"名称 {name} 与内置名称冲突")

    # =========================================================================
    # 解析
    # =========================================================================

    def quantifier(self, name: str) -> QuantifierDef:
        """按名称解析量词（支持 dual(...)、at_least<k>、exists[2] 等写法）"""
        cached = self._quantifiers.get(name)
        if cached is not None:
            return cached
        resolved = self._resolve_quantifier(name)
        with self._lock:
            return self._quantifiers.setdefault(name, resolved)

    def _resolve_quantifier(self, name: str) -> QuantifierDef:
        match = _DUAL.match(name.replace(" ", ""))
        if match:
            return dual(self.quantifier(match.group("inner")))
        if name in self._loaded_quantifiers:
            return self._loaded_quantifiers[name]
        base, param, type_sig = _split_name(name)
        if base not in BUILTIN_QUANTIFIER_BASES:
            raise UnknownNameError(f"未知的量词: {name}")
        arity = 1
        if type_sig is not None:
            if base == "most" or len(type_sig) != 1 or type_sig[0] < 1:
                raise QuantifierDefinitionError(f"量词 {base} 不接受类型标注 {list(type_sig)}")
            arity = type_sig[0]
        return builtin_quantifier(base, param, arity, name)

    def atom(self, name: str) -> AtomDef:
        """按名称解析广义原子"""
        cached = self._atoms.get(name)
        if cached is not None:
            return cached
        if name in self._loaded_atoms:
            entry = self._loaded_atoms[name]
            resolved = AtomDef(name=name, base=self.quantifier(entry.base), split_n=entry.split)
        else:
            base, param, type_sig = _split_name(name)
            if base not in BUILTIN_ATOM_BASES or type_sig is not None:
                raise UnknownNameError(f"未知的广义原子: {name}")
            resolved = builtin_atom(base, param, name)
        with self._lock:
            return self._atoms.setdefault(name, resolved)

    def loaded_quantifiers(self) -> List[QuantifierDef]:
        return list(self._loaded_quantifiers.values())

    def loaded_atoms(self) -> List[AtomDef]:
        return [self.atom(name) for name in self._loaded_atoms]

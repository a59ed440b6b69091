"""
双团队语义引擎客户端 - 协调求值与量词检查处理器
"""

import logging
from typing import Dict, List, Optional, Sequence

from logic.gq import check_iso_closure
from logic.models import DoubleTeam, Formula, QuantifierDef, Structure
from logic.registry import BUILTIN_ATOM_SAMPLES, BUILTIN_SAMPLES, QuantifierRegistry

from .models import EvalConfig, FlatnessReport, Verdict
from .semantics import eval_double_team, flatness_check, fo_side
from ..engine_client_interface import IEngineClient
from ..inputs import RunInput

logger = logging.getLogger(__name__)


class DoubleTeamEngineClient(IEngineClient):
    """双团队语义引擎客户端 - 作为中转站协调各个处理器"""

    def __init__(self):
        """初始化客户端和各个处理器"""
        super().__init__()

    # =============================================================================
    # 配置
    # =============================================================================

    @staticmethod
    def config_for(run_input: RunInput) -> EvalConfig:
        """命令行覆盖默认上限"""
        defaults = EvalConfig()
        return EvalConfig(
            max_domain=run_input.max_domain or defaults.max_domain,
            max_team=run_input.max_team or defaults.max_team,
        )

    # =============================================================================
    # 求值
    # =============================================================================

    def evaluate(self, A: Structure, dt: DoubleTeam, phi: Formula, registry: QuantifierRegistry,
                 config: Optional[EvalConfig] = None) -> Verdict:
        return eval_double_team(A, dt, phi, config, registry)

    def classical(self, A: Structure, dt: DoubleTeam, phi: Formula, registry: QuantifierRegistry) -> bool:
        return fo_side(A, dt, phi, registry)

    def flatness(self, A: Structure, dt: DoubleTeam, phi: Formula, registry: QuantifierRegistry,
                 config: Optional[EvalConfig] = None) -> FlatnessReport:
        return flatness_check(A, dt, phi, config, registry)

    # =============================================================================
    # 量词同构封闭性
    # =============================================================================

    def quantifiers_to_check(self, registry: QuantifierRegistry, loaded_only: bool) -> List[QuantifierDef]:
        """定义文件中的量词与原子基量词；未给文件时检查内置样例"""
        if loaded_only:
            quantifiers = registry.loaded_quantifiers()
            quantifiers += [atom.base for atom in registry.loaded_atoms()]
        else:
            quantifiers = [registry.quantifier(name) for name in BUILTIN_SAMPLES]
            quantifiers += [registry.atom(name).base for name in BUILTIN_ATOM_SAMPLES]
        unique: Dict[str, QuantifierDef] = {}
        for quantifier in quantifiers:
            unique.setdefault(quantifier.name, quantifier)
        return list(unique.values())

    def closure_report(self, quantifiers: Sequence[QuantifierDef], max_size: int) -> List[dict]:
        report = []
        for quantifier in quantifiers:
            violations = check_iso_closure(quantifier, max_size)
            logger.info("量词 %s: %d 处反例", quantifier.name, len(violations))
            report.append({
                "name": quantifier.name,
                "type": list(quantifier.type_sig),
                "source": quantifier.source.value,
                "closed": not violations,
                "violations": [v.to_dict() for v in violations],
            })
        return report

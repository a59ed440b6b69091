"""
差分检查 - 在语料上比较双团队语义与经典语义、博弈语义、否定律和记忆化
"""

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from logic.errors import CheckerError, HarnessError
from logic.models import DoubleTeam, Not
from logic.registry import QuantifierRegistry
from logic.syntax import renumber

from .corpus import Corpus
from .models import CorpusSpec, DiffReport, Instance, InstanceResult, Status
from .shrink import shrink
from ..doubleteam.models import EvalConfig
from ..doubleteam.semantics import eval_double_team, fo_side
from ..game.models import GameLimits
from ..game.search import find_uniform_survival_strategy, verify_strategy

logger = logging.getLogger(__name__)

Verdicts = Dict[str, Any]

# 线程池每个工作线程一次最多领取的实例数
BATCH_PER_WORKER = 64


def batched(items: Iterable[Instance], size: int) -> Iterator[List[Instance]]:
    """按顺序切成不超过 size 的批次，只在内存中保留当前批次"""
    iterator = iter(items)
    while True:
        batch = list(itertools.islice(iterator, size))
        if not batch:
            return
        yield batch


class DifferentialRunner:
    """对一份语料配置逐实例运行所选检查"""

    def __init__(self, spec: CorpusSpec, registry: Optional[QuantifierRegistry] = None):
        self.spec = spec
        self.registry = registry if registry is not None else QuantifierRegistry()
        self.config = EvalConfig(
            max_domain=spec.eval_max_domain,
            max_team=spec.eval_max_team,
            enumeration_cap=spec.enumeration_cap,
        )
        self.limits = GameLimits(max_candidates=spec.game_max_candidates)
        self._checks: Dict[str, Callable[[Instance], Tuple[bool, Verdicts]]] = {
            "flatness": self._flatness,
            "game": self._game,
            "negation": self._negation,
            "memo": self._memo,
        }
        if spec.check == "game":
            for qname in spec.quantifiers:
                if not self.registry.quantifier(qname).is_unary:
                    raise HarnessError(f"博弈检查只接受类型 (1) 的量词: {qname}")
        if spec.check == "flatness" and spec.atoms:
            raise HarnessError("扁平性检查不接受广义原子")

    # =============================================================================
    # 单实例检查：返回 (是否一致, 各引擎判定)
    # =============================================================================

    def _team(self, instance: Instance, dt: Optional[DoubleTeam] = None, phi=None, memo: bool = True) -> bool:
        config = self.config if memo else EvalConfig(
            max_domain=self.config.max_domain, max_team=self.config.max_team,
            enumeration_cap=self.config.enumeration_cap, memo=False)
        return eval_double_team(instance.structure, dt or instance.double_team,
                                phi if phi is not None else instance.formula, config, self.registry).value

    def _flatness(self, instance: Instance) -> Tuple[bool, Verdicts]:
        team_value = self._team(instance)
        fo_value = fo_side(instance.structure, instance.double_team, instance.formula, self.registry)
        return team_value == fo_value, {"doubleTeam": team_value, "fo": fo_value}

    def _game(self, instance: Instance) -> Tuple[bool, Verdicts]:
        A, dt, phi = instance.structure, instance.double_team, instance.formula
        team_value = self._team(instance)
        result = find_uniform_survival_strategy(A, dt.U, dt.V, phi, self.registry, self.limits)
        verified = None
        if result.found:
            verified = verify_strategy(A, dt.U, dt.V, phi, result.strategy, self.registry, self.limits)
        verdicts = {
            "doubleTeam": team_value,
            "game": result.found,
            "exhausted": result.exhausted,
            "strategy": result.strategy.to_list() if result.found else None,
            "verified": verified,
        }
        agree = team_value == result.found and verified is not False
        return agree, verdicts

    def _negation(self, instance: Instance) -> Tuple[bool, Verdicts]:
        dt, phi = instance.double_team, instance.formula
        negated = renumber(Not(sub=phi))
        doubled = renumber(Not(sub=Not(sub=phi)))
        value = self._team(instance)
        verdicts = {
            "phi": value,
            "notPhi": self._team(instance, phi=negated),
            "phiSwapped": self._team(instance, dt=dt.swapped()),
            "notNotPhi": self._team(instance, phi=doubled),
        }
        agree = verdicts["notPhi"] == verdicts["phiSwapped"] and verdicts["notNotPhi"] == value
        return agree, verdicts

    def _memo(self, instance: Instance) -> Tuple[bool, Verdicts]:
        with_memo = self._team(instance)
        without_memo = self._team(instance, memo=False)
        return with_memo == without_memo, {"memo": with_memo, "noMemo": without_memo}

    # =============================================================================
    # 运行
    # =============================================================================

    def fails(self, instance: Instance) -> bool:
        """缩减用的失败谓词"""
        agree, _ = self._checks[self.spec.check](instance)
        return not agree

    def check(self, instance: Instance) -> InstanceResult:
        try:
            agree, verdicts = self._checks[self.spec.check](instance)
        except CheckerError as e:
            logger.info("实例 %d 无定论: %s", instance.index, e)
            return InstanceResult(instance, Status.INCONCLUSIVE, error=f"{type(e).__name__}: {e}")
        if agree:
            return InstanceResult(instance, Status.AGREE, verdicts)
        logger.warning("实例 %d 出现分歧: %s", instance.index, verdicts)
        shrunk = shrink(instance, self.fails) if self.spec.shrink else None
        return InstanceResult(instance, Status.DISCREPANCY, verdicts, shrunk=shrunk)

    def run(self) -> DiffReport:
        started = time.perf_counter()
        corpus = Corpus(self.spec, self.registry)
        counts = corpus.check_feasible()
        report = DiffReport(spec=self.spec.echo(), counts=counts)
        instances = corpus.instances()
        if self.spec.workers > 1:
            # 分批提交，map 在批内保持实例顺序，报告与并发度无关
            batch_size = self.spec.workers * BATCH_PER_WORKER
            with ThreadPoolExecutor(max_workers=self.spec.workers) as pool:
                for batch in batched(instances, batch_size):
                    for result in pool.map(self.check, batch):
                        report.add(result)
        else:
            for instance in instances:
                report.add(self.check(instance))
        report.wall_time = time.perf_counter() - started
        logger.info("检查了 %d 个实例: %d 个分歧，%d 个无定论",
                    report.checked, len(report.discrepancies), len(report.inconclusive))
        return report


def run_check(spec: CorpusSpec, registry: Optional[QuantifierRegistry] = None) -> DiffReport:
    """按 spec.check 运行对应的检查"""
    return DifferentialRunner(spec, registry).run()


def diff_flatness(spec: CorpusSpec, registry: Optional[QuantifierRegistry] = None) -> DiffReport:
    """逐实例比较双团队判定与经典判定"""
    if spec.atoms:
        raise HarnessError("扁平性检查的原子列表必须为空")
    return run_check(spec.model_copy(update={"check": "flatness"}), registry)


def diff_game(spec: CorpusSpec, registry: Optional[QuantifierRegistry] = None) -> DiffReport:
    """逐实例比较双团队判定与一致存活策略的存在性"""
    return run_check(spec.model_copy(update={"check": "game"}), registry)


def diff_negation_laws(spec: CorpusSpec, registry: Optional[QuantifierRegistry] = None) -> DiffReport:
    """eval(U,V,~φ) = eval(V,U,φ) 与 eval(~~φ) = eval(φ)"""
    return run_check(spec.model_copy(update={"check": "negation"}), registry)


def diff_memo(spec: CorpusSpec, registry: Optional[QuantifierRegistry] = None) -> DiffReport:
    """记忆化开/关的判定一致"""
    return run_check(spec.model_copy(update={"check": "memo"}), registry)

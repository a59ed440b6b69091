"""
差分测试引擎客户端 - 协调语料加载与差分检查处理器
"""

import logging
from typing import Any, Dict, Optional

from logic.errors import HarnessError
from logic.registry import QuantifierRegistry

from .differential import run_check
from .models import CorpusSpec, DiffReport
from ..engine_client_interface import IEngineClient
from ..inputs import read_json

logger = logging.getLogger(__name__)


class HarnessEngineClient(IEngineClient):
    """差分测试引擎客户端 - 作为中转站协调各个处理器"""

    def __init__(self):
        """初始化客户端和各个处理器"""
        super().__init__()

    @staticmethod
    def load_spec(path: str, overrides: Optional[Dict[str, Any]] = None) -> CorpusSpec:
        """读取语料配置文件；overrides 使用 camelCase 键并重新验证"""
        data = read_json(path, HarnessError)
        if not isinstance(data, dict):
            raise HarnessError(f"{path} 必须是 JSON 对象")
        spec = CorpusSpec.parse(data)
        if overrides:
            spec = CorpusSpec.parse({**spec.echo(), **overrides})
        return spec

    def run(self, spec: CorpusSpec, registry: Optional[QuantifierRegistry] = None) -> DiffReport:
        logger.info("运行 %s 检查", spec.check)
        return run_check(spec, registry)

"""
引擎客户端接口
"""

import importlib
import inspect
import logging
import pkgutil
from abc import ABC
from typing import Any, Dict

from .command_handler_interface import ICommandHandler

logger = logging.getLogger(__name__)


class IEngineClient(ABC):
    """引擎客户端接口"""

    def __init__(self):
        """初始化客户端并自动发现处理器"""
        self.handlers = self._auto_discover_handlers()

    def _auto_discover_handlers(self) -> Dict[str, ICommandHandler]:
        """通过反射自动发现并实例化所有处理器"""
        handlers = {}

        # 例如: engines.game.game_engine_client -> engines.game.handlers
        current_module = self.__class__.__module__
        package_path = '.'.join(current_module.split('.')[:-1])
        handlers_package = f"{package_path}.handlers"

        try:
            handlers_module = importlib.import_module(handlers_package)
        except ImportError as e:
            logger.warning("导入handlers包失败: %s", e)
            return handlers

        for _, module_name, _ in pkgutil.iter_modules(handlers_module.__path__):
            if module_name.startswith('_'):
                continue

            full_module_name = f"{handlers_package}.{module_name}"
            try:
                module = importlib.import_module(full_module_name)
            except ImportError as e:
                logger.warning("导入模块 %s 失败: %s", module_name, e)
                continue

            for name, obj in inspect.getmembers(module, inspect.isclass):
                if (issubclass(obj, ICommandHandler) and
                        obj != ICommandHandler and
                        not inspect.isabstract(obj) and
                        obj.__module__ == full_module_name):
                    handlers[name] = obj(self)
                    logger.info("自动注册处理器: %s", name)

        return handlers

    def register_commands(self, subparsers: Any) -> None:
        """注册所有处理器的子命令

        Args:
            subparsers: argparse 的 subparsers 对象
        """
        for handler in self.handlers.values():
            handler.register_commands(subparsers)

    def get_name(self) -> str:
        """获取客户端名称"""
        return self.__class__.__name__.replace("EngineClient", "")

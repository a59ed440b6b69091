"""
Team Checker - 命令行中转站，自动发现引擎客户端并分发子命令
"""

import importlib
import inspect
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Type

from engines.command_handler_interface import CommandResult, JsonArgumentParser
from engines.engine_client_interface import IEngineClient
from engines.inputs import error_payload
from logic.errors import CheckerError, FormulaDepthError

logger = logging.getLogger(__name__)

EXIT_ERROR = 2


class TeamChecker:
    """Team Checker - 广义量词与广义原子的双团队模型检查器"""

    def __init__(self, client_classes: Optional[List[Type[IEngineClient]]] = None, auto_discover: bool = True):
        """初始化检查器

        Args:
            client_classes: 客户端类列表，将自动实例化并注册
            auto_discover: 是否自动发现客户端（如果client_classes为空时）
        """
        self.clients: List[IEngineClient] = []
        if not client_classes and auto_discover:
            client_classes = self.discover_engine_clients()
        if client_classes:
            self.register_clients(client_classes)

    @classmethod
    def discover_engine_clients(cls) -> List[Type[IEngineClient]]:
        """自动发现 engines 目录下的所有引擎客户端类"""
        client_classes = []
        engines_dir = Path(__file__).parent / "engines"
        if not engines_dir.exists():
            logger.warning("engines 目录不存在: %s", engines_dir)
            return client_classes

        for subdir in sorted(engines_dir.iterdir()):
            if not subdir.is_dir() or subdir.name == "__pycache__":
                continue
            for py_file in sorted(subdir.glob("*_engine_client.py")):
                module_path = f"engines.{subdir.name}.{py_file.stem}"
                try:
                    module = importlib.import_module(module_path)
                except ImportError as e:
                    logger.warning("导入模块失败 %s: %s", module_path, e)
                    continue
                for name, obj in inspect.getmembers(module, inspect.isclass):
                    if (issubclass(obj, IEngineClient) and
                            obj != IEngineClient and
                            not inspect.isabstract(obj) and
                            obj.__module__ == module_path):
                        client_classes.append(obj)
                        logger.info("发现客户端: %s (%s)", name, module_path)
        return client_classes

    def register_clients(self, client_classes: List[Type[IEngineClient]]) -> None:
        for client_class in client_classes:
            client = client_class()
            self.clients.append(client)
            logger.info("%s 客户端注册完成", client.get_name())

    def get_registered_services(self) -> List[str]:
        return [client.get_name() for client in self.clients]

    def build_parser(self) -> JsonArgumentParser:
        parser = JsonArgumentParser(
            prog="team-checker",
            description="有限模型上带广义量词与广义原子的一阶逻辑双团队模型检查器",
        )
        subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=JsonArgumentParser)
        for client in self.clients:
            client.register_commands(subparsers)
        return parser

    def run(self, argv: Optional[List[str]] = None) -> int:
        """解析参数、执行子命令、向标准输出打印一个 JSON 文档，返回退出码"""
        argv = sys.argv[1:] if argv is None else argv
        pretty = "--pretty" in argv
        try:
            args = self.build_parser().parse_args(argv)
            pretty = args.pretty
            if args.verbose:
                logging.getLogger().setLevel(logging.INFO)
            result: CommandResult = args.command(args)
        except (CheckerError, ValueError) as e:
            logger.info("命令失败: %s", e)
            result = CommandResult(error_payload(e), EXIT_ERROR)
        except RecursionError:
            error = FormulaDepthError("递归深度超出解释器上限")
            logger.info("命令失败: %s", error)
            result = CommandResult(error_payload(error), EXIT_ERROR)
        print(json.dumps(result.payload, ensure_ascii=False, indent=2 if pretty else None))
        return result.exit_code


def main():
    """主函数 - 包入口点"""
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    sys.exit(TeamChecker().run())


if __name__ == "__main__":
    main()

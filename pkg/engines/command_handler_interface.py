"""
命令处理器基础接口 - 定义注册子命令的接口
"""

import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict

from logic.errors import UsageError


class JsonArgumentParser(argparse.ArgumentParser):
    """参数错误时抛出 UsageError，而不是打印用法并退出，保证输出始终是 JSON"""

    def error(self, message: str):
        raise UsageError(message)


def common_options() -> argparse.ArgumentParser:
    """所有子命令共享的选项"""
    parser = JsonArgumentParser(add_help=False)
    parser.add_argument("--pretty", action="store_true", help="缩进输出 JSON")
    parser.add_argument("--verbose", "-v", action="store_true", help="在标准错误输出 INFO 日志")
    return parser


@dataclass
class CommandResult:
    """子命令结果：JSON 文档与退出码"""
    payload: Dict[str, Any]
    exit_code: int


class ICommandHandler(ABC):
    """命令处理器基础接口"""

    def __init__(self, client):
        self.client = client

    @abstractmethod
    def register_commands(self, subparsers: Any) -> None:
        """注册子命令到 argparse 的 subparsers"""
        pass

    @staticmethod
    def add_command(subparsers: Any, name: str, help_text: str) -> argparse.ArgumentParser:
        """创建带共享选项的子命令解析器"""
        return subparsers.add_parser(name, help=help_text, description=help_text, parents=[common_options()])

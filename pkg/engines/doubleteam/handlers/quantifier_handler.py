"""
量词检查处理器 - 负责 quant-check 子命令
"""

from typing import Any

from logic.errors import UsageError

from ...command_handler_interface import CommandResult, ICommandHandler
from ...inputs import load_registry


class QuantifierHandler(ICommandHandler):
    """量词检查处理器 - 暴力检查同构封闭性"""

    def register_commands(self, subparsers: Any) -> None:
        """注册 quant-check 子命令"""
        parser = self.add_command(subparsers, "quant-check", "检查量词定义是否在同构下封闭")
        parser.add_argument("definitions", nargs="*", help="量词/原子定义 JSON 文件；省略时检查内置量词")
        parser.add_argument("--max-size", type=int, default=3, help="检查的最大论域大小 (默认: 3)")
        parser.set_defaults(command=self.cmd_quant_check)

    def cmd_quant_check(self, args) -> CommandResult:
        if args.max_size < 1:
            raise UsageError("--max-size 必须为正整数")
        # 加载时不做封闭性检查，反例在报告中列出
        registry = load_registry(args.definitions, verify_closure=False)
        quantifiers = self.client.quantifiers_to_check(registry, loaded_only=bool(args.definitions))
        checked = self.client.closure_report(quantifiers, args.max_size)
        closed = all(entry["closed"] for entry in checked)
        payload = {"closed": closed, "maxSize": args.max_size, "checked": checked}
        return CommandResult(payload, 0 if closed else 1)

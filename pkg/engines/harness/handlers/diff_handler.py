"""
差分测试处理器 - 负责 diff 子命令
"""

from typing import Any

from ...command_handler_interface import CommandResult, ICommandHandler


class DiffHandler(ICommandHandler):
    """差分测试处理器 - 运行语料配置指定的检查并输出报告"""

    def register_commands(self, subparsers: Any) -> None:
        """注册 diff 子命令"""
        parser = self.add_command(subparsers, "diff", "在语料上运行差分检查")
        parser.add_argument("spec", help="语料配置 JSON 文件")
        parser.add_argument("--seed", type=int, default=None, help="覆盖随机种子")
        parser.add_argument("--workers", type=int, default=None, help="覆盖并发线程数")
        parser.add_argument("--max-domain", type=int, default=None, help="覆盖论域大小上限")
        parser.add_argument("--max-team", type=int, default=None, help="覆盖团队大小上限")
        parser.add_argument("--no-timing", action="store_true", help="报告中不包含耗时，便于逐字节比较")
        parser.set_defaults(command=self.cmd_diff)

    def cmd_diff(self, args) -> CommandResult:
        overrides = {
            key: value for key, value in (
                ("seed", args.seed),
                ("workers", args.workers),
                ("maxDomain", args.max_domain),
                ("maxTeamSize", args.max_team),
            ) if value is not None
        }
        spec = self.client.load_spec(args.spec, overrides)
        report = self.client.run(spec)
        return CommandResult(report.to_dict(timing=not args.no_timing), 0 if report.passed else 1)

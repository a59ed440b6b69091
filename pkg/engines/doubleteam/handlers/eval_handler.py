"""
求值处理器 - 负责 eval 子命令
"""

from typing import Any

from logic.errors import UsageError

from ...command_handler_interface import CommandResult, ICommandHandler
from ...inputs import RunInput, add_run_input_arguments

ENGINES = ("team", "fo", "game")


class EvalHandler(ICommandHandler):
    """求值处理器 - 按选定语义求值公式"""

    def register_commands(self, subparsers: Any) -> None:
        """注册 eval 子命令"""
        parser = self.add_command(subparsers, "eval", "在双团队（或经典/博弈）语义下求值公式")
        add_run_input_arguments(parser)
        parser.add_argument("--engine", "-e", choices=ENGINES, default="team",
                            help="team: 双团队语义；fo: U 全部满足且 V 全部不满足；game: 一致存活策略是否存在")
        parser.set_defaults(command=self.cmd_eval)

    def cmd_eval(self, args) -> CommandResult:
        run_input = RunInput.from_args(args)
        loaded = run_input.load()
        A, dt, phi, registry = loaded.structure, loaded.double_team, loaded.formula, loaded.registry

        if run_input.engine == "team":
            config = self.client.config_for(run_input)
            verdict = self.client.evaluate(A, dt, phi, registry, config)
            return CommandResult(verdict.to_dict(), 0 if verdict.value else 1)

        if run_input.engine == "fo":
            if run_input.max_domain is not None or run_input.max_team is not None:
                raise UsageError("fo 引擎不接受 --max-domain/--max-team")
            value = self.client.classical(A, dt, phi, registry)
            payload = {"verdict": value, "engine": "fo",
                       "stats": {"assignments": len(dt.U) + len(dt.V)}}
            return CommandResult(payload, 0 if value else 1)

        if run_input.engine == "game":
            from ...game.models import GameLimits
            from ...game.search import find_uniform_survival_strategy
            limits = GameLimits(max_domain=run_input.max_domain, max_team=run_input.max_team)
            result = find_uniform_survival_strategy(A, dt.U, dt.V, phi, registry, limits)
            payload = {"verdict": result.found, "engine": "game",
                       "stats": {"candidates": result.candidates}}
            return CommandResult(payload, 0 if result.found else 1)

        raise UsageError(f"未知的引擎: {run_input.engine}")

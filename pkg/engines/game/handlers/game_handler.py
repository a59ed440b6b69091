"""
博弈处理器 - 负责 game 子命令
"""

from typing import Any

from ...command_handler_interface import CommandResult, ICommandHandler
from ...inputs import RunInput, add_run_input_arguments


class GameHandler(ICommandHandler):
    """博弈处理器 - 搜索一致存活策略并输出见证"""

    def register_commands(self, subparsers: Any) -> None:
        """注册 game 子命令"""
        parser = self.add_command(subparsers, "game", "搜索 𝒜 的一致存活策略")
        add_run_input_arguments(parser)
        parser.add_argument("--plays", action="store_true", help="同时输出策略下的全部对局结果")
        parser.set_defaults(command=self.cmd_game)

    def cmd_game(self, args) -> CommandResult:
        run_input = RunInput.from_args(args)
        loaded = run_input.load()
        A, dt, phi, registry = loaded.structure, loaded.double_team, loaded.formula, loaded.registry
        limits = self.client.limits_for(run_input)
        result = self.client.search(A, dt.U, dt.V, phi, registry, limits)
        payload = {
            "verdict": result.found,
            "engine": "game",
            "strategy": result.strategy.to_list() if result.found else None,
            "exhausted": result.exhausted,
            "finalTeams": result.final_teams.to_dict() if result.final_teams is not None else None,
            "stats": {"candidates": result.candidates},
        }
        if result.found and args.plays:
            outcomes, _ = self.client.plays(A, dt.U, dt.V, phi, result.strategy, registry, limits)
            payload["plays"] = [outcome.to_dict() for outcome in outcomes]
        return CommandResult(payload, 0 if result.found else 1)

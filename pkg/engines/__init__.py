"""
Team Checker Engines Package
"""

from .engine_client_interface import IEngineClient
from .command_handler_interface import ICommandHandler, CommandResult

__all__ = ['IEngineClient', 'ICommandHandler', 'CommandResult']

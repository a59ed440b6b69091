"""
语义博弈数据模型统一导出
"""

# 位置与走法
from .position import Sign, Position, PlayResult, MoveKind, Move, Continuation
# 策略与结果
from .strategy import (
    OrPick, WitnessSet, AgentChoice, Strategy, FinalTeams, PlayOutcome, choice_from_dict, OR_SIDES
)
# 搜索配置
from .limits import GameLimits, SearchResult

__all__ = [
    # 位置与走法
    'Sign',
    'Position',
    'PlayResult',
    'MoveKind',
    'Move',
    'Continuation',

    # 策略与结果
    'OrPick',
    'WitnessSet',
    'AgentChoice',
    'Strategy',
    'FinalTeams',
    'PlayOutcome',
    'choice_from_dict',
    'OR_SIDES',

    # 搜索配置
    'GameLimits',
    'SearchResult',
]

"""
异常层次 - 所有检查器错误的统一基类
"""


class CheckerError(Exception):
    """检查器错误基类"""


class UsageError(CheckerError, ValueError):
    """命令行参数错误"""


# =============================================================================
# 语法
# =============================================================================

class FormulaParseError(CheckerError, ValueError):
    """公式解析失败"""


class UnknownNameError(FormulaParseError):
    """未知的量词或原子名称"""


class TypeMismatchError(FormulaParseError):
    """量词/原子的类型与参数元组不匹配"""


class FormulaDepthError(FormulaParseError):
    """公式嵌套过深"""


# =============================================================================
# 模型与团队
# =============================================================================

class ModelError(CheckerError, ValueError):
    """结构、赋值或团队不满足不变式"""


class LengthMismatchError(ModelError):
    """变量元组与值元组长度不一致"""


class RepetitionError(ModelError):
    """值元组没有遵守变量元组中的重复"""


class VariableDomainError(ModelError):
    """变量不在团队的变量域中"""


# =============================================================================
# 广义量词
# =============================================================================

class QuantifierDefinitionError(CheckerError, ValueError):
    """量词或原子定义无效"""


class ArityError(CheckerError, ValueError):
    """关系元组与类型签名不匹配"""


# =============================================================================
# 求值与搜索
# =============================================================================

class CapExceededError(CheckerError):
    """超出配置的搜索上限"""


class SearchLimitError(CapExceededError):
    """策略搜索超出候选上限，结果不确定"""


class UnsupportedFormulaError(CheckerError):
    """公式包含当前引擎不支持的构造"""


class GameError(CheckerError):
    """语义博弈错误"""


class StrategyError(GameError):
    """策略在可达位置上未定义或非法"""


class IllegalChoiceError(StrategyError):
    """策略在某位置给出了不合法的选择"""


# =============================================================================
# 差分测试
# =============================================================================

class HarnessError(CheckerError):
    """差分测试配置错误"""


class InfeasibleCorpusError(HarnessError):
    """穷举语料规模超出硬上限"""
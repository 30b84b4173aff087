"""
异常定义模块

所有工作台错误都继承自 WorkbenchError，CLI 统一映射为退出码 2。
异常消息使用英文，便于诊断行在各平台上保持一致。
"""
from typing import Optional, Sequence, Tuple


class WorkbenchError(Exception):
    """工作台异常基类"""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class DuplicateName(WorkbenchError):
    """元素名重复"""

    def __init__(self, name: str):
        super().__init__(f"duplicate element name '{name}'")
        self.name = name


class UnknownElement(WorkbenchError):
    """引用了格中不存在的元素"""

    def __init__(self, ref):
        super().__init__(f"unknown element '{ref}'")
        self.ref = ref


class CycleDetected(WorkbenchError):
    """覆盖关系中存在环"""

    def __init__(self, cycle: Sequence[str]):
        path = " < ".join(list(cycle) + [cycle[0]]) if cycle else ""
        super().__init__(f"covers induce a cycle: {path}")
        self.cycle = tuple(cycle)


class NotALattice(WorkbenchError):
    """某一对元素缺少唯一的下确界或上确界"""

    def __init__(self, pair: Tuple[str, str], bound: str):
        super().__init__(f"pair ({pair[0]}, {pair[1]}) has no unique {bound}")
        self.pair = pair
        self.bound = bound


class WrongBounds(WorkbenchError):
    """声明的 bottom/top 不是计算出的极值"""

    def __init__(self, which: str, declared: str, witness: str):
        super().__init__(
            f"declared {which} '{declared}' is not the {which}: "
            f"'{witness}' is not comparable as required"
        )
        self.which = which
        self.declared = declared
        self.witness = witness


class NotComparable(WorkbenchError):
    """区间端点不满足 lo <= hi"""

    def __init__(self, lo: str, hi: str):
        super().__init__(f"'{lo}' is not below '{hi}'")
        self.lo = lo
        self.hi = hi


class PivotIsBound(WorkbenchError):
    """分割点是 bottom 或 top"""

    def __init__(self, pivot: str):
        super().__init__(f"pivot '{pivot}' must lie strictly between bottom and top")
        self.pivot = pivot


class NotInInterval(WorkbenchError):
    """元素不在区间内"""

    def __init__(self, element: str, lo: str, hi: str):
        super().__init__(f"'{element}' is not in the interval [{lo},{hi}]")
        self.element = element


class DomainMismatch(WorkbenchError):
    """两个运算表的定义域不同"""


class MalformedInput(WorkbenchError):
    """序和输入不合法"""


class HypothesisViolated(WorkbenchError):
    """定理的前提条件不满足"""

    def __init__(self, summand: str, axiom: str, witness: Optional[str] = None):
        detail = f" ({witness})" if witness else ""
        super().__init__(f"hypothesis violated: {summand} is not {axiom}{detail}")
        self.summand = summand
        self.axiom = axiom


class BudgetExceeded(WorkbenchError):
    """超出枚举规模预算"""


class FormatError(WorkbenchError):
    """文本格式错误，带文件与行号"""

    def __init__(self, source: str, line: Optional[int], cause: str):
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {cause}")
        self.source = source
        self.line = line
        self.cause = cause

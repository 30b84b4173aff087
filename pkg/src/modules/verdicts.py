"""
判定结果数据类

ConditionVerdict: 条件判定（成立/不成立 + 违反元素）
AxiomVerdict: 单条公理判定（带反例）
OrderVerdict: 两个运算之间的逐点序关系
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple


@dataclass(frozen=True)
class ConditionVerdict:
    """条件判定结果，holds 当且仅当 witnesses 为空"""
    condition: str                      # 条件标签，如 "condition-c"、"saminger-II"
    holds: bool
    witnesses: Tuple[tuple, ...] = ()   # 违反条件的元素或元素对（全局下标）

    def __post_init__(self):
        if self.holds != (len(self.witnesses) == 0):
            raise ValueError(f"inconsistent verdict for {self.condition}")

    @classmethod
    def from_witnesses(cls, condition: str, witnesses) -> "ConditionVerdict":
        witnesses = tuple(witnesses)
        return cls(condition=condition, holds=not witnesses, witnesses=witnesses)

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class AxiomVerdict:
    """公理判定，失败时 witness 给出字典序最小的反例"""
    axiom: str
    holds: bool
    witness: Optional[tuple] = None     # 全局元素下标
    argument: int = 1                   # increasing 失败时所在的参数位置

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError(f"failed verdict '{self.axiom}' needs a witness")


@dataclass(frozen=True)
class OrderVerdict:
    """逐点比较结果"""
    relation: str                       # equal / less / greater / incomparable
    witnesses: Tuple[tuple, ...] = field(default_factory=tuple)

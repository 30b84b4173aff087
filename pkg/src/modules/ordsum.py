"""
序和构造模块

功能：
1. 四种序和：Saminger 序和 T^(S)、EY 序和 T、推论中的 T^(1) 与 T^(2)
2. 判定各定理的充要条件（带违反元素）
3. 定理前提不满足时抛出 HypothesisViolated，而不是静默给出判定

EY 序和分支按固定顺序判定：
    t1     (x, y) ∈ [a,1)²
    t2     (x, y) ∈ [0,a)²
    meet   [0,a)×[a,1) ∪ [a,1)×[0,a) ∪ L×{1} ∪ {1}×L
    t2∧a   其余（至少一个参数在 I_a 中且都不是 1）
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..utils.errors import HypothesisViolated, MalformedInput, PivotIsBound
from .lattice_core import ElementRef, FiniteBoundedLattice, Interval
from .optable import (
    TNORM_AXIOMS,
    TSUBNORM_AXIOMS,
    OpTable,
    check_axioms,
    check_increasing,
    check_range_condition,
    make_drastic_tnorm,
    make_meet_tnorm,
)
from .verdicts import ConditionVerdict

EY_BRANCH_ORDER = ("t1", "t2", "meet", "t2-meet-a")

# 增性定理的前提：交换且范围不超过 meet（闭方块上）
INCREASING_HYPOTHESES = ("commutative", "range_leq_meet")


@dataclass(frozen=True)
class OrdinalSumInput:
    """序和输入：格、内部分割点 a、[a,1] 上的 t1、[0,a] 上的 t2"""
    lattice: FiniteBoundedLattice
    pivot: int
    t1: OpTable
    t2: OpTable

    def __post_init__(self):
        lattice = self.lattice
        if self.pivot in (lattice.bottom, lattice.top):
            raise MalformedInput(f"pivot '{lattice.names[self.pivot]}' must be interior")
        if self.t1.domain != self.upper:
            raise MalformedInput(f"t1 must be defined on {self.upper.label}, got {self.t1.domain.label}")
        if self.t2.domain != self.lower:
            raise MalformedInput(f"t2 must be defined on {self.lower.label}, got {self.t2.domain.label}")

    @classmethod
    def make(cls, lattice: FiniteBoundedLattice, pivot: ElementRef, t1: OpTable, t2: OpTable) -> "OrdinalSumInput":
        return cls(lattice=lattice, pivot=lattice.index(pivot), t1=t1, t2=t2)

    @property
    def upper(self) -> Interval:
        return self.lattice.interval(self.pivot, self.lattice.top)

    @property
    def lower(self) -> Interval:
        return self.lattice.interval(self.lattice.bottom, self.pivot)


class _Regions:
    """分割点 a 对应的区域判定：[a,1)、[0,a)、I_a"""

    def __init__(self, lattice: FiniteBoundedLattice, a: int):
        self.lattice = lattice
        self.a = a
        leq = lattice.leq_matrix
        top = lattice.top
        self.upper = frozenset(x for x in lattice.elements if leq[a, x] and x != top)
        self.lower = frozenset(x for x in lattice.elements if leq[x, a] and x != a)
        self.incomparable = frozenset(lattice.incomparables(a))

    def ey_branch(self, x: int, y: int) -> str:
        top = self.lattice.top
        in_t1 = x in self.upper and y in self.upper
        in_t2 = x in self.lower and y in self.lower
        in_meet = (
            (x in self.lower and y in self.upper)
            or (x in self.upper and y in self.lower)
            or x == top or y == top
        )
        assert in_t1 + in_t2 + in_meet <= 1, f"overlapping branches at ({x}, {y})"
        if in_t1:
            return "t1"
        if in_t2:
            return "t2"
        if in_meet:
            return "meet"
        return "t2-meet-a"


def _full_op(lattice: FiniteBoundedLattice, fn, name: str) -> OpTable:
    return OpTable.from_function(lattice.full_interval(), fn, name=name)


def saminger_sum(sum_input: OrdinalSumInput) -> OpTable:
    """
    Saminger 序和 T^(S)：[a,1]² 上取 t1，[0,a]² 上取 t2，其余取 x∧y

    (a, a) 同时属于两个闭方块，按公式顺序取 t1。
    """
    lattice, a = sum_input.lattice, sum_input.pivot
    upper, lower = set(sum_input.upper.members), set(sum_input.lower.members)

    def value(x: int, y: int) -> int:
        if x in upper and y in upper:
            return sum_input.t1(x, y)
        if x in lower and y in lower:
            return sum_input.t2(x, y)
        return lattice.meet(x, y)

    return _full_op(lattice, value, "T_S")


def ey_sum(sum_input: OrdinalSumInput) -> OpTable:
    """EY 序和，逐分支实现公式 (*)，分支顺序见 EY_BRANCH_ORDER"""
    lattice, a = sum_input.lattice, sum_input.pivot
    regions = _Regions(lattice, a)
    meet = lattice.meet

    def value(x: int, y: int) -> int:
        branch = regions.ey_branch(x, y)
        if branch == "t1":
            return sum_input.t1(x, y)
        if branch == "t2":
            return sum_input.t2(x, y)
        if branch == "meet":
            return meet(x, y)
        return sum_input.t2(meet(x, a), meet(y, a))

    return _full_op(lattice, value, "T")


def check_saminger_conditions(lattice: FiniteBoundedLattice, a: ElementRef) -> ConditionVerdict:
    """
    Saminger 条件 II-1 与 II-2：I_a 中每个 x 与 [a,1) 和 (0,a] 中所有元素都不可比

    Returns:
        witnesses 为破坏条件的 (x, y)
    """
    i = lattice.require_interior(a)
    leq = lattice.leq_matrix
    checked = [
        y for y in lattice.elements
        if (leq[i, y] and y != lattice.top) or (leq[y, i] and y != lattice.bottom)
    ]
    witnesses = [
        (x, y) for x in lattice.incomparables(i) for y in checked
        if lattice.comparable(x, y)
    ]
    return ConditionVerdict.from_witnesses("saminger-II", witnesses)


def check_condition_b(sum_input: OrdinalSumInput) -> ConditionVerdict:
    """空集形式：{x ∈ I_a : t2(x∧a, a) < x∧a} = ∅（不检查前提）"""
    lattice, a = sum_input.lattice, sum_input.pivot
    witnesses = []
    for x in lattice.incomparables(a):
        xa = lattice.meet(x, a)
        if lattice.lt(sum_input.t2(xa, a), xa):
            witnesses.append((x,))
    return ConditionVerdict.from_witnesses("condition-b", witnesses)


def check_condition_c(sum_input: OrdinalSumInput) -> ConditionVerdict:
    """等式形式：I_a = ∅ 或对所有 z ∈ I_a 有 t2(z∧a, a) = z∧a（不检查前提）"""
    lattice, a = sum_input.lattice, sum_input.pivot
    witnesses = []
    for z in lattice.incomparables(a):
        za = lattice.meet(z, a)
        if sum_input.t2(za, a) != za:
            witnesses.append((z,))
    return ConditionVerdict.from_witnesses("condition-c", witnesses)


def check_summands_increasing(sum_input: OrdinalSumInput) -> ConditionVerdict:
    """III-1：t1 在 [a,1)²、t2 在 [0,a)² 上两个参数都单调"""
    witnesses = []
    for op in (sum_input.t1, sum_input.t2):
        verdict = check_increasing(op, open_hi=True)
        if not verdict.holds:
            witnesses.append(verdict.witness)
    return ConditionVerdict.from_witnesses("III-1", witnesses)


def check_proposition1(sum_input: OrdinalSumInput) -> ConditionVerdict:
    """必要条件：t1 在 [a,1)²、t2 在 [0,a)² 上不超过 meet"""
    witnesses = []
    for op in (sum_input.t1, sum_input.t2):
        witnesses.extend(check_range_condition(op, open_hi=True).witnesses)
    return ConditionVerdict.from_witnesses("proposition-1", witnesses)


def _require(op: OpTable, axioms: Sequence[str], label: str) -> None:
    failure = check_axioms(op).first_failure(axioms)
    if failure is not None:
        names = op.lattice.names
        witness = ",".join(names[v] for v in failure.witness)
        raise HypothesisViolated(label, failure.axiom, f"witness {witness}")


def check_increasingness_condition(sum_input: OrdinalSumInput) -> ConditionVerdict:
    """
    增性定理的边界条件 III-2（同时计算 II-2 的空集形式并交叉断言）

    Raises:
        HypothesisViolated: t1 或 t2 不交换，或不满足范围条件
    """
    _require(sum_input.t1, INCREASING_HYPOTHESES, "t1")
    _require(sum_input.t2, INCREASING_HYPOTHESES, "t2")
    empty_form = check_condition_b(sum_input)
    equality_form = check_condition_c(sum_input)
    assert empty_form.witnesses == equality_form.witnesses
    return ConditionVerdict.from_witnesses("III-2", equality_form.witnesses)


def check_tnorm_condition(sum_input: OrdinalSumInput) -> ConditionVerdict:
    """
    t-norm 定理的条件 (c)

    在 t-subnorm 前提下，成立当且仅当 ey_sum(sum_input) 是 t-norm。

    Raises:
        HypothesisViolated: t1 或 t2 不是 t-subnorm
    """
    _require(sum_input.t1, TSUBNORM_AXIOMS, "t1")
    _require(sum_input.t2, TSUBNORM_AXIOMS, "t2")
    empty_form = check_condition_b(sum_input)
    equality_form = check_condition_c(sum_input)
    assert empty_form.witnesses == equality_form.witnesses
    return equality_form


def irrelevant_boundary(sum_input: OrdinalSumInput) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """
    不影响 EY 序和的表项

    Returns:
        (t1 的 1 行/列, t2 在 a 行/列上除 {z∧a : z ∈ I_a} 以外的位置)
    """
    lattice, a = sum_input.lattice, sum_input.pivot
    top = lattice.top
    t1_cells = sorted(
        {(top, y) for y in sum_input.upper.members} | {(y, top) for y in sum_input.upper.members}
    )
    used = {lattice.meet(z, a) for z in lattice.incomparables(a)}
    free = [y for y in sum_input.lower.members if y not in used]
    t2_cells = sorted({(a, y) for y in free} | {(y, a) for y in free})
    return t1_cells, t2_cells


def _pivot_and_summand(lattice: FiniteBoundedLattice, a: ElementRef, t1: OpTable) -> int:
    pivot = lattice.index(a)
    if pivot in (lattice.bottom, lattice.top):
        raise PivotIsBound(lattice.names[pivot])
    _require(t1, TNORM_AXIOMS, "t1")
    return pivot


def corollary1_sum(lattice: FiniteBoundedLattice, a: ElementRef, t1: OpTable) -> OpTable:
    """
    单被加项序和 T^(1)：1 的行列取 x∧y，[a,1)² 上取 t1，其余取 x∧y∧a

    与 t2 = T_M 的 EY 序和逐表相等（断言）。
    """
    pivot = _pivot_and_summand(lattice, a, t1)
    regions = _Regions(lattice, pivot)
    meet, top = lattice.meet, lattice.top

    def value(x: int, y: int) -> int:
        if top in (x, y):
            return meet(x, y)
        if x in regions.upper and y in regions.upper:
            return t1(x, y)
        return meet(meet(x, y), pivot)

    result = _full_op(lattice, value, "T1")
    assert result == ey_sum(OrdinalSumInput(lattice, pivot, t1, make_meet_tnorm(lattice.interval(lattice.bottom, pivot))))
    return result


def corollary2_sum(lattice: FiniteBoundedLattice, a: ElementRef, t1: OpTable) -> OpTable:
    """
    单被加项序和 T^(2)

    [0,a)² ∪ [0,a)×I_a ∪ I_a×[0,a) ∪ I_a×I_a 上取 0；边界集合按 [a,1]×{1} 读取。
    与 t2 = T_D（a 参与时取 meet，否则取 0）的 EY 序和逐表相等（断言）。
    """
    pivot = _pivot_and_summand(lattice, a, t1)
    regions = _Regions(lattice, pivot)
    meet, top, bottom = lattice.meet, lattice.top, lattice.bottom
    low_side = regions.lower | regions.incomparable

    def value(x: int, y: int) -> int:
        if top in (x, y):
            return meet(x, y)
        if x in low_side and y in low_side:
            return bottom
        if x in regions.upper and y in regions.upper:
            return t1(x, y)
        return meet(meet(x, y), pivot)

    result = _full_op(lattice, value, "T2")
    assert result == ey_sum(OrdinalSumInput(lattice, pivot, t1, make_drastic_tnorm(lattice.interval(lattice.bottom, pivot))))
    return result

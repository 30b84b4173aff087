"""
穷举验证模块

功能：
1. 枚举小规模有界格（每个同构类一个代表，规范顺序）
2. 按假设模式回溯枚举区间上的运算表
3. 对每个 (格, 分割点, t1, t2) 计算定理等价式两侧，记录违反与反例

搜索空间按 (格, 分割点) 分块，可并行；结果按规范顺序合并，与串行结果逐位一致。
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config import HARD_MAX_INTERVAL_SIZE, HARD_MAX_LATTICE_SIZE, MINER_CONFIG
from ..utils.errors import BudgetExceeded, HypothesisViolated
from .lattice_core import (
    FiniteBoundedLattice,
    Interval,
    canonical_order_form,
    is_lattice_order,
    lattice_from_order,
)
from .optable import (
    TNORM_AXIOMS,
    TSUBNORM_AXIOMS,
    OpTable,
    check_axioms,
    check_increasing,
    make_drastic_tnorm,
    make_meet_tnorm,
)
from .ordsum import (
    OrdinalSumInput,
    check_condition_b,
    check_condition_c,
    check_saminger_conditions,
    check_summands_increasing,
    corollary1_sum,
    corollary2_sum,
    ey_sum,
    saminger_sum,
)


class HypothesisMode(str, Enum):
    """被加项的假设模式"""
    TNORM = "tnorm"
    TSUBNORM = "tsubnorm"
    COMMUTATIVE_RANGE = "commutative-range"
    COMMUTATIVE_MONOTONE = "commutative-monotone"
    COMMUTATIVE_ASSOCIATIVE_MONOTONE = "commutative-associative-monotone"


class TargetTheorem(str, Enum):
    """验证目标"""
    SAMINGER = "saminger-thm2"
    EY = "ey-thm3"
    INCREASING = "increasing-thm4"
    TNORM = "tnorm-thm5"
    COROLLARIES = "corollary-coherence"


MODE_AXIOMS = {
    HypothesisMode.TNORM: TNORM_AXIOMS,
    HypothesisMode.TSUBNORM: TSUBNORM_AXIOMS,
    HypothesisMode.COMMUTATIVE_RANGE: ("commutative", "range_leq_meet"),
    HypothesisMode.COMMUTATIVE_MONOTONE: ("commutative", "increasing"),
    HypothesisMode.COMMUTATIVE_ASSOCIATIVE_MONOTONE: ("commutative", "associative", "increasing"),
}

# 模式 -> 它蕴含的模式（表集合的包含关系）
MODE_IMPLIES = {
    HypothesisMode.TNORM: set(HypothesisMode),
    HypothesisMode.TSUBNORM: {
        HypothesisMode.TSUBNORM,
        HypothesisMode.COMMUTATIVE_RANGE,
        HypothesisMode.COMMUTATIVE_MONOTONE,
        HypothesisMode.COMMUTATIVE_ASSOCIATIVE_MONOTONE,
    },
    HypothesisMode.COMMUTATIVE_RANGE: {HypothesisMode.COMMUTATIVE_RANGE},
    HypothesisMode.COMMUTATIVE_MONOTONE: {HypothesisMode.COMMUTATIVE_MONOTONE},
    HypothesisMode.COMMUTATIVE_ASSOCIATIVE_MONOTONE: {
        HypothesisMode.COMMUTATIVE_MONOTONE,
        HypothesisMode.COMMUTATIVE_ASSOCIATIVE_MONOTONE,
    },
}

# 各定理自身的前提
NATIVE_MODE = {
    TargetTheorem.SAMINGER: HypothesisMode.TNORM,
    TargetTheorem.EY: HypothesisMode.TNORM,
    TargetTheorem.INCREASING: HypothesisMode.COMMUTATIVE_RANGE,
    TargetTheorem.TNORM: HypothesisMode.TSUBNORM,
    TargetTheorem.COROLLARIES: HypothesisMode.TNORM,
}

ELEMENT_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class MinerConfig:
    """枚举器配置"""
    max_lattice_size: int = MINER_CONFIG["max_lattice_size"]
    max_interval_size: int = MINER_CONFIG["max_interval_size"]
    mode: HypothesisMode = HypothesisMode(MINER_CONFIG["mode"])
    theorem: TargetTheorem = TargetTheorem(MINER_CONFIG["theorem"])
    min_lattice_size: int = MINER_CONFIG["min_lattice_size"]
    t1_mode: Optional[HypothesisMode] = None    # 混合模式：单独指定 t1 的假设
    t2_mode: Optional[HypothesisMode] = None
    workers: int = MINER_CONFIG["workers"]
    max_counterexamples: int = MINER_CONFIG["max_counterexamples"]
    lattices: Tuple[FiniteBoundedLattice, ...] = ()  # 非空时只扫描这些格

    def __post_init__(self):
        object.__setattr__(self, "mode", HypothesisMode(self.mode))
        object.__setattr__(self, "theorem", TargetTheorem(self.theorem))
        for key in ("t1_mode", "t2_mode"):
            value = getattr(self, key)
            if value is not None:
                object.__setattr__(self, key, HypothesisMode(value))
        object.__setattr__(self, "lattices", tuple(self.lattices))
        if not 2 <= self.max_lattice_size <= HARD_MAX_LATTICE_SIZE:
            raise BudgetExceeded(f"max lattice size must be between 2 and {HARD_MAX_LATTICE_SIZE}")
        if not 1 <= self.max_interval_size <= HARD_MAX_INTERVAL_SIZE:
            raise BudgetExceeded(f"max interval size must be between 1 and {HARD_MAX_INTERVAL_SIZE}")
        if self.min_lattice_size > self.max_lattice_size:
            raise BudgetExceeded("min lattice size exceeds max lattice size")
        if self.workers < 1:
            raise BudgetExceeded("workers must be at least 1")
        if self.max_counterexamples < 1:
            raise BudgetExceeded("max counterexamples must be at least 1")

    @property
    def mode_t1(self) -> HypothesisMode:
        return self.t1_mode or self.mode

    @property
    def mode_t2(self) -> HypothesisMode:
        return self.t2_mode or self.mode

    @property
    def hypotheses_hold(self) -> bool:
        """配置的模式是否蕴含目标定理自身的前提"""
        native = NATIVE_MODE[self.theorem]
        if native not in MODE_IMPLIES[self.mode_t1]:
            return False
        if self.theorem is TargetTheorem.COROLLARIES:
            return True
        return native in MODE_IMPLIES[self.mode_t2]


@dataclass(frozen=True)
class Counterexample:
    """一个失败实例，可以通过 replay() 重新验证"""
    theorem: TargetTheorem
    lattice: FiniteBoundedLattice
    pivot: int
    t1: Optional[OpTable]
    t2: Optional[OpTable]
    method: str         # ey / saminger / c1 / c2
    failed: str         # 失败的公理或条件
    witness: tuple
    detail: str = ""

    def replay(self) -> bool:
        """重新经过 ordsum 与 optable 计算，确认记录的失败与反例不变"""
        if self.failed == "saminger-II":
            verdict = check_saminger_conditions(self.lattice, self.pivot)
            return (not verdict.holds) and verdict.witnesses[0] == self.witness
        failure = evaluate_instance(self.theorem, self.lattice, self.pivot, self.t1, self.t2)
        if failure is None:
            return False
        return (failure.method, failure.failed, failure.witness) == (self.method, self.failed, self.witness)


@dataclass(frozen=True)
class InstanceFailure:
    method: str
    failed: str
    witness: tuple
    detail: str = ""


@dataclass
class MinerResult:
    """一次扫描的汇总结果"""
    config: MinerConfig
    instances: int = 0
    partitions: int = 0
    skipped: int = 0
    violations: List[Counterexample] = field(default_factory=list)
    counterexamples: List[Counterexample] = field(default_factory=list)
    counterexample_total: int = 0
    violation_total: int = 0
    exhausted: bool = True      # find_counterexample 在预算内未找到反例

    def summary(self) -> str:
        config = self.config
        modes = config.mode.value
        if config.t1_mode or config.t2_mode:
            modes = f"t1={config.mode_t1.value},t2={config.mode_t2.value}"
        return (
            f"theorem={config.theorem.value} mode={modes} "
            f"sizes={config.min_lattice_size}..{config.max_lattice_size} "
            f"partitions={self.partitions} skipped={self.skipped} instances={self.instances} "
            f"violations={self.violation_total} counterexamples={self.counterexample_total}"
        )


def _element_names(n: int) -> Tuple[str, ...]:
    return ("0",) + tuple(ELEMENT_LETTERS[: n - 2]) + ("1",)


def enumerate_lattices(n: int, max_size: int = HARD_MAX_LATTICE_SIZE) -> Iterator[FiniteBoundedLattice]:
    """
    枚举 n 元有界格，每个同构类一个代表

    内部元素的严格序只取与自然标号一致的子集（每个偏序都有线性扩张），
    再按最小邻接编码去重。输出按规范码升序。

    Args:
        n: 元素个数
        max_size: 预算上限

    Raises:
        BudgetExceeded: n 不在 2..max_size 内
    """
    if n < 2 or n > min(max_size, HARD_MAX_LATTICE_SIZE):
        raise BudgetExceeded(f"cannot enumerate lattices with {n} elements")
    m = n - 2
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    found = {}
    for mask in range(1 << len(pairs)):
        strict = np.zeros((m, m), dtype=bool)
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                strict[i, j] = True
        composed = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        if (composed & ~strict).any():
            continue
        leq = np.eye(n, dtype=bool)
        leq[0, :] = True
        leq[:, n - 1] = True
        leq[1 : n - 1, 1 : n - 1] |= strict
        if not is_lattice_order(leq):
            continue
        code, perm = canonical_order_form(leq, 0, n - 1)
        if code not in found:
            found[code] = leq[np.ix_(perm, perm)]
    names = _element_names(n)
    for k, code in enumerate(sorted(found), 1):
        yield lattice_from_order(found[code], names, name=f"L{n}_{k}")


def enumerate_ops(iv: Interval, mode: HypothesisMode, max_size: int = HARD_MAX_INTERVAL_SIZE) -> Iterator[OpTable]:
    """
    枚举区间上满足模式公理组的全部交换运算表

    先确定被公理强制的表项（中性行列、范围上限），再对自由表项回溯，
    每次赋值做单调性剪枝，结合律最后检查。

    Raises:
        BudgetExceeded: 区间规模超出预算
    """
    mode = HypothesisMode(mode)
    if iv.size > min(max_size, HARD_MAX_INTERVAL_SIZE):
        raise BudgetExceeded(f"interval {iv.label} has {iv.size} elements, limit is {max_size}")
    axioms = MODE_AXIOMS[mode]
    m = iv.size
    leq = iv.local_leq().tolist()
    position = {g: i for i, g in enumerate(iv.members)}
    meet = [[position[int(v)] for v in row] for row in iv.local_meet()]
    h = position[iv.hi]

    neutral = "neutral_top" in axioms
    # 中性元 + 单调蕴含范围条件，可以同样用于剪枝
    capped = neutral or "range_leq_meet" in axioms
    monotone = "increasing" in axioms
    associative = "associative" in axioms

    candidates = {}
    for i in range(m):
        for j in range(i, m):
            values = list(range(m))
            if neutral and i == h:
                values = [j]
            elif neutral and j == h:
                values = [i]
            if capped:
                values = [v for v in values if leq[v][meet[i][j]]]
            candidates[(i, j)] = values
    order = sorted(candidates, key=lambda cell: (len(candidates[cell]), cell))
    table: List[List[Optional[int]]] = [[None] * m for _ in range(m)]

    def consistent(row: int, col: int, v: int) -> bool:
        for p, q in ((row, col), (col, row)):
            for r in range(m):
                w = table[r][q]
                if w is None or r == p:
                    continue
                if leq[r][p] and not leq[w][v]:
                    return False
                if leq[p][r] and not leq[v][w]:
                    return False
        return True

    members = np.asarray(iv.members)
    count = 0

    def backtrack(k: int) -> Iterator[OpTable]:
        nonlocal count
        if k == len(order):
            local = np.array(table, dtype=np.int64)
            if associative:
                left = local[local]
                right = local[np.arange(m)[:, None, None], local[None, :, :]]
                if (left != right).any():
                    return
            count += 1
            yield OpTable(domain=iv, values=members[local], name=f"{mode.value}_{count}")
            return
        i, j = order[k]
        for v in candidates[(i, j)]:
            if monotone and not consistent(i, j, v):
                continue
            table[i][j] = table[j][i] = v
            yield from backtrack(k + 1)
            table[i][j] = table[j][i] = None

    yield from backtrack(0)


@lru_cache(maxsize=None)
def _cached_ops(iv: Interval, mode: HypothesisMode) -> Tuple[OpTable, ...]:
    return tuple(enumerate_ops(iv, mode))


def _first_difference(p: OpTable, q: OpTable) -> tuple:
    hit = np.argwhere(p.values != q.values)[0]
    members = p.domain.members
    return (members[int(hit[0])], members[int(hit[1])])


def _sum_failure(method: str, table: OpTable) -> Optional[InstanceFailure]:
    failure = check_axioms(table).first_failure(TNORM_AXIOMS)
    if failure is None:
        return None
    return InstanceFailure(method, failure.axiom, failure.witness, "sum is not a t-norm")


def _corollary_failure(lattice: FiniteBoundedLattice, pivot: int, t1: OpTable) -> Optional[InstanceFailure]:
    lower = lattice.interval(lattice.bottom, pivot)
    for method, builder, t2 in (
        ("c1", corollary1_sum, make_meet_tnorm(lower)),
        ("c2", corollary2_sum, make_drastic_tnorm(lower)),
    ):
        try:
            table = builder(lattice, pivot, t1)
        except HypothesisViolated as exc:
            return InstanceFailure(method, "hypothesis", (), exc.message)
        reference = ey_sum(OrdinalSumInput(lattice, pivot, t1, t2))
        if table != reference:
            return InstanceFailure(method, "coherence", _first_difference(table, reference), "differs from the EY sum")
        failure = _sum_failure(method, table)
        if failure is not None:
            return failure
    return None


def evaluate_instance(
    theorem: TargetTheorem,
    lattice: FiniteBoundedLattice,
    pivot: int,
    t1: OpTable,
    t2: Optional[OpTable],
) -> Optional[InstanceFailure]:
    """
    计算单个实例上目标定理的断言

    Returns:
        断言成立时返回 None，否则返回失败描述
    """
    theorem = TargetTheorem(theorem)
    if theorem is TargetTheorem.COROLLARIES:
        return _corollary_failure(lattice, pivot, t1)

    sum_input = OrdinalSumInput(lattice, pivot, t1, t2)
    if theorem is TargetTheorem.SAMINGER:
        return _sum_failure("saminger", saminger_sum(sum_input))
    table = ey_sum(sum_input)
    if theorem is TargetTheorem.EY:
        return _sum_failure("ey", table)

    condition_b = check_condition_b(sum_input)
    condition_c = check_condition_c(sum_input)
    if theorem is TargetTheorem.TNORM:
        report = check_axioms(table)
        if condition_c.holds and not report.is_tnorm:
            failure = report.first_failure(TNORM_AXIOMS)
            return InstanceFailure("ey", failure.axiom, failure.witness, "condition (c) holds but the sum is not a t-norm")
        if not condition_c.holds and report.is_tnorm:
            return InstanceFailure("ey", "condition-c", condition_c.witnesses[0], "the sum is a t-norm but condition (c) fails")
    else:
        increasing = check_increasing(table)
        summands = check_summands_increasing(sum_input)
        predicted = summands.holds and condition_c.holds
        if predicted and not increasing.holds:
            return InstanceFailure("ey", "increasing", increasing.witness, "III-1 and III-2 hold but the sum is not increasing")
        if increasing.holds and not predicted:
            verdict = summands if not summands.holds else condition_c
            return InstanceFailure("ey", verdict.condition, verdict.witnesses[0], "the sum is increasing but III fails")
    if condition_b.holds != condition_c.holds:
        verdict = condition_b if not condition_b.holds else condition_c
        return InstanceFailure("ey", verdict.condition, verdict.witnesses[0], "empty-set and equality forms disagree")
    return None


@dataclass
class _PartitionOutcome:
    instances: int = 0
    skipped: bool = False
    failures: List[Counterexample] = field(default_factory=list)
    failure_total: int = 0
    violations: List[Counterexample] = field(default_factory=list)
    violation_total: int = 0


def _scan_partition(
    config: MinerConfig,
    lattice: FiniteBoundedLattice,
    pivot: int,
    stop_at_first: bool = False,
) -> _PartitionOutcome:
    outcome = _PartitionOutcome()
    upper = lattice.interval(pivot, lattice.top)
    lower = lattice.interval(lattice.bottom, pivot)
    if max(upper.size, lower.size) > config.max_interval_size:
        outcome.skipped = True
        return outcome

    theorem = config.theorem
    hypotheses = config.hypotheses_hold
    t1_ops = _cached_ops(upper, config.mode_t1)
    if theorem is TargetTheorem.COROLLARIES:
        t2_ops: Sequence[Optional[OpTable]] = (None,)
    else:
        t2_ops = _cached_ops(lower, config.mode_t2)

    limit = config.max_counterexamples
    for t1 in t1_ops:
        for t2 in t2_ops:
            outcome.instances += 1
            failure = evaluate_instance(theorem, lattice, pivot, t1, t2)
            if failure is None:
                continue
            record = Counterexample(
                theorem, lattice, pivot, t1, t2,
                failure.method, failure.failed, failure.witness, failure.detail,
            )
            outcome.failure_total += 1
            if len(outcome.failures) < limit:
                outcome.failures.append(record)
            if hypotheses and theorem is not TargetTheorem.SAMINGER:
                outcome.violation_total += 1
                if len(outcome.violations) < limit:
                    outcome.violations.append(record)
            if stop_at_first:
                return outcome

    if theorem is TargetTheorem.SAMINGER and hypotheses:
        # 条件 II 成立 ⟺ 每一对 t-norm 的 Saminger 序和都是 t-norm
        conditions = check_saminger_conditions(lattice, pivot)
        every_pair = outcome.failure_total == 0
        if conditions.holds and not every_pair:
            outcome.violation_total += 1
            outcome.violations.append(outcome.failures[0])
        elif not conditions.holds and every_pair:
            outcome.violation_total += 1
            outcome.violations.append(Counterexample(
                theorem, lattice, pivot, None, None, "saminger", "saminger-II",
                conditions.witnesses[0], "every t-norm pair yields a t-norm but II fails",
            ))
    return outcome


def _scan_job(job) -> _PartitionOutcome:
    config, lattice, pivot = job
    return _scan_partition(config, lattice, pivot)


class TheoremMiner:
    """定理穷举验证器"""

    def __init__(self, config: MinerConfig, progress: Optional[Callable[[str], None]] = None):
        """
        Args:
            config: 枚举配置
            progress: 进度回调（可选，库本身不输出）
        """
        self.config = config
        self.progress = progress

    def _say(self, message: str) -> None:
        if self.progress:
            self.progress(message)

    def lattices(self) -> List[FiniteBoundedLattice]:
        if self.config.lattices:
            return list(self.config.lattices)
        found = []
        for n in range(max(self.config.min_lattice_size, 2), self.config.max_lattice_size + 1):
            batch = list(enumerate_lattices(n, self.config.max_lattice_size))
            self._say(f"✓ {len(batch)} lattices with {n} elements")
            found.extend(batch)
        return found

    def partitions(self) -> List[Tuple[FiniteBoundedLattice, int]]:
        return [(lattice, pivot) for lattice in self.lattices() for pivot in lattice.interior()]

    def _merge(self, result: MinerResult, outcome: _PartitionOutcome) -> None:
        limit = self.config.max_counterexamples
        result.partitions += 1
        result.skipped += int(outcome.skipped)
        result.instances += outcome.instances
        result.counterexample_total += outcome.failure_total
        result.violation_total += outcome.violation_total
        result.counterexamples.extend(outcome.failures[: max(0, limit - len(result.counterexamples))])
        result.violations.extend(outcome.violations[: max(0, limit - len(result.violations))])

    def verify(self) -> MinerResult:
        """扫描全部分块，记录等价式两侧的不一致"""
        result = MinerResult(config=self.config)
        partitions = self.partitions()
        self._say(f"🔍 Scanning {len(partitions)} (lattice, pivot) partitions")
        # 工作进程不需要显式格列表
        job_config = replace(self.config, lattices=())
        jobs = [(job_config, lattice, pivot) for lattice, pivot in partitions]
        if self.config.workers > 1:
            with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                outcomes = list(pool.map(_scan_job, jobs))
        else:
            outcomes = [_scan_job(job) for job in jobs]
        for (lattice, pivot), outcome in zip(partitions, outcomes):
            self._merge(result, outcome)
            if outcome.failure_total:
                self._say(f"   {lattice.name} pivot {lattice.names[pivot]}: {outcome.failure_total} failing instances")
        result.exhausted = result.counterexample_total == 0
        return result

    def find_counterexample(self) -> MinerResult:
        """按规范顺序返回第一个反例，返回前重放验证；预算耗尽只说明预算内没有反例"""
        result = MinerResult(config=self.config)
        for lattice, pivot in self.partitions():
            outcome = _scan_partition(self.config, lattice, pivot, stop_at_first=True)
            self._merge(result, outcome)
            if outcome.failure_total:
                result.exhausted = False
                break
        for ce in result.counterexamples:
            if not ce.replay():
                raise RuntimeError(f"counterexample on {ce.lattice.name} pivot {ce.lattice.names[ce.pivot]} does not replay")
        return result


def verify_theorem(config: MinerConfig, progress: Optional[Callable[[str], None]] = None) -> MinerResult:
    return TheoremMiner(config, progress).verify()


def find_counterexample(config: MinerConfig, progress: Optional[Callable[[str], None]] = None) -> MinerResult:
    return TheoremMiner(config, progress).find_counterexample()

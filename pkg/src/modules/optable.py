"""
运算表模块

功能：
1. 以值表表示区间上的二元运算（OpTable）
2. 逐条判定 t-norm / t-subnorm 公理，失败时给出字典序最小的反例
3. 典型运算：T_M、T_D、常值运算；逐点比较
"""
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..utils.errors import DomainMismatch, NotInInterval
from .lattice_core import ElementRef, Interval
from .verdicts import AxiomVerdict, ConditionVerdict, OrderVerdict

# t-norm 与 t-subnorm 的公理组
TNORM_AXIOMS = ("commutative", "associative", "increasing", "neutral_top")
TSUBNORM_AXIOMS = ("commutative", "associative", "increasing", "range_leq_meet")
ALL_AXIOMS = ("commutative", "associative", "increasing", "neutral_top", "range_leq_meet")


@dataclass(frozen=True, eq=False)
class OpTable:
    """区间上的全二元运算，values[i, j] 是局部位置 (i, j) 处的全局元素下标"""
    domain: Interval
    values: np.ndarray
    name: str = "T"
    _local: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.int64)
        m = self.domain.size
        if values.shape != (m, m):
            raise ValueError(f"table shape {values.shape} does not match interval size {m}")
        n = self.domain.parent.size
        if values.size and (values.min() < 0 or values.max() >= n):
            raise ValueError("table refers to elements outside the lattice")
        position = np.full(n, -1, dtype=np.int64)
        position[list(self.domain.members)] = np.arange(m)
        local = position[values]
        if (local < 0).any():
            i, j = (int(v) for v in np.argwhere(local < 0)[0])
            names = self.domain.parent.names
            raise NotInInterval(names[values[i, j]], names[self.domain.lo], names[self.domain.hi])
        values.setflags(write=False)
        local.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_local", local)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OpTable):
            return NotImplemented
        return self.domain == other.domain and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.domain, self.values.tobytes()))

    def __call__(self, x: ElementRef, y: ElementRef) -> int:
        return int(self.values[self.domain.local(x), self.domain.local(y)])

    @property
    def lattice(self):
        return self.domain.parent

    @property
    def local_values(self) -> np.ndarray:
        """取值的区间内位置表"""
        return self._local

    def renamed(self, name: str) -> "OpTable":
        return OpTable(domain=self.domain, values=self.values, name=name)

    def with_entries(self, updates: Mapping[Tuple[ElementRef, ElementRef], ElementRef]) -> "OpTable":
        """返回修改了若干表项的新运算（原运算不变）"""
        values = np.array(self.values)
        parent = self.domain.parent
        for (x, y), v in updates.items():
            values[self.domain.local(x), self.domain.local(y)] = parent.index(v)
        return OpTable(domain=self.domain, values=values, name=self.name)

    @classmethod
    def from_function(cls, domain: Interval, fn: Callable[[int, int], int], name: str = "T") -> "OpTable":
        members = domain.members
        values = [[fn(x, y) for y in members] for x in members]
        return cls(domain=domain, values=np.array(values, dtype=np.int64).reshape(len(members), len(members)), name=name)


@dataclass(frozen=True)
class AxiomReport:
    """逐条公理的判定结果"""
    commutative: AxiomVerdict
    associative: AxiomVerdict
    increasing: AxiomVerdict
    neutral_top: AxiomVerdict
    range_leq_meet: AxiomVerdict

    @property
    def is_tnorm(self) -> bool:
        return all(getattr(self, a).holds for a in TNORM_AXIOMS)

    @property
    def is_tsubnorm(self) -> bool:
        return all(getattr(self, a).holds for a in TSUBNORM_AXIOMS)

    def verdicts(self) -> Tuple[AxiomVerdict, ...]:
        return tuple(getattr(self, a) for a in ALL_AXIOMS)

    def first_failure(self, axioms: Sequence[str] = TNORM_AXIOMS) -> Optional[AxiomVerdict]:
        for axiom in axioms:
            verdict = getattr(self, axiom)
            if not verdict.holds:
                return verdict
        return None

    def satisfies(self, axioms: Sequence[str]) -> bool:
        return all(getattr(self, a).holds for a in axioms)


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    # argwhere 按行优先返回，即字典序
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _positions(op: OpTable, open_hi: bool) -> np.ndarray:
    domain = op.domain
    if not open_hi:
        return np.arange(domain.size)
    return np.array([i for i, m in enumerate(domain.members) if m != domain.hi], dtype=np.int64)


def check_commutative(op: OpTable) -> AxiomVerdict:
    hit = _first(op.values != op.values.T)
    if hit is None:
        return AxiomVerdict("commutative", True)
    members = op.domain.members
    return AxiomVerdict("commutative", False, tuple(members[i] for i in hit))


def check_associative(op: OpTable) -> AxiomVerdict:
    a = op.local_values
    m = a.shape[0]
    left = a[a]                                         # left[x,y,z] = T(T(x,y),z)
    right = a[np.arange(m)[:, None, None], a[None, :, :]]  # right[x,y,z] = T(x,T(y,z))
    hit = _first(left != right)
    if hit is None:
        return AxiomVerdict("associative", True)
    members = op.domain.members
    return AxiomVerdict("associative", False, tuple(members[i] for i in hit))


def check_increasing(op: OpTable, open_hi: bool = False) -> AxiomVerdict:
    """
    两个参数上的单调性

    失败按格序判定（T(x,z) 不小于等于 T(y,z)），而不是仅仅不相等。

    Args:
        op: 运算表
        open_hi: 只在半开方块 [lo,hi)² 上检查

    Returns:
        witness 为 (x, y, z)，argument 指出失败的参数位置
    """
    leq = op.lattice.leq_matrix
    pos = _positions(op, open_hi)
    members = np.asarray(op.domain.members)
    sub_leq = op.domain.local_leq()[np.ix_(pos, pos)]
    g = op.values[np.ix_(pos, pos)]
    for argument, table in ((1, g), (2, g.T)):
        ok = leq[table[:, None, :], table[None, :, :]]
        hit = _first(sub_leq[:, :, None] & ~ok)
        if hit is not None:
            witness = tuple(int(members[pos[i]]) for i in hit)
            return AxiomVerdict("increasing", False, witness, argument=argument)
    return AxiomVerdict("increasing", True)


def check_neutral_top(op: OpTable) -> AxiomVerdict:
    domain = op.domain
    h = domain.local(domain.hi)
    members = np.asarray(domain.members)
    bad = (op.values[h, :] != members) | (op.values[:, h] != members)
    hit = _first(bad)
    if hit is None:
        return AxiomVerdict("neutral_top", True)
    return AxiomVerdict("neutral_top", False, (int(members[hit[0]]),))


def _range_failures(op: OpTable, open_hi: bool) -> np.ndarray:
    leq = op.lattice.leq_matrix
    pos = _positions(op, open_hi)
    g = op.values[np.ix_(pos, pos)]
    meets = op.domain.local_meet()[np.ix_(pos, pos)]
    bad = ~leq[g, meets]
    members = np.asarray(op.domain.members)
    return np.array([(members[pos[i]], members[pos[j]]) for i, j in np.argwhere(bad)], dtype=np.int64).reshape(-1, 2)


def check_range(op: OpTable, open_hi: bool = False) -> AxiomVerdict:
    failures = _range_failures(op, open_hi)
    if len(failures) == 0:
        return AxiomVerdict("range_leq_meet", True)
    return AxiomVerdict("range_leq_meet", False, tuple(int(v) for v in failures[0]))


def check_axioms(op: OpTable) -> AxiomReport:
    """穷举所有元素对/三元组，给出完整的公理报告"""
    return AxiomReport(
        commutative=check_commutative(op),
        associative=check_associative(op),
        increasing=check_increasing(op),
        neutral_top=check_neutral_top(op),
        range_leq_meet=check_range(op),
    )


def check_range_condition(op: OpTable, open_hi: bool = False) -> ConditionVerdict:
    """
    范围条件 op(x,y) <= x∧y

    Args:
        op: 运算表
        open_hi: 只检查半开方块 [lo,hi)²

    Returns:
        列出全部违反点对的 ConditionVerdict
    """
    tag = "range-open" if open_hi else "range"
    failures = _range_failures(op, open_hi)
    return ConditionVerdict.from_witnesses(tag, (tuple(int(v) for v in row) for row in failures))


def make_meet_tnorm(iv: Interval, name: str = "T_M") -> OpTable:
    """T_M(x,y) = x∧y"""
    return OpTable(domain=iv, values=iv.local_meet(), name=name)


def make_drastic_tnorm(iv: Interval, name: str = "T_D") -> OpTable:
    """T_D(x,y) = x∧y 若 hi ∈ {x,y}，否则 lo"""
    meet = iv.parent.meet
    return OpTable.from_function(
        iv, lambda x, y: meet(x, y) if iv.hi in (x, y) else iv.lo, name=name
    )


def make_constant_op(iv: Interval, c: ElementRef, name: Optional[str] = None) -> OpTable:
    """常值运算，每个表项都等于 c"""
    value = iv.parent.index(c)
    if value not in iv.members:
        names = iv.parent.names
        raise NotInInterval(names[value], names[iv.lo], names[iv.hi])
    m = iv.size
    label = name or f"const_{iv.parent.names[value]}"
    return OpTable(domain=iv, values=np.full((m, m), value, dtype=np.int64), name=label)


def compare_ops(p: OpTable, q: OpTable) -> OrderVerdict:
    """
    逐点比较两个运算

    Returns:
        equal / less（p <= q，witness 为第一个严格点）/ greater / incomparable
        （witnesses 为第一个 p 不小于等于 q 的点与第一个 q 不小于等于 p 的点）
    """
    if p.domain != q.domain:
        raise DomainMismatch(f"operations live on {p.domain.label} and {q.domain.label}")
    leq = p.lattice.leq_matrix
    p_le_q = leq[p.values, q.values]
    q_le_p = leq[q.values, p.values]
    members = p.domain.members

    def glob(hit):
        return tuple(members[i] for i in hit)

    if p_le_q.all() and q_le_p.all():
        return OrderVerdict("equal")
    if p_le_q.all():
        return OrderVerdict("less", (glob(_first(~q_le_p)),))
    if q_le_p.all():
        return OrderVerdict("greater", (glob(_first(~p_le_q)),))
    return OrderVerdict("incomparable", (glob(_first(~p_le_q)), glob(_first(~q_le_p))))


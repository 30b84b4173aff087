"""
有限有界格模块

功能：
1. 由覆盖关系构造并校验有限有界格（序闭包、meet/join 表、上下界）
2. 序查询、meet/join、子区间与不可比集 I_a
3. 同构规范码（供枚举器去重）
"""
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from ..config import LATTICE_CONFIG
from ..utils.errors import (
    BudgetExceeded,
    CycleDetected,
    DuplicateName,
    MalformedInput,
    NotALattice,
    NotComparable,
    NotInInterval,
    PivotIsBound,
    UnknownElement,
    WrongBounds,
)
from .verdicts import ConditionVerdict

ElementRef = Union[int, str]


def _freeze(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FiniteBoundedLattice:
    """有限有界格，构造后不可变；元素以声明顺序的下标表示"""
    name: str
    names: Tuple[str, ...]
    leq_matrix: np.ndarray      # n×n 布尔矩阵，leq_matrix[x, y] 当且仅当 x <= y
    meet_table: np.ndarray      # n×n 元素下标表
    join_table: np.ndarray
    bottom: int
    top: int
    _index: Dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "leq_matrix", _freeze(self.leq_matrix.astype(bool)))
        object.__setattr__(self, "meet_table", _freeze(self.meet_table.astype(np.int64)))
        object.__setattr__(self, "join_table", _freeze(self.join_table.astype(np.int64)))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteBoundedLattice):
            return NotImplemented
        return (
            self.names == other.names
            and self.bottom == other.bottom
            and self.top == other.top
            and np.array_equal(self.leq_matrix, other.leq_matrix)
        )

    def __hash__(self) -> int:
        return hash((self.names, self.leq_matrix.tobytes(), self.bottom, self.top))

    def __repr__(self) -> str:
        return f"FiniteBoundedLattice(name='{self.name}', elements={list(self.names)})"

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def index(self, ref: ElementRef) -> int:
        """元素名或下标 -> 下标"""
        if isinstance(ref, (int, np.integer)) and not isinstance(ref, bool):
            if 0 <= ref < len(self.names):
                return int(ref)
            raise UnknownElement(ref)
        try:
            return self._index[ref]
        except (KeyError, TypeError):
            raise UnknownElement(ref) from None

    def name_of(self, ref: ElementRef) -> str:
        return self.names[self.index(ref)]

    def le(self, x: ElementRef, y: ElementRef) -> bool:
        return bool(self.leq_matrix[self.index(x), self.index(y)])

    def lt(self, x: ElementRef, y: ElementRef) -> bool:
        i, j = self.index(x), self.index(y)
        return i != j and bool(self.leq_matrix[i, j])

    def comparable(self, x: ElementRef, y: ElementRef) -> bool:
        i, j = self.index(x), self.index(y)
        return bool(self.leq_matrix[i, j] or self.leq_matrix[j, i])

    def meet(self, x: ElementRef, y: ElementRef) -> int:
        return int(self.meet_table[self.index(x), self.index(y)])

    def join(self, x: ElementRef, y: ElementRef) -> int:
        return int(self.join_table[self.index(x), self.index(y)])

    def incomparables(self, a: ElementRef) -> Tuple[int, ...]:
        """
        不可比集 I_a = {x : x 与 a 不可比}

        Returns:
            声明顺序下的元素下标元组
        """
        i = self.index(a)
        mask = ~(self.leq_matrix[:, i] | self.leq_matrix[i, :])
        return tuple(int(x) for x in np.flatnonzero(mask))

    def interval(self, lo: ElementRef, hi: ElementRef) -> "Interval":
        """
        子区间 [lo, hi]

        Raises:
            NotComparable: lo 不小于等于 hi
        """
        i, j = self.index(lo), self.index(hi)
        if not self.leq_matrix[i, j]:
            raise NotComparable(self.names[i], self.names[j])
        mask = self.leq_matrix[i, :] & self.leq_matrix[:, j]
        members = tuple(int(x) for x in np.flatnonzero(mask))
        return Interval(parent=self, lo=i, hi=j, members=members)

    def full_interval(self) -> "Interval":
        return self.interval(self.bottom, self.top)

    def require_interior(self, a: ElementRef) -> int:
        i = self.index(a)
        if i in (self.bottom, self.top):
            raise PivotIsBound(self.names[i])
        return i

    def interior(self) -> Tuple[int, ...]:
        return tuple(x for x in self.elements if x not in (self.bottom, self.top))

    def check_lemma_incomparable_meet(self, a: ElementRef) -> ConditionVerdict:
        """对 I_a 中每个 x 验证 x∧a < a（格上总成立，作自检用）"""
        i = self.require_interior(a)
        witnesses = [
            (x,) for x in self.incomparables(i)
            if not self.lt(self.meet(x, i), i)
        ]
        return ConditionVerdict.from_witnesses("lemma-incomparable-meet", witnesses)

    def covers(self) -> List[Tuple[int, int]]:
        """覆盖关系（严格序的传递约简），按下标排序"""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        n = self.size
        graph.add_edges_from(
            (x, y) for x in range(n) for y in range(n)
            if x != y and self.leq_matrix[x, y]
        )
        return sorted(nx.transitive_reduction(graph).edges())

    def canonical_form(self) -> Tuple[tuple, Tuple[int, ...]]:
        """
        同构规范形：在保持 bottom/top 的所有置换中取最小的邻接编码

        Returns:
            (编码, 置换)；置换 perm[k] 是规范位置 k 上的原元素下标
        """
        return canonical_order_form(self.leq_matrix, self.bottom, self.top)

    def canonical_code(self) -> tuple:
        return self.canonical_form()[0]


@dataclass(frozen=True)
class Interval:
    """格的子区间 [lo, hi]，members 按父格声明顺序排列"""
    parent: FiniteBoundedLattice
    lo: int
    hi: int
    members: Tuple[int, ...]

    def __repr__(self) -> str:
        names = self.parent.names
        return f"Interval([{names[self.lo]},{names[self.hi]}], members={[names[m] for m in self.members]})"

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def label(self) -> str:
        names = self.parent.names
        return f"[{names[self.lo]},{names[self.hi]}]"

    def contains(self, x: ElementRef) -> bool:
        return self.parent.index(x) in self.members

    def local(self, x: ElementRef) -> int:
        """全局元素 -> 区间内位置"""
        i = self.parent.index(x)
        try:
            return self.members.index(i)
        except ValueError:
            names = self.parent.names
            raise NotInInterval(names[i], names[self.lo], names[self.hi]) from None

    def below_top(self) -> Tuple[int, ...]:
        """半开区间 [lo, hi)"""
        return tuple(m for m in self.members if m != self.hi)

    def above_bottom(self) -> Tuple[int, ...]:
        """半开区间 (lo, hi]"""
        return tuple(m for m in self.members if m != self.lo)

    def local_leq(self) -> np.ndarray:
        idx = np.asarray(self.members)
        return self.parent.leq_matrix[np.ix_(idx, idx)]

    def local_meet(self) -> np.ndarray:
        """区间上的 meet 表，取值为全局下标"""
        idx = np.asarray(self.members)
        return self.parent.meet_table[np.ix_(idx, idx)]


def _transitive_closure(n: int, edges: Iterable[Tuple[int, int]]) -> np.ndarray:
    leq = np.eye(n, dtype=bool)
    for x, y in edges:
        leq[x, y] = True
    # Warshall
    for k in range(n):
        leq |= np.outer(leq[:, k], leq[k, :])
    return leq


def _bound_tables(leq: np.ndarray) -> Tuple[np.ndarray, np.ndarray, Optional[Tuple[int, int, str]]]:
    """
    扫描所有公共下界/上界，计算 meet/join 表

    Returns:
        (meet, join, failure)；failure 为字典序第一个缺少唯一界的 (x, y, bound)
    """
    n = leq.shape[0]
    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            lower = np.flatnonzero(leq[:, x] & leq[:, y])
            greatest = [g for g in lower if leq[lower, g].all()]
            if len(greatest) != 1:
                return meet, join, (x, y, "meet")
            upper = np.flatnonzero(leq[x, :] & leq[y, :])
            least = [s for s in upper if leq[s, upper].all()]
            if len(least) != 1:
                return meet, join, (x, y, "join")
            meet[x, y] = greatest[0]
            join[x, y] = least[0]
    return meet, join, None


def is_lattice_order(leq: np.ndarray) -> bool:
    """判断一个有界偏序矩阵是否构成格（枚举器用）"""
    return _bound_tables(leq)[2] is None


def build_lattice(
    names: Sequence[str],
    covers: Iterable[Tuple[str, str]],
    bottom: str,
    top: str,
    name: str = "L",
    max_size: Optional[int] = None,
) -> FiniteBoundedLattice:
    """
    由覆盖关系构造有限有界格

    Args:
        names: 元素名（声明顺序即显示顺序）
        covers: 覆盖对 (lo, hi)，表示 lo ⋖ hi
        bottom: 声明的最小元
        top: 声明的最大元
        name: 格的名字
        max_size: 载体规模上限，默认取配置值 64

    Returns:
        校验通过的 FiniteBoundedLattice

    Raises:
        DuplicateName, UnknownElement, CycleDetected, NotALattice, WrongBounds, BudgetExceeded, MalformedInput
    """
    names = tuple(names)
    limit = max_size if max_size is not None else LATTICE_CONFIG["max_carrier_size"]
    if not names:
        raise MalformedInput("a lattice needs at least one element")
    if len(names) > limit:
        raise BudgetExceeded(f"lattice has {len(names)} elements, limit is {limit}")

    index: Dict[str, int] = {}
    for i, token in enumerate(names):
        if not token or any(ch.isspace() for ch in token):
            raise MalformedInput(f"element name '{token}' must be a non-empty token without whitespace")
        if token in index:
            raise DuplicateName(token)
        index[token] = i

    def resolve(token: str) -> int:
        if token not in index:
            raise UnknownElement(token)
        return index[token]

    edges = [(resolve(lo), resolve(hi)) for lo, hi in covers]

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(names)))
    graph.add_edges_from(edges)
    try:
        cycle = nx.find_cycle(graph)
        raise CycleDetected([names[u] for u, _ in cycle])
    except nx.NetworkXNoCycle:
        pass

    leq = _transitive_closure(len(names), edges)

    b, t = resolve(bottom), resolve(top)
    if not leq[b, :].all():
        witness = int(np.flatnonzero(~leq[b, :])[0])
        raise WrongBounds("bottom", names[b], names[witness])
    if not leq[:, t].all():
        witness = int(np.flatnonzero(~leq[:, t])[0])
        raise WrongBounds("top", names[t], names[witness])

    meet, join, failure = _bound_tables(leq)
    if failure is not None:
        x, y, bound = failure
        raise NotALattice((names[x], names[y]), bound)

    return FiniteBoundedLattice(
        name=name,
        names=names,
        leq_matrix=leq,
        meet_table=meet,
        join_table=join,
        bottom=b,
        top=t,
    )


def lattice_from_order(leq: np.ndarray, names: Sequence[str], name: str = "L") -> FiniteBoundedLattice:
    """由完整序矩阵重建格（经传递约简回到覆盖关系，走同一条校验路径）"""
    n = leq.shape[0]
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((x, y) for x in range(n) for y in range(n) if x != y and leq[x, y])
    covers = [(names[x], names[y]) for x, y in sorted(nx.transitive_reduction(graph).edges())]
    bottom = next(x for x in range(n) if leq[x, :].all())
    top = next(x for x in range(n) if leq[:, x].all())
    return build_lattice(names, covers, names[bottom], names[top], name=name)


def canonical_order_form(leq: np.ndarray, bottom: int, top: int) -> Tuple[tuple, Tuple[int, ...]]:
    """
    有界偏序矩阵的规范形（最小邻接编码，置换固定 bottom 与 top）

    Returns:
        (编码, 置换)
    """
    inner = [x for x in range(leq.shape[0]) if x not in (bottom, top)]
    best_code, best_perm = None, None
    for order in permutations(inner):
        perm = (bottom,) + order + (top,)
        code = tuple(int(v) for v in leq[np.ix_(perm, perm)].ravel())
        if best_code is None or code < best_code:
            best_code, best_perm = code, perm
    return best_code, best_perm

"""
文本格式模块

格与运算表的行式文本格式（# 开始注释，词元以空白分隔）：

    lattice L1
    elements 0 b a c 1
    bottom 0
    top 1
    cover 0 b
    ...
    op T
    interval 0 1
    map 0 0 0
    ...

一个文件可以带一个格（可选）以及任意多个运算。map 只需列出一次，读取时自动对称化；
同一对元素出现两个不同的值是错误，对称化后仍缺表项也是错误。
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from ..utils.errors import FormatError, WorkbenchError
from .lattice_core import FiniteBoundedLattice, build_lattice
from .optable import OpTable, check_commutative

LATTICE_DIRECTIVES = ("lattice", "elements", "bottom", "top", "cover")
OP_DIRECTIVES = ("op", "interval", "map")

# 指令 -> 参数个数（None 表示至少一个）
ARITY = {
    "lattice": 1,
    "elements": None,
    "bottom": 1,
    "top": 1,
    "cover": 2,
    "op": 1,
    "interval": 2,
    "map": 3,
}


@dataclass
class TextDocument:
    """一个解析后的文本文件"""
    source: str
    lattice: Optional[FiniteBoundedLattice] = None   # 文件中定义的格
    ops: List[OpTable] = field(default_factory=list)

    def op(self, name: Optional[str] = None) -> OpTable:
        """按名字取运算；不给名字时要求文件中恰好一个运算"""
        if name is None:
            if len(self.ops) != 1:
                raise FormatError(self.source, None, f"expected exactly one op, found {len(self.ops)}")
            return self.ops[0]
        for op in self.ops:
            if op.name == name:
                return op
        raise FormatError(self.source, None, f"no op named '{name}'")


@dataclass
class _LatticeDraft:
    line: int
    name: str
    elements: Optional[Tuple[str, ...]] = None
    bottom: Optional[str] = None
    top: Optional[str] = None
    covers: List[Tuple[str, str]] = field(default_factory=list)


@dataclass
class _OpDraft:
    line: int
    name: str
    interval: Optional[Tuple[str, str]] = None
    entries: Dict[Tuple[int, int], Tuple[int, int]] = field(default_factory=dict)  # (x,y) -> (v, line)


class TextFormatLoader:
    """行式文本解析器"""

    def __init__(self, lattice: Optional[FiniteBoundedLattice] = None, max_size: Optional[int] = None):
        """
        Args:
            lattice: 文件中没有格定义时，运算表所在的格
            max_size: 格载体规模上限（默认取配置值）
        """
        self.lattice = lattice
        self.max_size = max_size

    def load(self, path: Union[str, Path]) -> TextDocument:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise FormatError(str(path), None, f"cannot read file ({exc.strerror})") from exc
        return self.parse(text, source=str(path))

    def parse(self, text: str, source: str = "<string>") -> TextDocument:
        """
        解析一个文本文件

        Raises:
            FormatError: 未知指令、参数个数错误、表项冲突或缺失；
                格构造失败时以格定义行号包装原错误
        """
        document = TextDocument(source=source)
        draft: Optional[_LatticeDraft] = None
        current: Optional[_OpDraft] = None
        lattice = self.lattice

        for number, raw in enumerate(text.splitlines(), 1):
            tokens = raw.split("#", 1)[0].split()
            if not tokens:
                continue
            directive, args = tokens[0], tokens[1:]
            if directive not in ARITY:
                raise FormatError(source, number, f"unknown directive '{directive}'")
            arity = ARITY[directive]
            if (arity is None and not args) or (arity is not None and len(args) != arity):
                raise FormatError(source, number, f"'{directive}' takes {arity or 'at least one'} argument(s), got {len(args)}")

            if directive in LATTICE_DIRECTIVES:
                if current is not None or document.ops:
                    raise FormatError(source, number, "lattice directives must precede all ops")
                if directive == "lattice":
                    if draft is not None:
                        raise FormatError(source, number, "only one lattice per file")
                    draft = _LatticeDraft(line=number, name=args[0])
                    continue
                if draft is None:
                    draft = _LatticeDraft(line=number, name=Path(source).stem or "L")
                self._lattice_directive(draft, directive, args, source, number)
                continue

            # 运算指令
            if directive == "op":
                if draft is not None:
                    lattice = self._build(draft, source)
                    document.lattice = lattice
                    draft = None
                if current is not None:
                    document.ops.append(self._finish_op(current, lattice, source))
                if lattice is None:
                    raise FormatError(source, number, "op needs a lattice (define one in the file or pass --lattice)")
                current = _OpDraft(line=number, name=args[0])
                continue
            if current is None:
                raise FormatError(source, number, f"'{directive}' outside an op block")
            if directive == "interval":
                if current.interval is not None:
                    raise FormatError(source, number, "interval given twice")
                current.interval = (args[0], args[1])
            else:
                self._map_directive(current, lattice, args, source, number)

        if draft is not None:
            document.lattice = self._build(draft, source)
        if current is not None:
            document.ops.append(self._finish_op(current, lattice, source))
        return document

    @staticmethod
    def _lattice_directive(draft: _LatticeDraft, directive: str, args: List[str], source: str, number: int) -> None:
        if directive == "elements":
            if draft.elements is not None:
                raise FormatError(source, number, "elements given twice")
            draft.elements = tuple(args)
        elif directive == "bottom":
            draft.bottom = args[0]
        elif directive == "top":
            draft.top = args[0]
        else:
            draft.covers.append((args[0], args[1]))

    def _build(self, draft: _LatticeDraft, source: str) -> FiniteBoundedLattice:
        for key in ("elements", "bottom", "top"):
            if getattr(draft, key) is None:
                raise FormatError(source, draft.line, f"lattice '{draft.name}' has no '{key}' line")
        try:
            return build_lattice(
                draft.elements, draft.covers, draft.bottom, draft.top,
                name=draft.name, max_size=self.max_size,
            )
        except WorkbenchError as exc:
            raise FormatError(source, draft.line, exc.message) from exc

    @staticmethod
    def _map_directive(current: _OpDraft, lattice: FiniteBoundedLattice, args: List[str], source: str, number: int) -> None:
        try:
            x, y, v = (lattice.index(token) for token in args)
        except WorkbenchError as exc:
            raise FormatError(source, number, exc.message) from exc
        for cell, explicit in (((x, y), True), ((y, x), False)):
            known = current.entries.get(cell)
            if known is None:
                current.entries[cell] = (v, number if explicit else -number)
                continue
            value, origin = known
            if value != v and (explicit or origin > 0):
                names = lattice.names
                raise FormatError(
                    source, number,
                    f"conflicting entries for ({names[x]},{names[y]}): "
                    f"{names[value]} on line {abs(origin)} and {names[v]}",
                )
            if explicit:
                current.entries[cell] = (v, number)

    @staticmethod
    def _finish_op(current: _OpDraft, lattice: FiniteBoundedLattice, source: str) -> OpTable:
        if current.interval is None:
            raise FormatError(source, current.line, f"op '{current.name}' has no interval line")
        try:
            iv = lattice.interval(*current.interval)
        except WorkbenchError as exc:
            raise FormatError(source, current.line, exc.message) from exc
        values = np.zeros((iv.size, iv.size), dtype=np.int64)
        for i, x in enumerate(iv.members):
            for j, y in enumerate(iv.members):
                entry = current.entries.get((x, y))
                if entry is None:
                    names = lattice.names
                    raise FormatError(source, current.line, f"op '{current.name}' misses the entry for ({names[x]},{names[y]})")
                values[i, j] = entry[0]
        try:
            return OpTable(domain=iv, values=values, name=current.name)
        except WorkbenchError as exc:
            raise FormatError(source, current.line, exc.message) from exc


def render_lattice(lattice: FiniteBoundedLattice) -> str:
    """格 -> 文本（覆盖关系按下标顺序）"""
    names = lattice.names
    lines = [
        f"lattice {lattice.name}",
        "elements " + " ".join(names),
        f"bottom {names[lattice.bottom]}",
        f"top {names[lattice.top]}",
    ]
    lines.extend(f"cover {names[x]} {names[y]}" for x, y in lattice.covers())
    return "\n".join(lines) + "\n"


def render_op(op: OpTable, with_lattice: bool = False) -> str:
    """
    运算表 -> 文本，只写 x <= y（局部顺序）的一半

    Raises:
        FormatError: 运算不交换，文本格式无法表达
    """
    verdict = check_commutative(op)
    names = op.lattice.names
    if not verdict.holds:
        x, y = verdict.witness
        raise FormatError(op.name, None, f"op is not commutative at ({names[x]},{names[y]}) and cannot be written")
    members = op.domain.members
    lines = [f"op {op.name}", f"interval {names[op.domain.lo]} {names[op.domain.hi]}"]
    for i, x in enumerate(members):
        for j in range(i, len(members)):
            lines.append(f"map {names[x]} {names[members[j]]} {names[int(op.values[i, j])]}")
    text = "\n".join(lines) + "\n"
    if with_lattice:
        return render_lattice(op.lattice) + "\n" + text
    return text


def load_lattice(path: Union[str, Path], max_size: Optional[int] = None) -> FiniteBoundedLattice:
    document = TextFormatLoader(max_size=max_size).load(path)
    if document.lattice is None:
        raise FormatError(str(path), None, "file defines no lattice")
    return document.lattice


def load_op(path: Union[str, Path], lattice: Optional[FiniteBoundedLattice] = None, name: Optional[str] = None) -> OpTable:
    """读取运算表；文件自带格时优先使用文件中的格"""
    return TextFormatLoader(lattice).load(path).op(name)

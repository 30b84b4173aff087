"""
报告渲染模块

把运算表渲染成格式化表格（表头行 + 每个元素一行，按声明顺序），
并把公理/条件/比较/枚举结果渲染成固定词汇的文本行。
"""
from typing import Iterable, List, Optional

from ..templates import report_templates as tpl
from .lattice_core import FiniteBoundedLattice
from .miner import Counterexample, MinerResult
from .optable import AxiomReport, OpTable
from .text_format import render_lattice, render_op
from .verdicts import AxiomVerdict, ConditionVerdict, OrderVerdict


def render_table(op: OpTable, label: Optional[str] = None) -> str:
    """
    格式化运算表

        T | 0 b a c 1
        --+----------
        0 | 0 0 0 0 0
        ...
    """
    label = label or op.name
    names = op.lattice.names
    members = op.domain.members
    cell = max(len(names[m]) for m in members)
    width = max([len(label)] + [len(names[m]) for m in members])

    def row(head: str, values: Iterable[int]) -> str:
        body = " ".join(names[v].ljust(cell) for v in values).rstrip()
        return f"{head:<{width}} | {body}"

    header = row(label, members)
    body_width = len(header) - width - 3
    lines = [header, "-" * (width + 1) + "+" + "-" * (body_width + 1)]
    for i, x in enumerate(members):
        lines.append(row(names[x], (int(v) for v in op.values[i])))
    return "\n".join(lines) + "\n"


def _axiom_line(op: OpTable, verdict: AxiomVerdict, label: str) -> str:
    if verdict.holds:
        return tpl.AXIOM_HOLDS.format(axiom=verdict.axiom)
    names = op.lattice.names
    n = names.__getitem__

    if verdict.axiom == "commutative":
        x, y = verdict.witness
        return tpl.COMMUTATIVE_FAIL.format(label=label, x=n(x), y=n(y), xy=n(op(x, y)), yx=n(op(y, x)))
    if verdict.axiom == "associative":
        x, y, z = verdict.witness
        return tpl.ASSOCIATIVE_FAIL.format(
            label=label, x=n(x), y=n(y), z=n(z),
            left=n(op(op(x, y), z)), right=n(op(x, op(y, z))),
        )
    if verdict.axiom == "increasing":
        x, y, z = verdict.witness
        if verdict.argument == 1:
            left_args, right_args, left, right = (x, z), (y, z), op(x, z), op(y, z)
        else:
            left_args, right_args, left, right = (z, x), (z, y), op(z, x), op(z, y)
        return tpl.INCREASING_FAIL.format(
            x=n(x), y=n(y), z=n(z),
            left_call=f"{label}({n(left_args[0])},{n(left_args[1])})", left=n(left),
            right_call=f"{label}({n(right_args[0])},{n(right_args[1])})", right=n(right),
        )
    if verdict.axiom == "neutral_top":
        (x,) = verdict.witness
        hi = op.domain.hi
        return tpl.NEUTRAL_FAIL.format(label=label, x=n(x), hi=n(hi), hx=n(op(hi, x)), xh=n(op(x, hi)))
    x, y = verdict.witness
    return tpl.RANGE_FAIL.format(
        label=label, x=n(x), y=n(y), xy=n(op(x, y)), meet=n(op.lattice.meet(x, y)),
    )


def render_axiom_report(op: OpTable, report: AxiomReport, axioms: Iterable[str], label: Optional[str] = None) -> str:
    """选定公理的判定行，最后附 t-norm / t-subnorm 分类"""
    label = label or op.name
    lines = [_axiom_line(op, getattr(report, axiom), label) for axiom in axioms]
    lines.append(tpl.CLASSIFICATION.format(
        tnorm="yes" if report.is_tnorm else "no",
        tsubnorm="yes" if report.is_tsubnorm else "no",
    ))
    return "\n".join(lines) + "\n"


def format_witness(lattice: FiniteBoundedLattice, witness: tuple) -> str:
    names = [lattice.names[v] for v in witness]
    if len(names) == 1:
        return names[0]
    return "(" + ",".join(names) + ")"


def render_condition(lattice: FiniteBoundedLattice, verdict: ConditionVerdict) -> str:
    if verdict.holds:
        return tpl.CONDITION_HOLDS.format(condition=verdict.condition) + "\n"
    witnesses = " ".join(format_witness(lattice, w) for w in verdict.witnesses)
    return tpl.CONDITION_FAILS.format(condition=verdict.condition, witnesses=witnesses) + "\n"


def render_order(p: OpTable, q: OpTable, verdict: OrderVerdict) -> str:
    lattice = p.lattice
    if verdict.relation == "equal":
        return tpl.ORDER_EQUAL.format(p=p.name, q=q.name) + "\n"
    if verdict.relation == "incomparable":
        first, second = (format_witness(lattice, w) for w in verdict.witnesses)
        return tpl.ORDER_INCOMPARABLE.format(p=p.name, q=q.name, first=first, second=second) + "\n"
    template = tpl.ORDER_LESS if verdict.relation == "less" else tpl.ORDER_GREATER
    return template.format(p=p.name, q=q.name, witness=format_witness(lattice, verdict.witnesses[0])) + "\n"


def render_counterexample(ce: Counterexample) -> str:
    names = ce.lattice.names
    return tpl.COUNTEREXAMPLE_LINE.format(
        theorem=ce.theorem.value,
        lattice=ce.lattice.name,
        pivot=names[ce.pivot],
        t1=ce.t1.name if ce.t1 is not None else "-",
        t2=ce.t2.name if ce.t2 is not None else "-",
        method=ce.method,
        failed=ce.failed,
        witness=format_witness(ce.lattice, ce.witness) if ce.witness else "-",
    )


def render_violation(ce: Counterexample) -> str:
    return tpl.VIOLATION_LINE.format(
        lattice=ce.lattice.name,
        pivot=ce.lattice.names[ce.pivot],
        failed=ce.failed,
        witness=format_witness(ce.lattice, ce.witness) if ce.witness else "-",
    )


def render_miner_result(result: MinerResult, verbose: bool = False) -> str:
    """汇总行 + 违反列表；verbose 时再列出全部反例"""
    lines: List[str] = [result.summary()]
    lines.extend(render_violation(ce) for ce in result.violations)
    if verbose:
        lines.extend(render_counterexample(ce) for ce in result.counterexamples)
    return "\n".join(lines) + "\n"


def render_bundle(ce: Counterexample) -> dict:
    """
    反例目录的文件内容

    Returns:
        文件名 -> 文本，包括 lattice.lat、t1.op、t2.op（存在时）和 verdict.txt
    """
    files = {"lattice.lat": render_lattice(ce.lattice)}
    if ce.t1 is not None:
        files["t1.op"] = render_op(ce.t1)
    if ce.t2 is not None:
        files["t2.op"] = render_op(ce.t2)
    verdict = render_counterexample(ce) + "\n"
    if ce.detail:
        verdict += ce.detail + "\n"
    files["verdict.txt"] = verdict
    return files

"""
命令行前端

退出码：0 = 性质成立 / 构造成功；1 = 性质不成立（打印反例，构造仍然输出）；
2 = 输入或用法错误（标准错误输出一行诊断）。
"""
import functools
from pathlib import Path
from typing import Optional, Tuple

import click

from .modules.lattice_core import FiniteBoundedLattice, Interval
from .modules.miner import HypothesisMode, TargetTheorem, TheoremMiner
from .modules.optable import ALL_AXIOMS, TNORM_AXIOMS, TSUBNORM_AXIOMS, OpTable, check_axioms, compare_ops, make_meet_tnorm
from .modules.ordsum import (
    OrdinalSumInput,
    check_increasingness_condition,
    check_proposition1,
    check_saminger_conditions,
    check_tnorm_condition,
    corollary1_sum,
    corollary2_sum,
    ey_sum,
    saminger_sum,
)
from .modules.report_renderer import (
    render_axiom_report,
    render_bundle,
    render_condition,
    render_counterexample,
    render_miner_result,
    render_order,
    render_table,
)
from .modules.text_format import TextFormatLoader, load_lattice, load_op, render_lattice, render_op
from .templates.report_templates import NO_COUNTEREXAMPLE
from .utils.config_loader import WorkbenchConfig, resolve_config
from .utils.errors import FormatError, WorkbenchError

AXIOM_SETS = {
    "tnorm": TNORM_AXIOMS,
    "tsubnorm": TSUBNORM_AXIOMS,
    "all": ALL_AXIOMS,
}

FILE = click.Path(exists=True, dir_okay=False, path_type=Path)


def handle_errors(command):
    """把 WorkbenchError 映射为退出码 2 和一行诊断"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except WorkbenchError as exc:
            click.echo(f"error: {exc.message}", err=True)
            ctx.exit(2)
    return wrapper


def _config(ctx: click.Context) -> WorkbenchConfig:
    return ctx.obj


def _load_lattice(ctx: click.Context, path: Path) -> FiniteBoundedLattice:
    return load_lattice(path, max_size=_config(ctx).max_carrier_size)


def _load_op(path: Path, lattice: Optional[FiniteBoundedLattice]) -> OpTable:
    return load_op(path, lattice)


@click.group()
@click.option("--config", "config_path", type=FILE, default=None, help="YAML configuration file")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[Path]):
    """Finite bounded lattices and ordinal sums of t-norms."""
    try:
        ctx.obj = resolve_config(config_path)
    except (WorkbenchError, FileNotFoundError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(2)


# ========== 格 ==========

@cli.command()
@click.argument("lattice_file", type=FILE)
@click.option("--render", is_flag=True, help="print the normalized lattice text")
@click.pass_context
@handle_errors
def validate(ctx, lattice_file, render):
    """Build and validate a lattice file."""
    lattice = _load_lattice(ctx, lattice_file)
    names = lattice.names
    click.echo(
        f"lattice {lattice.name}: valid, {lattice.size} elements, "
        f"bottom {names[lattice.bottom]}, top {names[lattice.top]}"
    )
    if render:
        click.echo(render_lattice(lattice), nl=False)


@cli.command()
@click.argument("lattice_file", type=FILE)
@click.argument("x")
@click.argument("y")
@click.pass_context
@handle_errors
def meet(ctx, lattice_file, x, y):
    """Print the meet of X and Y."""
    lattice = _load_lattice(ctx, lattice_file)
    click.echo(lattice.names[lattice.meet(x, y)])


@cli.command()
@click.argument("lattice_file", type=FILE)
@click.argument("x")
@click.argument("y")
@click.pass_context
@handle_errors
def join(ctx, lattice_file, x, y):
    """Print the join of X and Y."""
    lattice = _load_lattice(ctx, lattice_file)
    click.echo(lattice.names[lattice.join(x, y)])


@cli.command()
@click.argument("lattice_file", type=FILE)
@click.argument("lo")
@click.argument("hi")
@click.pass_context
@handle_errors
def interval(ctx, lattice_file, lo, hi):
    """Print the members of [LO,HI] and its half-open views."""
    lattice = _load_lattice(ctx, lattice_file)
    iv = lattice.interval(lo, hi)
    names = lattice.names
    click.echo(f"{iv.label}: " + " ".join(names[m] for m in iv.members))
    click.echo(f"[{names[iv.lo]},{names[iv.hi]}): " + " ".join(names[m] for m in iv.below_top()))
    click.echo(f"({names[iv.lo]},{names[iv.hi]}]: " + " ".join(names[m] for m in iv.above_bottom()))


# ========== 运算表 ==========

@cli.command("check-op")
@click.argument("op_file", type=FILE)
@click.option("--lattice", "lattice_file", type=FILE, default=None, help="lattice file when OP_FILE has none")
@click.option("--axioms", type=click.Choice(sorted(AXIOM_SETS)), default="tnorm", show_default=True)
@click.option("--name", default=None, help="op to check when the file holds several")
@click.pass_context
@handle_errors
def check_op(ctx, op_file, lattice_file, axioms, name):
    """Check an operation table against an axiom set."""
    lattice = _load_lattice(ctx, lattice_file) if lattice_file else None
    op = TextFormatLoader(lattice).load(op_file).op(name)
    report = check_axioms(op)
    selected = AXIOM_SETS[axioms]
    label = _config(ctx).table_label
    click.echo(render_axiom_report(op, report, selected, label=label), nl=False)
    ctx.exit(0 if report.satisfies(selected) else 1)


@cli.command()
@click.argument("p_file", type=FILE)
@click.argument("q_file", type=FILE)
@click.option("--lattice", "lattice_file", type=FILE, default=None)
@click.pass_context
@handle_errors
def compare(ctx, p_file, q_file, lattice_file):
    """Compare two operations pointwise; exit 0 when P <= Q."""
    lattice = _load_lattice(ctx, lattice_file) if lattice_file else None
    p, q = _load_op(p_file, lattice), _load_op(q_file, lattice)
    verdict = compare_ops(p, q)
    click.echo(render_order(p, q, verdict), nl=False)
    ctx.exit(0 if verdict.relation in ("equal", "less") else 1)


# ========== 序和 ==========

def _summand(lattice: FiniteBoundedLattice, path: Optional[Path], label: str, iv: Interval) -> OpTable:
    if path is None:
        return make_meet_tnorm(iv)
    op = _load_op(path, lattice)
    if op.domain != iv:
        raise FormatError(str(path), None, f"{label} must be defined on {iv.label}, got {op.domain.label}")
    return op


def _summands(lattice, pivot, t1_file, t2_file) -> Tuple[OpTable, OpTable]:
    a = lattice.require_interior(pivot)
    t1 = _summand(lattice, t1_file, "t1", lattice.interval(a, lattice.top))
    t2 = _summand(lattice, t2_file, "t2", lattice.interval(lattice.bottom, a))
    return t1, t2


@cli.command()
@click.option("--method", type=click.Choice(["saminger", "ey", "c1", "c2"]), default="ey", show_default=True)
@click.option("--lattice", "lattice_file", type=FILE, required=True)
@click.option("--pivot", required=True)
@click.option("--t1", "t1_file", type=FILE, default=None, help="op on [pivot,top] (default T_M)")
@click.option("--t2", "t2_file", type=FILE, default=None, help="op on [bottom,pivot] (default T_M; unused by c1/c2)")
@click.option("--render", is_flag=True, help="print the rendered table instead of op text")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_context
@handle_errors
def construct(ctx, method, lattice_file, pivot, t1_file, t2_file, render, out):
    """Build an ordinal sum; never refuses on condition failure."""
    lattice = _load_lattice(ctx, lattice_file)
    t1, t2 = _summands(lattice, pivot, t1_file, t2_file)
    if method == "c1":
        table = corollary1_sum(lattice, pivot, t1)
    elif method == "c2":
        table = corollary2_sum(lattice, pivot, t1)
    else:
        sum_input = OrdinalSumInput.make(lattice, pivot, t1, t2)
        table = ey_sum(sum_input) if method == "ey" else saminger_sum(sum_input)
    label = _config(ctx).table_label
    table = table.renamed(label)
    if out is not None:
        out.write_text(render_op(table, with_lattice=True), encoding="utf-8")
    if render:
        click.echo(render_table(table, label=label), nl=False)
    elif out is None:
        click.echo(render_op(table, with_lattice=True), nl=False)


@cli.command("check-condition")
@click.argument("lattice_file", type=FILE)
@click.option("--pivot", required=True)
@click.option(
    "--theorem",
    type=click.Choice(["saminger", "increasing", "tnorm", "lemma", "proposition"]),
    default="tnorm", show_default=True,
)
@click.option("--t1", "t1_file", type=FILE, default=None, help="op on [pivot,top] (default T_M)")
@click.option("--t2", "t2_file", type=FILE, default=None, help="op on [bottom,pivot] (default T_M)")
@click.pass_context
@handle_errors
def check_condition(ctx, lattice_file, pivot, theorem, t1_file, t2_file):
    """Decide a side condition at PIVOT; exit 0 when it holds."""
    lattice = _load_lattice(ctx, lattice_file)
    if theorem == "saminger":
        verdict = check_saminger_conditions(lattice, pivot)
    elif theorem == "lemma":
        verdict = lattice.check_lemma_incomparable_meet(pivot)
    else:
        t1, t2 = _summands(lattice, pivot, t1_file, t2_file)
        sum_input = OrdinalSumInput.make(lattice, pivot, t1, t2)
        checks = {
            "increasing": check_increasingness_condition,
            "tnorm": check_tnorm_condition,
            "proposition": check_proposition1,
        }
        verdict = checks[theorem](sum_input)
    click.echo(render_condition(lattice, verdict), nl=False)
    ctx.exit(0 if verdict.holds else 1)


@cli.command()
@click.argument("op_file", type=FILE)
@click.option("--lattice", "lattice_file", type=FILE, default=None)
@click.option("--table/--text", default=True, help="rendered table or normalized op text")
@click.option("--name", default=None)
@click.pass_context
@handle_errors
def render(ctx, op_file, lattice_file, table, name):
    """Render an op file (or a lattice file) deterministically."""
    lattice = _load_lattice(ctx, lattice_file) if lattice_file else None
    document = TextFormatLoader(lattice).load(op_file)
    if not document.ops:
        if document.lattice is None:
            raise WorkbenchError(f"{op_file}: nothing to render")
        click.echo(render_lattice(document.lattice), nl=False)
        return
    op = document.op(name)
    if table:
        click.echo(render_table(op, label=_config(ctx).table_label), nl=False)
    else:
        click.echo(render_op(op, with_lattice=document.lattice is not None), nl=False)


# ========== 枚举器 ==========

def miner_options(command):
    options = [
        click.option("--theorem", type=click.Choice([t.value for t in TargetTheorem]), default=None),
        click.option("--mode", type=click.Choice([m.value for m in HypothesisMode]), default=None),
        click.option("--t1-mode", type=click.Choice([m.value for m in HypothesisMode]), default=None),
        click.option("--t2-mode", type=click.Choice([m.value for m in HypothesisMode]), default=None),
        click.option("--max-size", type=int, default=None, help="largest lattice to enumerate"),
        click.option("--min-size", type=int, default=None, help="smallest lattice to enumerate"),
        click.option("--max-interval", type=int, default=None, help="largest interval for op enumeration"),
        click.option("--workers", type=int, default=None),
        click.option("--lattice", "lattice_files", type=FILE, multiple=True, help="scan only these lattices"),
        click.option("--verbose", is_flag=True, help="progress on stderr, all counterexamples on stdout"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _miner(ctx, theorem, mode, t1_mode, t2_mode, max_size, min_size, max_interval, workers, lattice_files, verbose):
    config = _config(ctx)
    lattices = tuple(_load_lattice(ctx, path) for path in lattice_files)
    miner_config = config.miner_config(
        theorem=theorem, mode=mode, t1_mode=t1_mode, t2_mode=t2_mode,
        max_lattice_size=max_size, min_lattice_size=min_size,
        max_interval_size=max_interval, workers=workers,
        lattices=lattices or None,
    )
    verbose = verbose or config.verbose
    progress = (lambda message: click.echo(message, err=True)) if verbose else None
    return TheoremMiner(miner_config, progress), verbose


@cli.command("verify-theorem")
@miner_options
@click.pass_context
@handle_errors
def verify_theorem(ctx, verbose, **options):
    """Exhaustively verify an equivalence theorem; exit 0 on zero violations."""
    miner, verbose = _miner(ctx, verbose=verbose, **options)
    result = miner.verify()
    click.echo(render_miner_result(result, verbose=verbose), nl=False)
    ctx.exit(0 if result.violation_total == 0 else 1)


@cli.command()
@miner_options
@click.option("--out", type=click.Path(file_okay=False, path_type=Path), default=None,
              help="write counterexample bundles ce_NNN/ here")
@click.option("--first", is_flag=True, help="stop at the first counterexample")
@click.pass_context
@handle_errors
def mine(ctx, verbose, out, first, **options):
    """Hunt for counterexamples; exit 1 when one is found."""
    miner, verbose = _miner(ctx, verbose=verbose, **options)
    result = miner.find_counterexample() if first else miner.verify()
    click.echo(result.summary())
    if not result.counterexamples:
        click.echo(NO_COUNTEREXAMPLE)
        ctx.exit(0)
    for ce in result.counterexamples:
        click.echo(render_counterexample(ce))
    if out is not None:
        for k, ce in enumerate(result.counterexamples, 1):
            bundle = out / f"ce_{k:03d}"
            bundle.mkdir(parents=True, exist_ok=True)
            for filename, text in render_bundle(ce).items():
                (bundle / filename).write_text(text, encoding="utf-8")
        if verbose:
            click.echo(f"✓ wrote {len(result.counterexamples)} bundles to {out}", err=True)
    ctx.exit(1)


def main():
    cli(obj=None)


if __name__ == "__main__":
    main()

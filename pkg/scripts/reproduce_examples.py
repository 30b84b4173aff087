"""
Worked examples replay

Pipeline:
1. L1 -> L1, constant summands, EY sum is not increasing
2. Diamond L2, same summands, EY sum is a t-norm
3. 5-chain, constant summand above the meet breaks increasingness
4. Saminger contrast -> L1 violates the incomparability conditions
5. Theorem sweep -> exhaustive check of the t-norm theorem on small lattices
"""
import sys
from pathlib import Path

# 添加src到路径
BASE_DIR = Path(__file__).parent.parent
sys.path.insert(0, str(BASE_DIR))

from src.config import EXAMPLES_DIR
from src.modules.miner import MinerConfig, TheoremMiner
from src.modules.optable import check_axioms, make_drastic_tnorm, make_meet_tnorm
from src.modules.ordsum import (
    OrdinalSumInput,
    check_saminger_conditions,
    check_tnorm_condition,
    ey_sum,
    saminger_sum,
)
from src.modules.report_renderer import render_axiom_report, render_condition, render_miner_result, render_table
from src.modules.text_format import load_lattice, load_op
from src.utils.config_loader import resolve_config


def constant_sum(lattice_file: str, t2_file: str, pivot: str = "a"):
    lattice = load_lattice(EXAMPLES_DIR / lattice_file)
    t1 = load_op(EXAMPLES_DIR / "const_a.op", lattice)
    t2 = load_op(EXAMPLES_DIR / t2_file, lattice)
    return lattice, OrdinalSumInput.make(lattice, pivot, t1, t2)


def main():
    """主流程"""
    config = resolve_config()

    print(f"\n{'='*60}")
    print("OrdSum Workbench - worked examples")
    print(f"{'='*60}\n")

    # ========== Step 1: L1 ==========
    print("📐 Step 1: EY sum on L1 with constant summands")
    print("-" * 60)
    lattice, sum_input = constant_sum("L1.lat", "const_0_L1.op")
    table = ey_sum(sum_input)
    print(render_table(table, label=config.table_label))
    print(render_axiom_report(table, check_axioms(table), ("increasing",), label=config.table_label))
    print(render_condition(lattice, check_tnorm_condition(sum_input)))

    # ========== Step 2: diamond ==========
    print("📐 Step 2: EY sum on the diamond L2")
    print("-" * 60)
    lattice, sum_input = constant_sum("L2.lat", "const_0_L2.op")
    table = ey_sum(sum_input)
    print(render_table(table, label=config.table_label))
    print(render_condition(lattice, check_tnorm_condition(sum_input)))
    print(f"✓ t-norm: {check_axioms(table).is_tnorm}\n")

    # ========== Step 3: lifted constant ==========
    print("📐 Step 3: constant summand above the meet on a 5-chain")
    print("-" * 60)
    chain = load_lattice(EXAMPLES_DIR / "C5.lat")
    t1 = make_meet_tnorm(chain.interval("h", "1"))
    t2 = load_op(EXAMPLES_DIR / "const_h_C5.op", chain)
    table = ey_sum(OrdinalSumInput.make(chain, "h", t1, t2))
    print(render_table(table, label=config.table_label))
    print(render_axiom_report(table, check_axioms(table), ("increasing", "range_leq_meet"), label=config.table_label))

    # ========== Step 4: Saminger contrast ==========
    print("📐 Step 4: Saminger sum on L1")
    print("-" * 60)
    lattice = load_lattice(EXAMPLES_DIR / "L1.lat")
    print(render_condition(lattice, check_saminger_conditions(lattice, "a")), end="")
    sum_input = OrdinalSumInput.make(
        lattice, "a",
        make_meet_tnorm(lattice.interval("a", "1")),
        make_drastic_tnorm(lattice.interval("0", "a")),
    )
    table = saminger_sum(sum_input)
    failure = check_axioms(table).first_failure()
    if failure is None:
        print("❌ Saminger sum is unexpectedly a t-norm\n")
    else:
        print(f"✓ Saminger sum with T_M and T_D fails {failure.axiom}\n")

    # ========== Step 5: Theorem sweep ==========
    print("🔍 Step 5: exhaustive t-norm theorem sweep (lattices up to 5 elements)")
    print("-" * 60)
    miner_config = MinerConfig(max_lattice_size=5, min_lattice_size=3, mode="tsubnorm", theorem="tnorm-thm5")
    result = TheoremMiner(miner_config, progress=print).verify()
    print(render_miner_result(result))

    print(f"{'='*60}")
    if result.violation_total == 0:
        print("✅ All examples reproduced")
    else:
        print("❌ Theorem sweep reported violations")
    print(f"{'='*60}\n")


if __name__ == "__main__":
    main()

"""
穷举验证测试

每个定理在 ≤5 元格上跑完整扫描（边界无关性在 ≤4 元格上）。
"""
from itertools import product

import numpy as np
import pytest

from src.modules.miner import (
    MODE_AXIOMS,
    Counterexample,
    HypothesisMode,
    MinerConfig,
    TargetTheorem,
    TheoremMiner,
    enumerate_lattices,
    enumerate_ops,
    find_counterexample,
    verify_theorem,
)
from src.modules.optable import OpTable, check_axioms, compare_ops, make_drastic_tnorm, make_meet_tnorm
from src.modules.ordsum import (
    OrdinalSumInput,
    check_condition_b,
    check_condition_c,
    check_summands_increasing,
    ey_sum,
    irrelevant_boundary,
)
from src.utils.errors import BudgetExceeded
from tests.conftest import chain


def sweep(theorem, mode, max_size=5, **kwargs):
    return MinerConfig(max_lattice_size=max_size, min_lattice_size=3, theorem=theorem, mode=mode, **kwargs)


class TestEnumerateLattices:

    @pytest.mark.parametrize("n, count", [(2, 1), (3, 1), (4, 2), (5, 5), (6, 15)])
    def test_counts(self, n, count):
        assert len(list(enumerate_lattices(n))) == count

    def test_four_elements(self, l2):
        found = list(enumerate_lattices(4))
        codes = {lat.canonical_code() for lat in found}
        assert l2.canonical_code() in codes
        assert chain(["0", "x", "y", "1"]).canonical_code() in codes

    def test_l1_appears(self, l1):
        assert any(lat.canonical_code() == l1.canonical_code() for lat in enumerate_lattices(5))

    def test_deterministic(self):
        assert list(enumerate_lattices(5)) == list(enumerate_lattices(5))

    @pytest.mark.parametrize("n", [1, 8])
    def test_budget(self, n):
        with pytest.raises(BudgetExceeded):
            list(enumerate_lattices(n))


class TestEnumerateOps:

    def test_two_elements(self):
        iv = chain(["lo", "hi"]).full_interval()
        assert len(list(enumerate_ops(iv, HypothesisMode.TNORM))) == 1
        assert len(list(enumerate_ops(iv, HypothesisMode.TSUBNORM))) == 2

    def test_three_chain_tnorms(self):
        three = chain(["0", "m", "a"])
        iv = three.full_interval()
        found = list(enumerate_ops(iv, HypothesisMode.TNORM))
        assert len(found) == 2
        assert {op("m", "m") for op in found} == {three.index("0"), three.index("m")}
        assert make_meet_tnorm(iv) in found and make_drastic_tnorm(iv) in found

    @pytest.mark.parametrize("mode", list(HypothesisMode))
    def test_matches_naive_filter(self, mode):
        three = chain(["0", "m", "a"])
        iv = three.full_interval()
        members = np.asarray(iv.members)
        axioms = ("commutative",) + MODE_AXIOMS[mode]
        naive = set()
        for values in product(range(3), repeat=9):
            op = OpTable(domain=iv, values=members[np.array(values).reshape(3, 3)])
            if check_axioms(op).satisfies(axioms):
                naive.add(op)
        assert set(enumerate_ops(iv, mode)) == naive

    def test_extremality(self):
        for n in range(2, 6):
            for lattice in enumerate_lattices(n):
                for lo, hi in product(lattice.elements, repeat=2):
                    if not lattice.le(lo, hi):
                        continue
                    iv = lattice.interval(lo, hi)
                    low, high = make_drastic_tnorm(iv), make_meet_tnorm(iv)
                    for op in enumerate_ops(iv, HypothesisMode.TNORM):
                        assert compare_ops(low, op).relation in ("less", "equal")
                        assert compare_ops(op, high).relation in ("less", "equal")

    def test_interval_budget(self):
        big = chain([str(i) for i in range(7)])
        with pytest.raises(BudgetExceeded):
            list(enumerate_ops(big.full_interval(), HypothesisMode.TNORM))


class TestMinerConfig:

    def test_strings_are_coerced(self):
        config = MinerConfig(mode="tnorm", theorem="ey-thm3")
        assert config.mode is HypothesisMode.TNORM
        assert config.theorem is TargetTheorem.EY

    @pytest.mark.parametrize("field, value", [
        ("max_lattice_size", 8), ("max_lattice_size", 1), ("max_interval_size", 6), ("workers", 0),
    ])
    def test_budget(self, field, value):
        with pytest.raises(BudgetExceeded):
            MinerConfig(**{field: value})

    def test_hypotheses_hold(self):
        assert MinerConfig(mode="tsubnorm", theorem="tnorm-thm5").hypotheses_hold
        assert MinerConfig(mode="tnorm", theorem="tnorm-thm5").hypotheses_hold
        assert MinerConfig(mode="tsubnorm", theorem="increasing-thm4").hypotheses_hold
        assert not MinerConfig(mode="tsubnorm", theorem="ey-thm3").hypotheses_hold
        assert not MinerConfig(mode="commutative-associative-monotone", theorem="ey-thm3").hypotheses_hold
        assert not MinerConfig(mode="tnorm", t2_mode="tsubnorm", theorem="ey-thm3").hypotheses_hold
        assert MinerConfig(mode="tnorm", t2_mode="tsubnorm", theorem="corollary-coherence").hypotheses_hold


class TestTheoremSweeps:

    def test_tnorm_theorem(self):
        result = verify_theorem(sweep("tnorm-thm5", "tsubnorm"))
        assert result.instances > 0
        assert result.violation_total == 0
        assert result.violations == []

    def test_increasingness_theorem(self):
        result = verify_theorem(sweep("increasing-thm4", "commutative-range"))
        assert result.instances > 0
        assert result.violation_total == 0

    def test_ey_sum_of_tnorms(self):
        result = verify_theorem(sweep("ey-thm3", "tnorm"))
        assert result.instances > 0
        assert result.counterexample_total == 0
        assert result.violation_total == 0

    def test_corollary_coherence(self):
        result = verify_theorem(sweep("corollary-coherence", "tnorm"))
        assert result.instances > 0
        assert result.counterexample_total == 0

    def test_saminger_contrast(self):
        result = verify_theorem(sweep("saminger-thm2", "tnorm"))
        assert result.violation_total == 0
        # 条件不成立的格上确实有 t-norm 对失败
        assert result.counterexample_total > 0

    def test_saminger_on_l1_only(self, l1):
        result = verify_theorem(sweep("saminger-thm2", "tnorm", lattices=(l1,)))
        assert result.violation_total == 0
        assert any(ce.lattice == l1 and ce.pivot == l1.index("a") for ce in result.counterexamples)


class TestCounterexamples:

    def test_dropping_range_breaks_ey_sum(self):
        result = find_counterexample(sweep("ey-thm3", "commutative-associative-monotone", max_size=4))
        assert not result.exhausted
        assert result.counterexample_total == 1
        ce = result.counterexamples[0]
        assert ce.replay()
        summands = [op for op in (ce.t1, ce.t2) if op is not None]
        assert any(not check_axioms(op).range_leq_meet.holds for op in summands)

    def test_lifted_constant_pattern_on_chain(self, chain5):
        config = sweep("ey-thm3", "commutative-associative-monotone", lattices=(chain5,), t1_mode="tnorm",
                       max_counterexamples=100000)
        result = verify_theorem(config)
        assert result.counterexample_total > 0
        assert result.violation_total == 0
        h = chain5.index("h")
        constant_h = [
            ce for ce in result.counterexamples
            if ce.pivot == h and ce.t2 is not None and (ce.t2.values == h).all()
        ]
        assert constant_h

    @pytest.mark.parametrize("theorem, mode, max_size", [
        ("ey-thm3", "commutative-associative-monotone", 4),
        ("ey-thm3", "commutative-monotone", 4),
        ("saminger-thm2", "tnorm", 5),
    ])
    def test_found_counterexample_replays(self, theorem, mode, max_size):
        result = find_counterexample(sweep(theorem, mode, max_size=max_size))
        assert not result.exhausted
        assert len(result.counterexamples) == 1
        assert result.counterexamples[0].replay()

    def test_unreplayable_counterexample_is_rejected(self, monkeypatch):
        monkeypatch.setattr(Counterexample, "replay", lambda self: False)
        with pytest.raises(RuntimeError):
            find_counterexample(sweep("ey-thm3", "commutative-associative-monotone", max_size=4))

    def test_no_counterexample_within_budget(self):
        result = find_counterexample(sweep("tnorm-thm5", "tsubnorm", max_size=4))
        assert result.exhausted
        assert result.counterexamples == []

    def test_replay_soundness(self):
        result = verify_theorem(sweep("ey-thm3", "commutative-monotone", max_size=4, max_counterexamples=20))
        assert result.counterexamples
        assert all(ce.replay() for ce in result.counterexamples)

    def test_parallel_matches_serial(self):
        serial = verify_theorem(sweep("ey-thm3", "tsubnorm", max_size=5, workers=1))
        parallel = verify_theorem(sweep("ey-thm3", "tsubnorm", max_size=5, workers=2))
        assert serial.summary() == parallel.summary()
        assert serial.counterexamples == parallel.counterexamples

    def test_progress_callback(self):
        messages = []
        TheoremMiner(sweep("ey-thm3", "tnorm", max_size=4), progress=messages.append).verify()
        assert any("partitions" in message for message in messages)


class TestBoundaryIrrelevance:

    def test_mutations_never_change_verdicts(self):
        for n in range(3, 5):
            for lattice in enumerate_lattices(n):
                for a in lattice.interior():
                    upper = lattice.interval(a, lattice.top)
                    lower = lattice.interval(lattice.bottom, a)
                    for t1 in enumerate_ops(upper, HypothesisMode.TSUBNORM):
                        for t2 in enumerate_ops(lower, HypothesisMode.TSUBNORM):
                            self._check_instance(lattice, a, t1, t2)

    @staticmethod
    def _verdicts(sum_input):
        table = ey_sum(sum_input)
        report = check_axioms(table)
        return (
            check_condition_b(sum_input),
            check_condition_c(sum_input),
            check_summands_increasing(sum_input),
            report.increasing.holds,
            report.is_tnorm,
            table,
        )

    def _check_instance(self, lattice, a, t1, t2):
        sum_input = OrdinalSumInput(lattice, a, t1, t2)
        baseline = self._verdicts(sum_input)
        t1_cells, t2_cells = irrelevant_boundary(sum_input)
        for v1 in t1.domain.members:
            for v2 in t2.domain.members:
                mutated = OrdinalSumInput(
                    lattice, a,
                    t1.with_entries({cell: v1 for cell in t1_cells}),
                    t2.with_entries({cell: v2 for cell in t2_cells}),
                )
                assert self._verdicts(mutated) == baseline

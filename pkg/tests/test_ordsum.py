"""
序和构造与条件判定测试
"""
import numpy as np
import pytest

from src.modules.miner import HypothesisMode, enumerate_lattices, enumerate_ops
from src.modules.optable import (
    check_axioms,
    check_increasing,
    check_neutral_top,
    check_range,
    compare_ops,
    make_constant_op,
    make_drastic_tnorm,
    make_meet_tnorm,
)
from src.modules.ordsum import (
    EY_BRANCH_ORDER,
    OrdinalSumInput,
    check_condition_b,
    check_condition_c,
    check_increasingness_condition,
    check_proposition1,
    check_saminger_conditions,
    check_summands_increasing,
    check_tnorm_condition,
    corollary1_sum,
    corollary2_sum,
    ey_sum,
    irrelevant_boundary,
    saminger_sum,
)
from src.modules.report_renderer import render_table
from src.utils.errors import HypothesisViolated, MalformedInput, PivotIsBound


def rows(op):
    names = op.lattice.names
    return [" ".join(names[v] for v in row) for row in op.values]


def meet_summands(lattice, a):
    return OrdinalSumInput.make(
        lattice, a,
        make_meet_tnorm(lattice.interval(a, lattice.top)),
        make_meet_tnorm(lattice.interval(lattice.bottom, a)),
    )


def lifted_constant_input(chain5):
    t1 = make_meet_tnorm(chain5.interval("h", "1"))
    t2 = make_constant_op(chain5.interval("0", "h"), "h")
    return OrdinalSumInput.make(chain5, "h", t1, t2)


class TestOrdinalSumInput:

    def test_boundary_pivot(self, l1):
        iv = l1.full_interval()
        with pytest.raises(MalformedInput):
            OrdinalSumInput.make(l1, "1", make_meet_tnorm(l1.interval("1", "1")), make_meet_tnorm(iv))

    def test_wrong_domain(self, l1):
        with pytest.raises(MalformedInput):
            OrdinalSumInput.make(
                l1, "a",
                make_meet_tnorm(l1.interval("0", "a")),
                make_meet_tnorm(l1.interval("0", "a")),
            )

    def test_branch_order_documented(self):
        assert EY_BRANCH_ORDER == ("t1", "t2", "meet", "t2-meet-a")


class TestEYSum:

    def test_l1_constant_summands(self, l1_constant_input, examples_dir):
        table = ey_sum(l1_constant_input)
        assert rows(table) == [
            "0 0 0 0 0",
            "0 0 b 0 b",
            "0 b a 0 a",
            "0 0 0 0 c",
            "0 b a c 1",
        ]
        expected = (examples_dir / "l1_constant_sum.expected").read_text(encoding="utf-8")
        assert render_table(table) == expected

    def test_l2_constant_summands(self, l2_constant_input, examples_dir):
        table = ey_sum(l2_constant_input)
        assert rows(table) == [
            "0 0 0 0",
            "0 a 0 a",
            "0 0 0 b",
            "0 a b 1",
        ]
        expected = (examples_dir / "l2_constant_sum.expected").read_text(encoding="utf-8")
        assert render_table(table) == expected
        assert check_axioms(table).is_tnorm

    def test_lifted_constant_on_chain(self, chain5):
        table = ey_sum(lifted_constant_input(chain5))
        verdict = check_increasing(table)
        assert not verdict.holds
        names = chain5.names
        assert tuple(names[v] for v in verdict.witness) == ("0", "h", "0")
        # 另一组失败三元组 q <= t, z = q
        assert table("q", "q") == chain5.index("h")
        assert table("t", "q") == chain5.index("q")
        assert not chain5.le(table("q", "q"), table("t", "q"))
        assert not check_proposition1(lifted_constant_input(chain5)).holds

    def test_top_is_neutral(self, l1_constant_input, l2_constant_input, chain5):
        for sum_input in (l1_constant_input, l2_constant_input, lifted_constant_input(chain5)):
            table = ey_sum(sum_input)
            lattice = sum_input.lattice
            for x in lattice.elements:
                assert table(lattice.top, x) == x and table(x, lattice.top) == x

    def test_bottom_is_zero_only_under_range_bound(self, l1_constant_input, l2_constant_input, chain5):
        for sum_input in (l1_constant_input, l2_constant_input):
            table = ey_sum(sum_input)
            lattice = sum_input.lattice
            assert all(table(lattice.bottom, x) == lattice.bottom for x in lattice.elements)
        # 常数 h 的 t2 超出 meet，0 不再是零元
        assert ey_sum(lifted_constant_input(chain5))("0", "0") == chain5.index("h")

    def test_meet_summands_give_meet_on_chain(self, chain5):
        table = ey_sum(meet_summands(chain5, "h"))
        assert table == make_meet_tnorm(chain5.full_interval())


class TestConditions:

    def test_condition_c_fails_on_l1(self, l1_constant_input):
        verdict = check_tnorm_condition(l1_constant_input)
        lattice = l1_constant_input.lattice
        assert not verdict.holds
        assert [lattice.names[w[0]] for w in verdict.witnesses] == ["c"]
        assert not check_axioms(ey_sum(l1_constant_input)).is_tnorm

    def test_condition_c_holds_on_diamond(self, l2_constant_input):
        assert check_tnorm_condition(l2_constant_input).holds
        assert check_axioms(ey_sum(l2_constant_input)).is_tnorm

    def test_increasingness_condition(self, l1_constant_input, l2_constant_input, chain5):
        verdict = check_increasingness_condition(l1_constant_input)
        assert verdict.condition == "III-2"
        assert [l1_constant_input.lattice.names[w[0]] for w in verdict.witnesses] == ["c"]
        assert check_increasingness_condition(l2_constant_input).holds
        assert check_increasingness_condition(meet_summands(chain5, "q")).holds

    def test_both_forms_agree(self, l1_constant_input, l2_constant_input):
        for sum_input in (l1_constant_input, l2_constant_input):
            assert check_condition_b(sum_input).witnesses == check_condition_c(sum_input).witnesses

    def test_meet_summands_on_diamond(self, l2):
        sum_input = meet_summands(l2, "a")
        assert check_tnorm_condition(sum_input).holds
        assert check_axioms(ey_sum(sum_input)).is_tnorm

    def test_hypotheses_enforced(self, chain5):
        with pytest.raises(HypothesisViolated) as info:
            check_tnorm_condition(lifted_constant_input(chain5))
        assert info.value.summand == "t2"
        assert info.value.axiom == "range_leq_meet"
        with pytest.raises(HypothesisViolated):
            check_increasingness_condition(lifted_constant_input(chain5))

    def test_summands_increasing(self, l1_constant_input):
        assert check_summands_increasing(l1_constant_input).holds
        lattice = l1_constant_input.lattice
        lower = lattice.interval("0", "a")
        bumpy = make_constant_op(lower, "0").with_entries({("0", "0"): "b"})
        sum_input = OrdinalSumInput.make(lattice, "a", l1_constant_input.t1, bumpy)
        assert not check_summands_increasing(sum_input).holds


class TestSaminger:

    def test_chain_meets(self, chain3):
        table = saminger_sum(meet_summands(chain3, "a"))
        assert table == make_meet_tnorm(chain3.full_interval())

    def test_otherwise_branch(self, l1):
        table = saminger_sum(meet_summands(l1, "a"))
        assert table("c", "a") == l1.index("b")

    def test_conditions(self, l1, l2, chain5):
        verdict = check_saminger_conditions(l1, "a")
        assert not verdict.holds
        assert tuple(l1.names[v] for v in verdict.witnesses[0]) == ("c", "b")
        assert check_saminger_conditions(l2, "a").holds
        assert check_saminger_conditions(chain5, "h").holds
        with pytest.raises(PivotIsBound):
            check_saminger_conditions(l1, "0")

    def test_l1_breaks_associativity(self, l1):
        sum_input = OrdinalSumInput.make(
            l1, "a",
            make_meet_tnorm(l1.interval("a", "1")),
            make_drastic_tnorm(l1.interval("0", "a")),
        )
        table = saminger_sum(sum_input)
        assert not check_axioms(table).is_tnorm
        assert table("b", table("c", "a")) == l1.index("0")
        assert table(table("b", "c"), "a") == l1.index("b")


class TestCorollaries:

    def test_chain(self, chain3):
        t1 = make_meet_tnorm(chain3.interval("a", "1"))
        assert corollary1_sum(chain3, "a", t1) == make_meet_tnorm(chain3.full_interval())

    def test_diamond(self, l2):
        t1 = make_meet_tnorm(l2.interval("a", "1"))
        assert corollary1_sum(l2, "a", t1)("b", "b") == l2.index("0")

    def test_l1(self, l1):
        t1 = make_meet_tnorm(l1.interval("a", "1"))
        first = corollary1_sum(l1, "a", t1)
        second = corollary2_sum(l1, "a", t1)
        assert check_axioms(first).is_tnorm and check_axioms(second).is_tnorm
        assert second("b", "b") == l1.index("0")
        assert second("c", "a") == l1.index("b")
        assert compare_ops(second, first).relation in ("less", "equal")

    def test_chain_drastic_below_pivot(self):
        from tests.conftest import chain
        four = chain(["0", "m", "a", "1"])
        t1 = make_meet_tnorm(four.interval("a", "1"))
        assert corollary2_sum(four, "a", t1)("m", "m") == four.index("0")

    def test_requires_tnorm(self, l1):
        with pytest.raises(HypothesisViolated):
            corollary1_sum(l1, "a", make_constant_op(l1.interval("a", "1"), "a"))
        with pytest.raises(PivotIsBound):
            corollary2_sum(l1, "1", make_meet_tnorm(l1.interval("1", "1")))


class TestBoundary:

    def test_irrelevant_cells_on_l1(self, l1_constant_input):
        names = l1_constant_input.lattice.names
        t1_cells, t2_cells = irrelevant_boundary(l1_constant_input)
        assert {(names[x], names[y]) for x, y in t1_cells} == {("a", "1"), ("1", "a"), ("1", "1")}
        assert {(names[x], names[y]) for x, y in t2_cells} == {("0", "a"), ("a", "0"), ("a", "a")}

    def test_mutating_irrelevant_cells(self, l1_constant_input):
        t1_cells, t2_cells = irrelevant_boundary(l1_constant_input)
        lattice = l1_constant_input.lattice
        t1 = l1_constant_input.t1.with_entries({cell: "1" for cell in t1_cells})
        t2 = l1_constant_input.t2.with_entries({cell: "b" for cell in t2_cells})
        mutated = OrdinalSumInput(lattice, l1_constant_input.pivot, t1, t2)
        assert np.array_equal(ey_sum(mutated).values, ey_sum(l1_constant_input).values)


def sum_inputs(mode, max_size):
    """枚举 ≤ max_size 元格上所有内部分割点与给定模式下的被加项对"""
    for n in range(3, max_size + 1):
        for lattice in enumerate_lattices(n):
            for a in lattice.interior():
                lower_ops = list(enumerate_ops(lattice.interval(lattice.bottom, a), mode))
                for t1 in enumerate_ops(lattice.interval(a, lattice.top), mode):
                    for t2 in lower_ops:
                        yield OrdinalSumInput(lattice, a, t1, t2)


class TestSweptProperties:

    def test_top_is_neutral_for_any_summands(self):
        for sum_input in sum_inputs(HypothesisMode.COMMUTATIVE_MONOTONE, 4):
            assert check_neutral_top(ey_sum(sum_input)).holds

    def test_bottom_is_zero_under_range_bound(self):
        for sum_input in sum_inputs(HypothesisMode.COMMUTATIVE_RANGE, 5):
            table = ey_sum(sum_input)
            bottom = sum_input.lattice.bottom
            assert all(table(bottom, x) == bottom == table(x, bottom) for x in sum_input.lattice.elements)

    def test_increasing_conditions_bound_sum_by_meet(self):
        checked = 0
        for sum_input in sum_inputs(HypothesisMode.COMMUTATIVE_RANGE, 5):
            if check_summands_increasing(sum_input).holds and check_condition_c(sum_input).holds:
                checked += 1
                assert check_range(ey_sum(sum_input)).holds
        assert checked > 0

    def test_increasing_sum_satisfies_proposition1(self):
        checked = 0
        for sum_input in sum_inputs(HypothesisMode.COMMUTATIVE_MONOTONE, 5):
            if check_axioms(ey_sum(sum_input)).increasing.holds:
                checked += 1
                assert check_proposition1(sum_input).holds
        assert checked > 0

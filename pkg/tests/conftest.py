"""
测试公共夹具：示例格与被加项
"""
import sys
from pathlib import Path

import pytest

# 添加项目根目录到路径
ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT))

from src.config import EXAMPLES_DIR
from src.modules.lattice_core import build_lattice
from src.modules.optable import make_constant_op
from src.modules.ordsum import OrdinalSumInput


def chain(names, name="C"):
    names = tuple(names)
    covers = list(zip(names, names[1:]))
    return build_lattice(names, covers, names[0], names[-1], name=name)


@pytest.fixture
def examples_dir():
    return EXAMPLES_DIR


@pytest.fixture
def l1():
    """0 < b < a < 1, b < c < 1"""
    return build_lattice(
        ["0", "b", "a", "c", "1"],
        [("0", "b"), ("b", "a"), ("b", "c"), ("a", "1"), ("c", "1")],
        "0", "1", name="L1",
    )


@pytest.fixture
def l2():
    """菱形"""
    return build_lattice(
        ["0", "a", "b", "1"],
        [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        "0", "1", name="L2",
    )


@pytest.fixture
def chain3():
    return chain(["0", "a", "1"], name="C3")


@pytest.fixture
def chain5():
    return chain(["0", "q", "h", "t", "1"], name="C5")


@pytest.fixture
def l1_constant_input(l1):
    t1 = make_constant_op(l1.interval("a", "1"), "a")
    t2 = make_constant_op(l1.interval("0", "a"), "0")
    return OrdinalSumInput.make(l1, "a", t1, t2)


@pytest.fixture
def l2_constant_input(l2):
    t1 = make_constant_op(l2.interval("a", "1"), "a")
    t2 = make_constant_op(l2.interval("0", "a"), "0")
    return OrdinalSumInput.make(l2, "a", t1, t2)

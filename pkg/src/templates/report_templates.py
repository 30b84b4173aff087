"""
报告行模板

CLI 输出只使用这里的词汇，黄金文件测试依赖这些格式保持不变。
"""

# 公理判定行
AXIOM_HOLDS = "{axiom}: holds"
COMMUTATIVE_FAIL = "commutative: fail at x={x}, y={y}: {label}({x},{y})={xy} != {label}({y},{x})={yx}"
ASSOCIATIVE_FAIL = (
    "associative: fail at x={x}, y={y}, z={z}: "
    "{label}({label}({x},{y}),{z})={left} != {label}({x},{label}({y},{z}))={right}"
)
# 单调性失败用格序表述（!<= 表示“不小于等于”）
INCREASING_FAIL = "increasing: fail at x={x}<=y={y}, z={z}: {left_call}={left} !<= {right_call}={right}"
NEUTRAL_FAIL = "neutral_top: fail at x={x}: {label}({hi},{x})={hx}, {label}({x},{hi})={xh}"
RANGE_FAIL = "range_leq_meet: fail at x={x}, y={y}: {label}({x},{y})={xy} !<= meet({x},{y})={meet}"

# 汇总行
CLASSIFICATION = "t-norm: {tnorm}\nt-subnorm: {tsubnorm}"

# 条件判定行
CONDITION_HOLDS = "{condition}: holds"
CONDITION_FAILS = "{condition}: fails at {witnesses}"

# 逐点比较
ORDER_EQUAL = "{p} = {q}"
ORDER_LESS = "{p} <= {q} (strict at {witness})"
ORDER_GREATER = "{p} >= {q} (strict at {witness})"
ORDER_INCOMPARABLE = "{p} and {q} are incomparable ({p} !<= {q} at {first}, {q} !<= {p} at {second})"

# 枚举器
COUNTEREXAMPLE_LINE = (
    "counterexample: theorem={theorem} lattice={lattice} pivot={pivot} "
    "t1={t1} t2={t2} method={method} failed={failed} witness={witness}"
)
VIOLATION_LINE = "violation: lattice={lattice} pivot={pivot} failed={failed} witness={witness}"
NO_COUNTEREXAMPLE = "no counterexample within budget"

"""
配置模块

路径常量与各子系统的默认设置
"""
from pathlib import Path

# 项目根目录
ROOT_DIR = Path(__file__).parent.parent

# 数据目录（示例格与运算表）
DATA_DIR = ROOT_DIR / "data"
EXAMPLES_DIR = DATA_DIR / "examples"

# 配置目录
CONFIG_DIR = ROOT_DIR / "config"
DEFAULT_CONFIG_FILE = CONFIG_DIR / "workbench.yaml"

# 可选的配置文件环境变量（通过 .env 或 shell 设置）
CONFIG_ENV_VAR = "ORDSUM_WORKBENCH_CONFIG"

# 格的配置：布尔行放得进一个机器字
LATTICE_CONFIG = {
    "max_carrier_size": 64,
}

# 枚举器配置
MINER_CONFIG = {
    "max_lattice_size": 6,
    "min_lattice_size": 3,
    "max_interval_size": 5,
    "mode": "tsubnorm",
    "theorem": "tnorm-thm5",
    "workers": 1,
    "max_counterexamples": 50,
}

# 报告配置
REPORT_CONFIG = {
    "table_label": "T",
    "verbose": False,
}

# 枚举硬上限：超过 7 个元素不做格枚举，超过 5 个元素的区间不做运算枚举
HARD_MAX_LATTICE_SIZE = 7
HARD_MAX_INTERVAL_SIZE = 5

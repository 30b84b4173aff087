"""
工作台命令行入口

用法：
    python scripts/workbench.py construct --method ey --lattice data/examples/L1.lat --pivot a \
        --t1 data/examples/const_a.op --t2 data/examples/const_0_L1.op --render
"""
import sys
from pathlib import Path

# 添加项目根目录到路径
BASE_DIR = Path(__file__).parent.parent
sys.path.insert(0, str(BASE_DIR))

from src.cli import main


if __name__ == "__main__":
    main()

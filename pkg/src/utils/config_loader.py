"""
配置文件加载模块

支持从YAML文件加载工作台配置，缺省项取 src/config.py 中的默认值
"""
import os
import yaml
from pathlib import Path
from typing import Dict, Optional

from dotenv import load_dotenv

from ..config import CONFIG_ENV_VAR, DEFAULT_CONFIG_FILE, LATTICE_CONFIG, MINER_CONFIG, REPORT_CONFIG
from .errors import MalformedInput


class WorkbenchConfig:
    """工作台配置类"""

    def __init__(self, config_dict: Optional[Dict] = None):
        """
        初始化配置

        Args:
            config_dict: 配置字典（可以为空）
        """
        config_dict = config_dict or {}
        if not isinstance(config_dict, dict):
            raise MalformedInput("configuration root must be a mapping")
        self.raw_config = config_dict

        # 格
        lattice = config_dict.get('lattice', {}) or {}
        self.max_carrier_size = int(lattice.get('max_carrier_size', LATTICE_CONFIG['max_carrier_size']))

        # 枚举器
        miner = config_dict.get('miner', {}) or {}
        self.max_lattice_size = int(miner.get('max_lattice_size', MINER_CONFIG['max_lattice_size']))
        self.min_lattice_size = int(miner.get('min_lattice_size', MINER_CONFIG['min_lattice_size']))
        self.max_interval_size = int(miner.get('max_interval_size', MINER_CONFIG['max_interval_size']))
        self.mode = miner.get('mode', MINER_CONFIG['mode'])
        self.theorem = miner.get('theorem', MINER_CONFIG['theorem'])
        self.workers = int(miner.get('workers', MINER_CONFIG['workers']))
        self.max_counterexamples = int(miner.get('max_counterexamples', MINER_CONFIG['max_counterexamples']))

        # 报告
        report = config_dict.get('report', {}) or {}
        self.table_label = report.get('table_label', REPORT_CONFIG['table_label'])
        self.verbose = bool(report.get('verbose', REPORT_CONFIG['verbose']))

    def miner_config(self, **overrides):
        """
        生成枚举器配置

        Args:
            **overrides: 命令行覆盖项，值为 None 的忽略

        Returns:
            MinerConfig对象
        """
        from ..modules.miner import MinerConfig

        values = {
            "max_lattice_size": self.max_lattice_size,
            "min_lattice_size": self.min_lattice_size,
            "max_interval_size": self.max_interval_size,
            "mode": self.mode,
            "theorem": self.theorem,
            "workers": self.workers,
            "max_counterexamples": self.max_counterexamples,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        # 只给了上限时，下限不能超过它
        values["min_lattice_size"] = min(values["min_lattice_size"], values["max_lattice_size"])
        try:
            return MinerConfig(**values)
        except ValueError as exc:
            raise MalformedInput(str(exc)) from exc

    def __repr__(self):
        return (f"WorkbenchConfig(max_lattice_size={self.max_lattice_size}, "
                f"mode='{self.mode}', theorem='{self.theorem}')")


def load_config(config_file: Path) -> WorkbenchConfig:
    """
    从YAML文件加载配置

    Args:
        config_file: 配置文件路径

    Returns:
        WorkbenchConfig对象
    """
    config_file = Path(config_file)
    if not config_file.exists():
        raise FileNotFoundError(f"配置文件不存在: {config_file}")

    with open(config_file, 'r', encoding='utf-8') as f:
        try:
            config_dict = yaml.safe_load(f)
        except yaml.YAMLError as exc:
            raise MalformedInput(f"{config_file}: {exc}") from exc

    return WorkbenchConfig(config_dict)


def resolve_config(config_file: Optional[Path] = None) -> WorkbenchConfig:
    """
    查找并加载配置

    顺序：显式路径 > 环境变量（可写在 .env 中）> config/workbench.yaml > 内置默认值
    """
    load_dotenv()
    if config_file is not None:
        return load_config(Path(config_file))
    from_env = os.getenv(CONFIG_ENV_VAR)
    if from_env:
        return load_config(Path(from_env))
    if DEFAULT_CONFIG_FILE.exists():
        return load_config(DEFAULT_CONFIG_FILE)
    return WorkbenchConfig()


def create_default_config(output_file: Path):
    """
    创建默认配置文件

    Args:
        output_file: 输出文件路径
    """
    default_config = {
        "lattice": dict(LATTICE_CONFIG),
        "miner": dict(MINER_CONFIG),
        "report": dict(REPORT_CONFIG),
    }

    with open(output_file, 'w', encoding='utf-8') as f:
        yaml.dump(default_config, f, allow_unicode=True, default_flow_style=False, sort_keys=False)

    print(f"✓ 已创建配置文件: {output_file}")

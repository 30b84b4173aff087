"""
OrdSum Workbench - 有限有界格上 t-norm 序和的构造与验证工具

目录结构：
- src/: 核心代码
  - modules/: 格、运算表、序和构造、文本格式、穷举验证
  - templates/: 报告文本模板
  - utils/: 配置加载与异常定义
  - cli.py: 命令行入口
- data/examples/: 文中的格、运算表与黄金表格
- config/: 配置文件
- scripts/: 可执行脚本
- tests/: 测试代码
"""

"""
模块包初始化

lattice_core -> optable -> ordsum -> miner，text_format 与 report_renderer 负责输入输出
"""

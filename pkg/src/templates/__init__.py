"""
报告模板包初始化
"""

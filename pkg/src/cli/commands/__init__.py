"""
CLI command modules: integrate, bound, verify and the experiment commands
"""

"""
Integration Tests

CLI commands through click's test runner and the verification service on reduced workloads.
"""

"""
Test Fixtures

Reference values from an independent high-precision evaluator (mpmath) and
small expression samples shared across the suites.
"""

"""
Unit Tests

Fast, isolated tests for individual functions and methods.
High-precision references come from tests/fixtures, never from the code under test.
"""

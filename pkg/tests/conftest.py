"""
Shared pytest configuration and fixtures
"""
import os
import sys

import pytest

# Repository root on the path so tests import the ``src`` package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from tests.fixtures.reference_values import coth_of_one, coth_reference  # noqa: E402,F401


@pytest.fixture(autouse=True)
def isolate_simpref_environment(monkeypatch):
    """Every test starts without SIMPREF_* overrides"""
    for name in list(os.environ):
        if name.startswith('SIMPREF_'):
            monkeypatch.delenv(name, raising=False)
    yield


@pytest.fixture
def cli_runner():
    """Click test runner with stderr kept apart from the JSON on stdout"""
    from click.testing import CliRunner
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 always separates the streams
        return CliRunner()


@pytest.fixture
def unit_interval():
    from src.analysis import Interval
    return Interval(0.0, 1.0)


@pytest.fixture
def exp_expr():
    from src.expr import parse
    return parse('exp(t)')


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers"""
    config.addinivalue_line(
        "markers", "unit: mark test as a unit test"
    )
    config.addinivalue_line(
        "markers", "integration: mark test as an integration test"
    )
    config.addinivalue_line(
        "markers", "e2e: mark test as an end-to-end test"
    )
    config.addinivalue_line(
        "markers", "slow: mark test as slow running"
    )


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers based on directory"""
    for item in items:
        path = str(item.fspath)
        if f"{os.sep}unit{os.sep}" in path:
            item.add_marker(pytest.mark.unit)
        elif f"{os.sep}integration{os.sep}" in path:
            item.add_marker(pytest.mark.integration)
        elif f"{os.sep}e2e{os.sep}" in path:
            item.add_marker(pytest.mark.e2e)
            item.add_marker(pytest.mark.slow)

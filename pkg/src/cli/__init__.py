"""
CLI interface for SIMPREF
"""

from .main import cli

__all__ = ['cli']

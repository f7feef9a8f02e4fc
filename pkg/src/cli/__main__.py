#!/usr/bin/env python3
"""
CLI entry point for SIMPREF: python -m src.cli <command>
"""

from .main import cli

if __name__ == '__main__':
    cli()

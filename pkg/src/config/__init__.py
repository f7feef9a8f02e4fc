"""
Configuration package for SIMPREF
"""

from .config import (
    Config, config, load_config,
    SMOOTHNESS_CLASSES, RULES, OUTPUT_FORMATS, LOG_LEVELS,
)

__all__ = [
    'Config', 'config', 'load_config',
    'SMOOTHNESS_CLASSES', 'RULES', 'OUTPUT_FORMATS', 'LOG_LEVELS',
]

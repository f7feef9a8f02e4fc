#!/usr/bin/env python3
"""
Configuration management for SIMPREF
Every setting has a SIMPREF_* environment override; a .env file may feed them
"""

import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

SMOOTHNESS_CLASSES = ['c1', 'c2', 'c3', 'c4', 'c4-convex2']
RULES = ['classical', 'corrected']
OUTPUT_FORMATS = ['json', 'csv', 'text']
LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']

DEFAULT_ENV_FILE = 'src/config/.env'


def _env(name: str, current, default, cast=str):
    raw = os.getenv(name)
    if raw is not None and raw.strip() != '':
        return cast(raw.strip())
    return current if current is not None else default


def _int(raw: str) -> int:
    # tolerate "65536.0"
    return int(float(raw))


@dataclass
class Config:
    """Run configuration with environment variable fallbacks"""

    # Parallelism
    threads: int = None

    # Integration defaults
    tolerance: float = None
    smoothness: str = None
    rule: str = None
    max_panels: int = None

    # Range estimation
    range_samples: int = None
    convexity_samples: int = None
    inflation: float = None

    # Reference oracle
    oracle_tol: float = None
    oracle_max_panels: int = None
    representation_tol: float = None

    # Experiments
    seed: int = None
    search_trials: int = None
    verify_intervals: int = None

    # Output
    output_format: str = None
    log_level: str = None

    def __post_init__(self):
        self.threads = _env('SIMPREF_THREADS', self.threads, 1, _int)

        self.tolerance = _env('SIMPREF_TOL', self.tolerance, 1e-8, float)
        self.smoothness = _env('SIMPREF_CLASS', self.smoothness, 'c2').lower()
        self.rule = _env('SIMPREF_RULE', self.rule, 'classical').lower()
        self.max_panels = _env('SIMPREF_MAX_PANELS', self.max_panels, 2 ** 16, _int)

        self.range_samples = _env('SIMPREF_SAMPLES', self.range_samples, 1025, _int)
        self.convexity_samples = _env('SIMPREF_CONVEXITY_SAMPLES', self.convexity_samples, 257, _int)
        self.inflation = _env('SIMPREF_INFLATION', self.inflation, 1.05, float)

        self.oracle_tol = _env('SIMPREF_ORACLE_TOL', self.oracle_tol, 1e-12, float)
        self.oracle_max_panels = _env('SIMPREF_ORACLE_MAX_PANELS', self.oracle_max_panels, 2 ** 20, _int)
        self.representation_tol = _env('SIMPREF_REPRESENTATION_TOL', self.representation_tol, 1e-10, float)

        self.seed = _env('SIMPREF_SEED', self.seed, 0, _int)
        self.search_trials = _env('SIMPREF_SEARCH_TRIALS', self.search_trials, 200, _int)
        self.verify_intervals = _env('SIMPREF_VERIFY_INTERVALS', self.verify_intervals, 20, _int)

        self.output_format = _env('SIMPREF_FORMAT', self.output_format, 'json').lower()
        self.log_level = _env('SIMPREF_LOG_LEVEL', self.log_level, 'WARNING').upper()

    def validate_config(self) -> List[str]:
        """Validate configuration and return list of issues"""
        issues = []

        if self.threads < 1:
            issues.append(f"Thread count must be at least 1, got {self.threads}")
        if not self.tolerance > 0:
            issues.append(f"Tolerance must be positive, got {self.tolerance}")
        if self.smoothness not in SMOOTHNESS_CLASSES:
            issues.append(f"Unknown smoothness class: {self.smoothness}")
        if self.rule not in RULES:
            issues.append(f"Unknown rule: {self.rule}")
        if self.max_panels < 1:
            issues.append(f"Panel cap must be at least 1, got {self.max_panels}")

        if self.range_samples < 3:
            issues.append(f"Range estimation needs at least 3 samples, got {self.range_samples}")
        if self.convexity_samples < 3:
            issues.append(f"Convexity check needs at least 3 samples, got {self.convexity_samples}")
        if self.inflation < 1.0:
            issues.append(f"Inflation factor must be >= 1, got {self.inflation}")

        if self.oracle_tol < 1e-14:
            issues.append(f"Oracle tolerance must be >= 1e-14, got {self.oracle_tol}")
        if self.oracle_max_panels < 1:
            issues.append(f"Oracle panel cap must be at least 1, got {self.oracle_max_panels}")

        if self.search_trials < 1:
            issues.append(f"Search needs at least 1 trial, got {self.search_trials}")
        if self.verify_intervals < 1:
            issues.append(f"Verification needs at least 1 interval per function, got {self.verify_intervals}")

        if self.output_format not in OUTPUT_FORMATS:
            issues.append(f"Unknown output format: {self.output_format}")
        if self.log_level not in LOG_LEVELS:
            issues.append(f"Unknown log level: {self.log_level}")

        return issues

    def is_valid(self) -> bool:
        """Check if configuration is valid"""
        return len(self.validate_config()) == 0

    def load_from_env_file(self, env_file_path: Optional[str] = None) -> bool:
        """Load SIMPREF_* variables from a .env file and re-read them; returns whether a file was loaded"""
        env_path = Path(env_file_path or DEFAULT_ENV_FILE)
        if not env_path.exists():
            return False
        load_dotenv(env_path, override=False)
        self.__post_init__()
        return True

    def save_to_env_file(self, env_file_path: str = '.env'):
        """Save current configuration to .env file"""
        env_names = {
            'threads': 'SIMPREF_THREADS',
            'tolerance': 'SIMPREF_TOL',
            'smoothness': 'SIMPREF_CLASS',
            'rule': 'SIMPREF_RULE',
            'max_panels': 'SIMPREF_MAX_PANELS',
            'range_samples': 'SIMPREF_SAMPLES',
            'convexity_samples': 'SIMPREF_CONVEXITY_SAMPLES',
            'inflation': 'SIMPREF_INFLATION',
            'oracle_tol': 'SIMPREF_ORACLE_TOL',
            'oracle_max_panels': 'SIMPREF_ORACLE_MAX_PANELS',
            'representation_tol': 'SIMPREF_REPRESENTATION_TOL',
            'seed': 'SIMPREF_SEED',
            'search_trials': 'SIMPREF_SEARCH_TRIALS',
            'verify_intervals': 'SIMPREF_VERIFY_INTERVALS',
            'output_format': 'SIMPREF_FORMAT',
            'log_level': 'SIMPREF_LOG_LEVEL',
        }
        env_content = ["# SIMPREF configuration"]
        for field in fields(self):
            env_content.append(f"{env_names[field.name]}={getattr(self, field.name)}")

        with open(env_file_path, 'w') as f:
            f.write('\n'.join(env_content) + '\n')


def load_config(env_file_path: Optional[str] = None) -> Config:
    """Fresh configuration from the current environment (and .env file if present)"""
    cfg = Config()
    cfg.load_from_env_file(env_file_path)
    return cfg


# Global configuration instance
config = Config()

# Try to load from .env file if it exists
config.load_from_env_file()

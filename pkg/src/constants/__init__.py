"""
Constants for SIMPREF
"""

from .theorems import *
from .corpus import *

__all__ = [
    # Theorem tags
    'HH', 'HH_M2_LOWER', 'HH_M2_UPPER', 'EQ7', 'THM0', 'THM1', 'THM2',
    'EQ4', 'THM3', 'THM4', 'EQ8_9', 'THM5', 'THM6',

    # Constant tables
    'THEOREM_FRACTIONS', 'THEOREM_CONSTANTS', 'TIE_ORDER',
    'CORRECTION_FACTOR', 'A_INTERVAL', 'SEARCH_BRACKETS',

    # Corpus
    'CORPUS_DOMAIN', 'CORPUS_MIN_WIDTH', 'SMOOTH_CORPUS', 'MONOTONE_CORPUS',
]

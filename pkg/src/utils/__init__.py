"""
Utility modules for SIMPREF
"""

from .parallel import ordered_map, resolve_threads

__all__ = ['ordered_map', 'resolve_threads']

"""
SIMPREF: certified Simpson quadrature with refined error bounds
"""

__version__ = '1.0.0'

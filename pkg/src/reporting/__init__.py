"""
Reporting modules for SIMPREF
"""

from .formats import FORMATS, ReportFormatter

__all__ = ['FORMATS', 'ReportFormatter']

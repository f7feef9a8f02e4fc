"""
Service layer for SIMPREF
Runs the verification suites separately from the CLI
"""

from .verification_service import SUITES, PropertyResult, VerificationService

__all__ = ['SUITES', 'PropertyResult', 'VerificationService']

#!/usr/bin/env python3
"""
Exception hierarchy for SIMPREF.

Every error also derives from the builtin a caller would naturally catch
(ValueError, RuntimeError, AssertionError), so ``except ValueError`` keeps working.
"""

from typing import Optional


class SimprefError(Exception):
    """Base class for all SIMPREF errors"""


class ExprSyntaxError(SimprefError, ValueError):
    """Malformed expression text, with the byte offset of the offending token"""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


class UnknownIdentifierError(ExprSyntaxError):
    """Identifier that is neither `t`, a named constant nor a supported function"""


class ArityError(ExprSyntaxError):
    """Function applied to the wrong number of arguments"""


class EvaluationDomainError(SimprefError, ValueError):
    """Expression evaluated outside its natural domain"""

    def __init__(self, message: str, point: Optional[float] = None):
        if point is not None:
            message = f"{message} at t={point!r}"
        super().__init__(message)
        self.point = point


class NonSmoothError(EvaluationDomainError):
    """Derivatives requested from a function that has none (abs)"""


class OracleConvergenceError(SimprefError, RuntimeError):
    """Reference integrator hit its panel cap before reaching the tolerance"""


class ConvexityError(SimprefError, ValueError):
    """Sampled convexity or concavity check failed"""


class EmptyEnclosureError(SimprefError, ValueError):
    """Intersection of two brackets is empty (range estimate too loose)"""


class MajorizationError(SimprefError, ValueError):
    """Points do not satisfy u + v = a + b"""


class RangeOrderError(SimprefError, ValueError):
    """Derivative range of the wrong order, or order outside 1..4"""


class BoundViolationError(SimprefError, AssertionError):
    """An empirical ratio exceeded a proven theorem constant"""


__all__ = [
    'SimprefError',
    'ExprSyntaxError',
    'UnknownIdentifierError',
    'ArityError',
    'EvaluationDomainError',
    'NonSmoothError',
    'OracleConvergenceError',
    'ConvexityError',
    'EmptyEnclosureError',
    'MajorizationError',
    'RangeOrderError',
    'BoundViolationError',
]

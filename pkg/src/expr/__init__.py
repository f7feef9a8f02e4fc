"""
Expression language: parsing, printing and jet evaluation
"""

from .nodes import (
    FUNCTIONS, Add, Apply, BinOp, Const, Div, Expr, Mul, Neg, Pow, Sub, Var,
    polynomial, substitute,
)
from .parser import parse, to_source, tokenize
from .jets import MAX_ORDER, Jet4, eval_jet, make_function, value

__all__ = [
    'FUNCTIONS', 'Add', 'Apply', 'BinOp', 'Const', 'Div', 'Expr', 'Mul', 'Neg', 'Pow', 'Sub', 'Var',
    'polynomial', 'substitute',
    'parse', 'to_source', 'tokenize',
    'MAX_ORDER', 'Jet4', 'eval_jet', 'make_function', 'value',
]

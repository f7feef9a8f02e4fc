#!/usr/bin/env python3
"""
AST node types for single-variable integrand expressions.

Nodes are frozen dataclasses, so trees are immutable, hashable and compare
structurally (``parse(to_source(e)) == e``).
"""

import math
from dataclasses import dataclass
from typing import Optional, Union


FUNCTIONS = frozenset({
    'sin', 'cos', 'tan',
    'exp', 'log', 'sqrt',
    'sinh', 'cosh', 'tanh', 'coth',
    'abs',
})

NAMED_CONSTANTS = {
    'pi': math.pi,
    'e': math.e,
}

VARIABLE = 't'


@dataclass(frozen=True)
class Const:
    """Decimal literal or named constant (``name`` set for pi and e)"""
    value: float
    name: Optional[str] = None

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"Constant must be finite, got {self.value!r}")


@dataclass(frozen=True)
class Var:
    """The free variable `t`"""


@dataclass(frozen=True)
class Neg:
    operand: 'Expr'


@dataclass(frozen=True)
class BinOp:
    """Binary arithmetic node; ``op`` is one of + - * /"""
    op: str
    left: 'Expr'
    right: 'Expr'

    def __post_init__(self):
        if self.op not in ('+', '-', '*', '/'):
            raise ValueError(f"Unsupported binary operator: {self.op!r}")


@dataclass(frozen=True)
class Pow:
    """Power with a constant exponent"""
    base: 'Expr'
    exponent: float

    def __post_init__(self):
        if not math.isfinite(self.exponent):
            raise ValueError(f"Exponent must be finite, got {self.exponent!r}")


@dataclass(frozen=True)
class Apply:
    func: str
    arg: 'Expr'

    def __post_init__(self):
        if self.func not in FUNCTIONS:
            raise ValueError(f"Unsupported function: {self.func!r}")


Expr = Union[Const, Var, Neg, BinOp, Pow, Apply]


def Add(left: Expr, right: Expr) -> BinOp:
    return BinOp('+', left, right)


def Sub(left: Expr, right: Expr) -> BinOp:
    return BinOp('-', left, right)


def Mul(left: Expr, right: Expr) -> BinOp:
    return BinOp('*', left, right)


def Div(left: Expr, right: Expr) -> BinOp:
    return BinOp('/', left, right)


def substitute(e: Expr, replacement: Expr) -> Expr:
    """Replace every occurrence of the variable by ``replacement`` (composition e(replacement))"""
    if isinstance(e, Var):
        return replacement
    if isinstance(e, Const):
        return e
    if isinstance(e, Neg):
        return Neg(substitute(e.operand, replacement))
    if isinstance(e, BinOp):
        return BinOp(e.op, substitute(e.left, replacement), substitute(e.right, replacement))
    if isinstance(e, Pow):
        return Pow(substitute(e.base, replacement), e.exponent)
    if isinstance(e, Apply):
        return Apply(e.func, substitute(e.arg, replacement))
    raise TypeError(f"Not an expression node: {e!r}")


def polynomial(coefficients) -> Expr:
    """c0 + c1*t + c2*t^2 + ... as an expression tree"""
    coefficients = [float(c) for c in coefficients]
    if not coefficients:
        raise ValueError("Polynomial needs at least one coefficient")
    result: Expr = Const(coefficients[0])
    for power, c in enumerate(coefficients[1:], start=1):
        term = Var() if power == 1 else Pow(Var(), float(power))
        result = Add(result, Mul(Const(c), term))
    return result


__all__ = [
    'FUNCTIONS', 'NAMED_CONSTANTS', 'VARIABLE',
    'Const', 'Var', 'Neg', 'BinOp', 'Pow', 'Apply', 'Expr',
    'Add', 'Sub', 'Mul', 'Div', 'substitute', 'polynomial',
]

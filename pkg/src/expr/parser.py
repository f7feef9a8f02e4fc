#!/usr/bin/env python3
"""
Recursive-descent parser and canonical printer for integrand expressions.

Grammar (whitespace insignificant, `−` accepted as minus):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := unary ("^" ["-"] number)?
    unary  := "-" unary | atom
    atom   := number | "pi" | "e" | "t" | ident "(" expr ")" | "(" expr ")"

Note that `^` binds looser than unary minus: ``-t^2`` is ``(-t)^2``.
"""

import logging
import math
import re
from dataclasses import dataclass
from typing import List

from ..errors import ArityError, ExprSyntaxError, UnknownIdentifierError
from .nodes import (
    FUNCTIONS, NAMED_CONSTANTS, VARIABLE,
    Apply, BinOp, Const, Expr, Neg, Pow, Var,
)

logger = logging.getLogger(__name__)

_NUMBER = re.compile(r'(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?')
_IDENT = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
_SYMBOLS = '+-*/^(),'
_MINUS_SIGNS = {'−': '-'}


@dataclass(frozen=True)
class Token:
    kind: str  # 'number', 'ident', 'symbol', 'end'
    text: str
    offset: int  # byte offset into the source


def _byte_offset(source: str, index: int) -> int:
    return len(source[:index].encode('utf-8'))


def tokenize(source: str) -> List[Token]:
    """Split source text into tokens; offsets are UTF-8 byte offsets."""
    tokens = []
    i = 0
    while i < len(source):
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        ch = _MINUS_SIGNS.get(ch, ch)
        if ch in _SYMBOLS:
            tokens.append(Token('symbol', ch, _byte_offset(source, i)))
            i += 1
            continue
        match = _NUMBER.match(source, i)
        if match:
            tokens.append(Token('number', match.group(), _byte_offset(source, i)))
            i = match.end()
            continue
        match = _IDENT.match(source, i)
        if match:
            tokens.append(Token('ident', match.group(), _byte_offset(source, i)))
            i = match.end()
            continue
        raise ExprSyntaxError(f"Unexpected character {ch!r}", _byte_offset(source, i))
    tokens.append(Token('end', '', _byte_offset(source, len(source))))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _at(self, text: str) -> bool:
        return self.current.kind == 'symbol' and self.current.text == text

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            found = self.current.text or 'end of input'
            raise ExprSyntaxError(f"Expected {text!r}, found {found!r}", self.current.offset)
        return self._advance()

    def parse(self) -> Expr:
        node = self.expr()
        if self.current.kind != 'end':
            raise ExprSyntaxError(f"Unexpected token {self.current.text!r}", self.current.offset)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self._at('+') or self._at('-'):
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self._at('*') or self._at('/'):
            op = self._advance().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        base = self.unary()
        if not self._at('^'):
            return base
        self._advance()
        sign = 1.0
        if self._at('-'):
            self._advance()
            sign = -1.0
        if self.current.kind != 'number':
            raise ExprSyntaxError("Exponent must be a numeric literal", self.current.offset)
        return Pow(base, sign * self._number(self._advance()))

    def unary(self) -> Expr:
        if self._at('-'):
            self._advance()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        token = self.current
        if token.kind == 'number':
            self._advance()
            return Const(self._number(token))
        if token.kind == 'ident':
            self._advance()
            return self._identifier(token)
        if self._at('('):
            self._advance()
            node = self.expr()
            self._expect(')')
            return node
        found = token.text or 'end of input'
        raise ExprSyntaxError(f"Unexpected token {found!r}", token.offset)

    def _identifier(self, token: Token) -> Expr:
        name = token.text
        if name == VARIABLE:
            return Var()
        if name in NAMED_CONSTANTS:
            return Const(NAMED_CONSTANTS[name], name)
        if name not in FUNCTIONS:
            raise UnknownIdentifierError(f"Unknown identifier {name!r}", token.offset)

        if not self._at('('):
            raise ArityError(f"{name} expects 1 argument", token.offset)
        self._advance()
        if self._at(')'):
            raise ArityError(f"{name} expects 1 argument, got 0", self.current.offset)
        arg = self.expr()
        if self._at(','):
            raise ArityError(f"{name} expects 1 argument, got more", self.current.offset)
        self._expect(')')
        return Apply(name, arg)

    @staticmethod
    def _number(token: Token) -> float:
        value = float(token.text)
        if not math.isfinite(value):
            raise ExprSyntaxError(f"Numeric literal out of range: {token.text}", token.offset)
        return value


def parse(source: str) -> Expr:
    """
    Parse expression text into an AST.

    Args:
        source: Infix expression in the single free variable `t`

    Returns:
        Immutable expression tree

    Raises:
        ExprSyntaxError: malformed input (with byte offset)
        UnknownIdentifierError: identifier other than t, pi, e or a supported function
        ArityError: function applied to zero or several arguments
    """
    node = _Parser(source).parse()
    logger.debug(f"Parsed {source!r}")
    return node


# Printer precedence levels
_PREC_SUM = 1
_PREC_PRODUCT = 2
_PREC_POWER = 3
_PREC_UNARY = 4
_PREC_ATOM = 5


def _precedence(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _PREC_SUM if node.op in '+-' else _PREC_PRODUCT
    if isinstance(node, Pow):
        return _PREC_POWER
    if isinstance(node, Neg):
        return _PREC_UNARY
    return _PREC_ATOM


def _wrap(node: Expr, minimum: int) -> str:
    text = to_source(node)
    return f"({text})" if _precedence(node) < minimum else text


def to_source(node: Expr) -> str:
    """Canonical text for an expression; ``parse(to_source(e)) == e``."""
    if isinstance(node, Const):
        return node.name if node.name else repr(float(node.value))
    if isinstance(node, Var):
        return VARIABLE
    if isinstance(node, Apply):
        return f"{node.func}({to_source(node.arg)})"
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand, _PREC_UNARY)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base, _PREC_UNARY)}^{float(node.exponent)!r}"
    if isinstance(node, BinOp):
        level = _precedence(node)
        # left-associative: right operand at the same level needs parentheses
        return f"{_wrap(node.left, level)} {node.op} {_wrap(node.right, level + 1)}"
    raise TypeError(f"Not an expression node: {node!r}")

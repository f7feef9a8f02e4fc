#!/usr/bin/env python3
"""
Order-4 jet evaluation (value plus derivatives 1..4) of expression trees.

Jets are carried in derivative form. Products use the Leibniz rule and every
unary function goes through one truncated Faa di Bruno table, so adding a
function only means listing its own derivatives at the inner value.
Evaluation is vectorized: ``t`` may be a scalar or a numpy array of points.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Union

import numpy as np

from ..errors import EvaluationDomainError, NonSmoothError
from .nodes import Apply, BinOp, Const, Expr, Neg, Pow, Var

logger = logging.getLogger(__name__)

MAX_ORDER = 4

Number = Union[float, np.ndarray]

_BINOMIAL = (
    (1,),
    (1, 1),
    (1, 2, 1),
    (1, 3, 3, 1),
    (1, 4, 6, 4, 1),
)


@dataclass(frozen=True)
class Jet4:
    """Value and derivatives 1..4 at a point; entries above the requested order are None"""
    c0: Number
    c1: Optional[Number] = None
    c2: Optional[Number] = None
    c3: Optional[Number] = None
    c4: Optional[Number] = None

    @property
    def order(self) -> int:
        return sum(1 for c in (self.c1, self.c2, self.c3, self.c4) if c is not None)

    def derivative(self, k: int) -> Number:
        """k-th derivative; raises if it was not computed"""
        if not 0 <= k <= MAX_ORDER:
            raise ValueError(f"Derivative order must be in 0..{MAX_ORDER}, got {k}")
        value = (self.c0, self.c1, self.c2, self.c3, self.c4)[k]
        if value is None:
            raise ValueError(f"Derivative of order {k} was not evaluated (jet order {self.order})")
        return value

    def as_tuple(self) -> tuple:
        entries = (self.c0, self.c1, self.c2, self.c3, self.c4)
        return tuple(c for c in entries if c is not None)


class _Context:
    """Evaluation points and requested order, shared while walking one tree"""

    def __init__(self, t: np.ndarray, order: int):
        self.t = t
        self.order = order

    def fail(self, mask: np.ndarray, message: str, error=EvaluationDomainError):
        if np.any(mask):
            flat = np.broadcast_to(self.t, np.shape(mask)).ravel()
            index = int(np.argmax(np.ravel(mask)))
            raise error(message, point=float(flat[index]))


def _scale(u: List[np.ndarray], factor: float) -> List[np.ndarray]:
    return [factor * x for x in u]


def _mul(u: List[np.ndarray], v: List[np.ndarray]) -> List[np.ndarray]:
    out = []
    for k in range(len(u)):
        coeffs = _BINOMIAL[k]
        acc = u[0] * v[k]
        for j in range(1, k + 1):
            acc = acc + coeffs[j] * u[j] * v[k - j]
        out.append(acc)
    return out


def _compose(u: List[np.ndarray], f: Sequence[np.ndarray]) -> List[np.ndarray]:
    """Derivatives of f(u(t)) given f, f', ... evaluated at u(t)."""
    order = len(u) - 1
    out = [f[0]]
    if order >= 1:
        out.append(f[1] * u[1])
    if order >= 2:
        out.append(f[2] * u[1] ** 2 + f[1] * u[2])
    if order >= 3:
        out.append(f[3] * u[1] ** 3 + 3.0 * f[2] * u[1] * u[2] + f[1] * u[3])
    if order >= 4:
        out.append(
            f[4] * u[1] ** 4
            + 6.0 * f[3] * u[1] ** 2 * u[2]
            + f[2] * (3.0 * u[2] ** 2 + 4.0 * u[1] * u[3])
            + f[1] * u[4]
        )
    return out


def _reciprocal(v: List[np.ndarray], ctx: _Context) -> List[np.ndarray]:
    x = v[0]
    ctx.fail(x == 0.0, "division by zero")
    r = 1.0 / x
    f = [r, -r * r, 2.0 * r ** 3, -6.0 * r ** 4, 24.0 * r ** 5]
    return _compose(v, f[:len(v)])


def _power(u: List[np.ndarray], r: float, ctx: _Context) -> List[np.ndarray]:
    x = u[0]
    order = len(u) - 1
    integral = float(r).is_integer()
    if integral and r < 0:
        ctx.fail(x == 0.0, "division by zero in negative power")
    elif not integral:
        if order == 0:
            ctx.fail(x < 0.0, f"fractional power {r!r} of a negative number")
        else:
            ctx.fail(x <= 0.0, f"fractional power {r!r} is not differentiable at or below zero")

    f = []
    falling = 1.0
    for k in range(order + 1):
        if falling == 0.0:
            f.append(np.zeros_like(x))
        else:
            f.append(falling * np.power(x, r - k))
        falling *= (r - k)
    return _compose(u, f)


def _apply(name: str, u: List[np.ndarray], ctx: _Context) -> List[np.ndarray]:
    x = u[0]
    n = len(u)
    if name == 'exp':
        ex = np.exp(x)
        return _compose(u, [ex] * n)
    if name == 'log':
        ctx.fail(x <= 0.0, "log of non-positive argument")
        r = 1.0 / x
        return _compose(u, [np.log(x), r, -r * r, 2.0 * r ** 3, -6.0 * r ** 4][:n])
    if name == 'sqrt':
        return _power(u, 0.5, ctx)
    if name == 'sin':
        s, c = np.sin(x), np.cos(x)
        return _compose(u, [s, c, -s, -c, s][:n])
    if name == 'cos':
        s, c = np.sin(x), np.cos(x)
        return _compose(u, [c, -s, -c, s, c][:n])
    if name in ('sinh', 'cosh', 'tanh', 'coth'):
        sh, ch = np.sinh(x), np.cosh(x)
        jet_sinh = _compose(u, [sh, ch, sh, ch, sh][:n])
        jet_cosh = _compose(u, [ch, sh, ch, sh, ch][:n])
        if name == 'sinh':
            return jet_sinh
        if name == 'cosh':
            return jet_cosh
        if name == 'tanh':
            return _mul(jet_sinh, _reciprocal(jet_cosh, ctx))
        ctx.fail(sh == 0.0, "coth undefined")
        return _mul(jet_cosh, _reciprocal(jet_sinh, ctx))
    if name == 'tan':
        s, c = np.sin(x), np.cos(x)
        ctx.fail(c == 0.0, "tan undefined")
        return _mul(_compose(u, [s, c, -s, -c, s][:n]), _reciprocal(_compose(u, [c, -s, -c, s, c][:n]), ctx))
    if name == 'abs':
        if n > 1:
            ctx.fail(np.ones(np.shape(x), dtype=bool), "abs has no derivatives", error=NonSmoothError)
        return [np.abs(x)]
    raise ValueError(f"Unsupported function: {name}")


def _evaluate(node: Expr, ctx: _Context) -> List[np.ndarray]:
    n = ctx.order + 1
    if isinstance(node, Const):
        return [np.full(np.shape(ctx.t), node.value)] + [np.zeros(np.shape(ctx.t))] * (n - 1)
    if isinstance(node, Var):
        jet = [ctx.t, np.ones(np.shape(ctx.t))] + [np.zeros(np.shape(ctx.t))] * (n - 2)
        return jet[:n]
    if isinstance(node, Neg):
        return [-x for x in _evaluate(node.operand, ctx)]
    if isinstance(node, Pow):
        return _power(_evaluate(node.base, ctx), node.exponent, ctx)
    if isinstance(node, Apply):
        return _apply(node.func, _evaluate(node.arg, ctx), ctx)
    if isinstance(node, BinOp):
        # constant factors scale componentwise, keeping linear combinations exact
        if node.op == '*' and isinstance(node.left, Const):
            return _scale(_evaluate(node.right, ctx), node.left.value)
        if node.op in '*/' and isinstance(node.right, Const):
            left = _evaluate(node.left, ctx)
            if node.op == '*':
                return _scale(left, node.right.value)
            if node.right.value == 0.0:
                ctx.fail(np.ones(np.shape(ctx.t), dtype=bool), "division by zero")
            return [x / node.right.value for x in left]
        left = _evaluate(node.left, ctx)
        right = _evaluate(node.right, ctx)
        if node.op == '+':
            return [a + b for a, b in zip(left, right)]
        if node.op == '-':
            return [a - b for a, b in zip(left, right)]
        if node.op == '*':
            return _mul(left, right)
        return _mul(left, _reciprocal(right, ctx))
    raise TypeError(f"Not an expression node: {node!r}")


def eval_jet(e: Expr, t: Number, order: int = MAX_ORDER) -> Jet4:
    """
    Evaluate an expression and its derivatives up to ``order``.

    Args:
        e: Parsed expression
        t: Evaluation point, or numpy array of points
        order: Highest derivative wanted (0..4)

    Returns:
        Jet4 whose entries are floats for scalar ``t`` and arrays otherwise

    Raises:
        EvaluationDomainError: point outside the natural domain, or non-finite result
        NonSmoothError: derivatives of abs requested
    """
    if not 0 <= order <= MAX_ORDER:
        raise ValueError(f"Jet order must be in 0..{MAX_ORDER}, got {order}")

    scalar = np.ndim(t) == 0
    points = np.asarray(t, dtype=float)
    ctx = _Context(points, order)
    with np.errstate(all='ignore'):
        derivatives = _evaluate(e, ctx)

    for k, values in enumerate(derivatives):
        ctx.fail(~np.isfinite(values), f"non-finite derivative of order {k}")

    if scalar:
        derivatives = [float(x) for x in derivatives]
    return Jet4(*derivatives)


def make_function(e: Expr, k: int = 0) -> Callable[[np.ndarray], np.ndarray]:
    """Vectorized callable returning the k-th derivative of ``e`` at an array of points."""
    def evaluate(x: np.ndarray) -> np.ndarray:
        return np.asarray(eval_jet(e, np.asarray(x, dtype=float), order=k).derivative(k))
    return evaluate


def value(e: Expr, t: float) -> float:
    """Scalar value of ``e`` at ``t``"""
    return eval_jet(e, t, order=0).c0

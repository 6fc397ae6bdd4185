"""A tiny language for scalar functions of time ``t``.

Grammar (``^`` binds tightest, then unary minus, then ``* /``, then ``+ -``)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' '-'? INTEGER)*
    atom    := NUMBER | 't' | FUNC '(' expr ')' | '(' expr ')'
    FUNC    := sin | cos | sinh | cosh | exp

Trees are built through folding constructors (``add``, ``mul``, ...), so
constant subexpressions collapse and trivial identities (``x*1``,
``x+0``) vanish.  The same constructors serve the parser and
``differentiate``, which keeps ``parse(to_string(e)) == e``.
"""
from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from .errors import EvalError, ParseError

FUNCTIONS = ("sin", "cos", "sinh", "cosh", "exp")

_MATH = {
    "sin": math.sin,
    "cos": math.cos,
    "sinh": math.sinh,
    "cosh": math.cosh,
    "exp": math.exp,
}


class TimeExpr:
    """Base class of expression nodes; call with ``t`` to evaluate."""

    __slots__ = ()

    def __call__(self, t: float) -> float:
        return self._fn(t)

    def __str__(self):
        return to_string(self)

    @cached_property
    def _fn(self) -> Callable[[float], float]:
        return _compile(self)

    @cached_property
    def derivative(self) -> TimeExpr:
        return _diff(self)


@dataclass(frozen=True, eq=True)
class Const(TimeExpr):
    value: float


@dataclass(frozen=True, eq=True)
class Var(TimeExpr):
    pass


@dataclass(frozen=True, eq=True)
class Neg(TimeExpr):
    arg: TimeExpr


@dataclass(frozen=True, eq=True)
class BinOp(TimeExpr):
    op: str
    left: TimeExpr
    right: TimeExpr


@dataclass(frozen=True, eq=True)
class Pow(TimeExpr):
    base: TimeExpr
    exponent: int


@dataclass(frozen=True, eq=True)
class Func(TimeExpr):
    name: str
    arg: TimeExpr


T = Var()
ZERO = Const(0.0)
ONE = Const(1.0)


# -- folding constructors -----------------------------------------------------

def const(value: float) -> Const:
    value = float(value)
    # -0.0 would print as "-0.0" and reparse as Neg(Const(0.0)) -> 0.0
    return Const(0.0 if value == 0.0 else value)


def _folded(fn, *values: float) -> Const | None:
    """Const(fn(*values)), or None when the result is not a finite float.

    Unfoldable constants stay as nodes; evaluating them reports the
    overflow as an EvalError instead of failing at construction time.
    """
    try:
        v = fn(*values)
    except (OverflowError, ZeroDivisionError, ValueError):
        return None
    return const(v) if math.isfinite(v) else None


def _is(e: TimeExpr, value: float) -> bool:
    return isinstance(e, Const) and e.value == value


def neg(a: TimeExpr) -> TimeExpr:
    if isinstance(a, Const):
        return const(-a.value)
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def add(a: TimeExpr, b: TimeExpr) -> TimeExpr:
    if isinstance(a, Const) and isinstance(b, Const) and (c := _folded(operator.add, a.value, b.value)):
        return c
    if _is(a, 0.0):
        return b
    if _is(b, 0.0):
        return a
    return BinOp("+", a, b)


def sub(a: TimeExpr, b: TimeExpr) -> TimeExpr:
    if isinstance(a, Const) and isinstance(b, Const) and (c := _folded(operator.sub, a.value, b.value)):
        return c
    if _is(b, 0.0):
        return a
    if _is(a, 0.0):
        return neg(b)
    return BinOp("-", a, b)


def mul(a: TimeExpr, b: TimeExpr) -> TimeExpr:
    if isinstance(a, Const) and isinstance(b, Const) and (c := _folded(operator.mul, a.value, b.value)):
        return c
    if _is(a, 0.0) or _is(b, 0.0):
        return ZERO
    if _is(a, 1.0):
        return b
    if _is(b, 1.0):
        return a
    if _is(a, -1.0):
        return neg(b)
    if _is(b, -1.0):
        return neg(a)
    return BinOp("*", a, b)


def div(a: TimeExpr, b: TimeExpr) -> TimeExpr:
    if isinstance(a, Const) and isinstance(b, Const) and (c := _folded(operator.truediv, a.value, b.value)):
        return c
    if _is(b, 1.0):
        return a
    if _is(a, 0.0) and not isinstance(b, Const):
        return ZERO
    return BinOp("/", a, b)


def power(a: TimeExpr, n: int) -> TimeExpr:
    if n == 0:
        return ONE
    if n == 1:
        return a
    if isinstance(a, Const) and (c := _folded(operator.pow, a.value, n)):
        return c
    return Pow(a, n)


def func(name: str, a: TimeExpr) -> TimeExpr:
    if name not in _MATH:
        raise ValueError(f"unknown function {name!r}")
    if isinstance(a, Const) and (c := _folded(_MATH[name], a.value)):
        return c
    return Func(name, a)


_BINOPS = {"+": add, "-": sub, "*": mul, "/": div}


# -- evaluation -------------------------------------------------------------

def _compile(e: TimeExpr) -> Callable[[float], float]:
    if isinstance(e, Const):
        v = e.value
        return lambda t: v
    if isinstance(e, Var):
        return lambda t: t
    if isinstance(e, Neg):
        f = e.arg._fn
        return lambda t: -f(t)
    if isinstance(e, BinOp):
        f, g = e.left._fn, e.right._fn
        if e.op == "+":
            return lambda t: f(t) + g(t)
        if e.op == "-":
            return lambda t: f(t) - g(t)
        if e.op == "*":
            return lambda t: f(t) * g(t)

        def quotient(t):
            d = g(t)
            if d == 0.0:
                raise EvalError(f"division by zero in {to_string(e)} at t={t!r}")
            return f(t) / d

        return quotient
    if isinstance(e, Pow):
        f, n = e.base._fn, e.exponent
        if n > 0:
            return lambda t: f(t) ** n

        def inverse_power(t):
            v = f(t)
            if v == 0.0:
                raise EvalError(f"zero raised to negative power in {to_string(e)} at t={t!r}")
            return v ** n

        return inverse_power
    if isinstance(e, Func):
        f, m = e.arg._fn, _MATH[e.name]
        return lambda t: m(f(t))
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(e: TimeExpr, t: float) -> float:
    try:
        return e(t)
    except OverflowError as exc:
        raise EvalError(f"overflow evaluating {to_string(e)} at t={t!r}") from exc


# -- differentiation ----------------------------------------------------------

def _diff(e: TimeExpr) -> TimeExpr:
    if isinstance(e, Const):
        return ZERO
    if isinstance(e, Var):
        return ONE
    if isinstance(e, Neg):
        return neg(e.arg.derivative)
    if isinstance(e, BinOp):
        u, v = e.left, e.right
        du, dv = u.derivative, v.derivative
        if e.op == "+":
            return add(du, dv)
        if e.op == "-":
            return sub(du, dv)
        if e.op == "*":
            return add(mul(du, v), mul(u, dv))
        return div(sub(mul(du, v), mul(u, dv)), power(v, 2))
    if isinstance(e, Pow):
        n = e.exponent
        return mul(mul(const(n), power(e.base, n - 1)), e.base.derivative)
    if isinstance(e, Func):
        u = e.arg
        outer = {
            "sin": lambda: func("cos", u),
            "cos": lambda: neg(func("sin", u)),
            "sinh": lambda: func("cosh", u),
            "cosh": lambda: func("sinh", u),
            "exp": lambda: e,
        }[e.name]()
        return mul(outer, u.derivative)
    raise TypeError(f"not an expression node: {e!r}")


def differentiate(e: TimeExpr, order: int = 1) -> TimeExpr:
    for _ in range(order):
        e = e.derivative
    return e


def central_difference(e: TimeExpr, t: float, h: float | None = None) -> float:
    """Reference derivative used by the test-suite oracles."""
    if h is None:
        h = 1e-5 * max(1.0, abs(t))
    return (e(t + h) - e(t - h)) / (2.0 * h)


# -- printing -----------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_UNARY, _POW, _ATOM = 3, 4, 5


def _prec(e: TimeExpr) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return _UNARY
    if isinstance(e, Const):
        return _UNARY if e.value < 0 else _ATOM
    if isinstance(e, Pow):
        return _POW
    return _ATOM


def _fmt_number(x: float) -> str:
    text = repr(float(x))
    return text[:-2] if text.endswith(".0") else text


def to_string(e: TimeExpr) -> str:
    def wrap(child: TimeExpr, minimum: int) -> str:
        s = to_string(child)
        return f"({s})" if _prec(child) < minimum else s

    if isinstance(e, Const):
        return _fmt_number(e.value)
    if isinstance(e, Var):
        return "t"
    if isinstance(e, Neg):
        return "-" + wrap(e.arg, _UNARY)
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        # left-associative: right operand must bind strictly tighter
        return f"{wrap(e.left, p)} {e.op} {wrap(e.right, p + 1)}"
    if isinstance(e, Pow):
        return f"{wrap(e.base, _ATOM)}^{e.exponent}"
    if isinstance(e, Func):
        return f"{e.name}({to_string(e.arg)})"
    raise TypeError(f"not an expression node: {e!r}")


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            # only trailing whitespace left
            if text[pos:].strip() == "":
                break
            offset = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[offset]!r}", offset, text)
        kind = m.lastgroup
        if kind is None:
            break
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def expect(self, value):
        tok = self.next()
        if tok[1] != value or tok[0] == "end":
            self.fail(f"expected {value!r}, found {_describe(tok)}", tok)

    def parse(self) -> TimeExpr:
        e = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {_describe(self.peek())}")
        return e

    def expr(self):
        e = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.next()[1]
            e = _BINOPS[op](e, self.term())
        return e

    def term(self):
        e = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.next()[1]
            e = _BINOPS[op](e, self.unary())
        return e

    def unary(self):
        if self.peek() == ("op", "-", self.peek()[2]):
            self.next()
            return neg(self.unary())
        return self.power()

    def power(self):
        e = self.atom()
        while self.peek()[0] == "op" and self.peek()[1] == "^":
            self.next()
            sign = 1
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.next()
                sign = -1
            tok = self.next()
            if tok[0] != "num" or not tok[1].isdigit():
                self.fail("exponent must be an integer literal", tok)
            e = power(e, sign * int(tok[1]))
        return e

    def atom(self):
        tok = self.next()
        kind, value, _ = tok
        if kind == "num":
            if not math.isfinite(float(value)):
                self.fail(f"number {value} is out of range", tok)
            return const(float(value))
        if kind == "name":
            if value == "t":
                return T
            if value in _MATH:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return func(value, arg)
            self.fail(f"unknown identifier {value!r}", tok)
        if kind == "op" and value == "(":
            e = self.expr()
            self.expect(")")
            return e
        self.fail(f"unexpected {_describe(tok)}", tok)


def _describe(tok) -> str:
    return "end of input" if tok[0] == "end" else repr(tok[1])


def parse(text: str) -> TimeExpr:
    return _Parser(text).parse()


def as_expr(value) -> TimeExpr:
    """Accept an expression, a string in the grammar, or a number."""
    if isinstance(value, TimeExpr):
        return value
    if isinstance(value, (int, float)):
        return const(value)
    return parse(value)

"""Recursive-descent parser and evaluator for potential expressions.

Grammar (standard precedence, ^ binds tightest and is right-associative):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?
    atom   := NUMBER | VARIABLE | FUNC '(' expr [',' expr] ')' | '(' expr ')'

Functions: abs, exp, log, min, max.  The only variable is the (radial)
coordinate r; x is accepted as an alias for one-dimensional potentials.
Parse errors carry the byte offset of the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import ExpressionSyntaxError, UnknownIdentifier

_FUNCS_1 = {"abs", "exp", "log"}
_FUNCS_2 = {"min", "max"}
_VARIABLES = {"r", "x"}

Node = Union[float, str, tuple]


@dataclass(frozen=True)
class _Token:
    kind: str  # num | name | op | lparen | rparen | comma | end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit() or c == ".":
            j = i
            while j < n and (text[j].isdigit() or text[j] == "."):
                j += 1
            if j < n and text[j] in "eE":
                k = j + 1
                if k < n and text[k] in "+-":
                    k += 1
                if k < n and text[k].isdigit():
                    j = k
                    while j < n and text[j].isdigit():
                        j += 1
            try:
                float(text[i:j])
            except ValueError:
                raise ExpressionSyntaxError(f"bad number {text[i:j]!r}", i)
            toks.append(_Token("num", text[i:j], i))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("name", text[i:j], i))
            i = j
        elif c in "+-*/^":
            toks.append(_Token("op", c, i))
            i += 1
        elif c == "(":
            toks.append(_Token("lparen", c, i))
            i += 1
        elif c == ")":
            toks.append(_Token("rparen", c, i))
            i += 1
        elif c == ",":
            toks.append(_Token("comma", c, i))
            i += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {c!r}", i)
    toks.append(_Token("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, text: Optional[str] = None) -> _Token:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            raise ExpressionSyntaxError(
                f"expected {text or kind}, got {t.text or 'end of input'!r}", t.pos)
        return self.next()

    def parse(self) -> Node:
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ExpressionSyntaxError(f"trailing input {t.text!r}", t.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.next().text
            node = (op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.next().text
            node = (op, node, self.factor())
        return node

    def factor(self) -> Node:
        t = self.peek()
        if t.kind == "op" and t.text == "-":
            self.next()
            return ("neg", self.factor())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.next()
            return ("^", base, self.factor())
        return base

    def atom(self) -> Node:
        t = self.next()
        if t.kind == "num":
            return float(t.text)
        if t.kind == "name":
            name = t.text
            if self.peek().kind == "lparen":
                self.next()
                if name in _FUNCS_1:
                    arg = self.expr()
                    self.expect("rparen")
                    return (name, arg)
                if name in _FUNCS_2:
                    a = self.expr()
                    self.expect("comma")
                    b = self.expr()
                    self.expect("rparen")
                    return (name, a, b)
                raise UnknownIdentifier(name, t.pos)
            if name in _VARIABLES:
                return "var"
            raise UnknownIdentifier(name, t.pos)
        if t.kind == "lparen":
            node = self.expr()
            self.expect("rparen")
            return node
        raise ExpressionSyntaxError(
            f"expected value, got {t.text or 'end of input'!r}", t.pos)


def parse_expression(text: str) -> Node:
    if not text or not text.strip():
        raise ExpressionSyntaxError("empty expression", 0)
    if not text.isascii():
        raise ExpressionSyntaxError("non-ASCII input", 0)
    return _Parser(text).parse()


def evaluate(node: Node, r) -> np.ndarray:
    """Evaluate an AST at r (scalar or array)."""
    r = np.asarray(r, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        return _eval(node, r)


def _eval(node: Node, r: np.ndarray) -> np.ndarray:
    if isinstance(node, float):
        return np.full_like(r, node) if r.ndim else np.asarray(node)
    if node == "var":
        return r
    op = node[0]
    if op == "neg":
        return -_eval(node[1], r)
    if op in _FUNCS_1:
        a = _eval(node[1], r)
        return {"abs": np.abs, "exp": np.exp, "log": np.log}[op](a)
    a = _eval(node[1], r)
    b = _eval(node[2], r)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    if op == "^":
        return np.power(a, b)
    if op == "min":
        return np.minimum(a, b)
    return np.maximum(a, b)


def match_power_family(node: Node) -> Optional[tuple[float, float, float]]:
    """Recognize V = -a*r^theta + b (a > 0, theta > 0); return (a, theta, b).

    Handles the shapes -r^t, -c*r^t, -r^t*c, -r^t/c, r^t prefixed with neg,
    plus an optional constant offset on either side.
    """
    b = 0.0
    if isinstance(node, tuple) and node[0] in "+-" and len(node) == 3:
        if isinstance(node[2], float):
            b = node[2] if node[0] == "+" else -node[2]
            node = node[1]
        elif isinstance(node[1], float) and node[0] == "+":
            b = node[1]
            node = node[2]
    core = _match_neg_power(node)
    if core is None:
        return None
    a, theta = core
    if a <= 0 or theta <= 0:
        return None
    return a, theta, b


def _match_neg_power(node: Node) -> Optional[tuple[float, float]]:
    if not isinstance(node, tuple) or node[0] != "neg":
        return None
    inner = node[1]
    if isinstance(inner, tuple) and inner[0] == "^":
        t = _power_exponent(inner)
        return (1.0, t) if t is not None else None
    if isinstance(inner, tuple) and inner[0] in "*/":
        lhs, rhs = inner[1], inner[2]
        if isinstance(lhs, float) and inner[0] == "*":
            t = _power_exponent(rhs)
            return (lhs, t) if t is not None else None
        if isinstance(rhs, float):
            t = _power_exponent(lhs)
            if t is None:
                return None
            return (rhs, t) if inner[0] == "*" else (1.0 / rhs, t)
    return None


def _power_exponent(node: Node) -> Optional[float]:
    if (isinstance(node, tuple) and node[0] == "^" and node[1] == "var"
            and isinstance(node[2], float)):
        return node[2]
    if (isinstance(node, tuple) and node[0] == "^"
            and isinstance(node[1], tuple) and node[1][0] == "abs"
            and node[1][1] == "var" and isinstance(node[2], float)):
        return node[2]
    return None

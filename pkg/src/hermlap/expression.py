"""A small arithmetic-expression language for sampling user functions.

Grammar (``^`` binds tightest and is right-associative, then unary minus,
then ``* /``, then ``+ -``)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" unary)?
    atom   := NUMBER | "pi" | VAR | FUNC "(" expr ")" | "(" expr ")"

Variables are ``t``, ``x`` or ``s``, optionally followed by an axis number
(``t1``, ``t2``, ...).  Evaluation is vectorised over numpy arrays; real
inputs are evaluated in real arithmetic and complex inputs in complex
arithmetic.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ExpressionSyntaxError",
    "ExpressionDomainError",
    "Expression",
    "parse_expression",
    "FUNCTIONS",
]


class ExpressionSyntaxError(ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ExpressionDomainError(ArithmeticError):
    """Evaluation left the function's domain; ``index`` is the first bad element."""

    def __init__(self, message, index=None, value=None):
        if index is not None:
            message = f"{message} at index {index} (argument {value!r})"
        super().__init__(message)
        self.index = index
        self.value = value


def _nonpositive(a, cplx):
    return (a == 0) if cplx else (a <= 0)


def _negative(a, cplx):
    return np.zeros(np.shape(a), bool) if cplx else (a < 0)


def _never(a, cplx):
    return np.zeros(np.shape(a), bool)


# name -> (implementation, predicate flagging out-of-domain arguments)
FUNCTIONS = {
    "sin": (np.sin, _never),
    "cos": (np.cos, _never),
    "tan": (np.tan, _never),
    "exp": (np.exp, _never),
    "log": (np.log, _nonpositive),
    "sqrt": (np.sqrt, _negative),
    "sinh": (np.sinh, _never),
    "cosh": (np.cosh, _never),
    "abs": (np.abs, _never),
}
CONSTANTS = {"pi": np.pi}
_VARIABLE = re.compile(r"[txs][1-9]?\Z")

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text):
    pos, out = 0, []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


# AST nodes -----------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    func: str
    arg: object


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.tok
        if val != value or kind != "op":
            found = "end of input" if kind == "end" else repr(val)
            raise ExpressionSyntaxError(f"expected {value!r}, found {found}", pos)
        self.take()

    def parse(self):
        node = self.expr()
        kind, val, pos = self.tok
        if kind != "end":
            raise ExpressionSyntaxError(f"unexpected {val!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.tok[0] == "op" and self.tok[1] in "+-":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok[0] == "op" and self.tok[1] in "*/":
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.tok[0] == "op" and self.tok[1] in "+-":
            op = self.take()[1]
            operand = self.unary()
            return Neg(operand) if op == "-" else operand
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok[0] == "op" and self.tok[1] == "^":
            self.take()
            return BinOp("^", base, self.unary())
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Num(float(val))
        if kind == "name":
            if val in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(val, arg)
            if val in CONSTANTS:
                return Num(CONSTANTS[val])
            if _VARIABLE.match(val):
                return Var(val)
            raise ExpressionSyntaxError(f"unknown identifier {val!r}", pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(val)
        raise ExpressionSyntaxError(f"expected a value, found {found}", pos)


def _variables(node, acc):
    if isinstance(node, Var):
        acc.add(node.name)
    elif isinstance(node, Neg):
        _variables(node.operand, acc)
    elif isinstance(node, BinOp):
        _variables(node.left, acc)
        _variables(node.right, acc)
    elif isinstance(node, Call):
        _variables(node.arg, acc)
    return acc


def _domain_check(bad, args, what):
    if np.any(bad):
        j = int(np.flatnonzero(np.ravel(bad))[0])
        arg = np.ravel(np.broadcast_to(args, np.shape(bad)))[j]
        raise ExpressionDomainError(what, index=j, value=arg.item() if hasattr(arg, "item") else arg)


def _eval(node, env, cplx):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        try:
            return env[node.name]
        except KeyError:
            raise NameError(f"no value bound to variable {node.name!r}") from None
    if isinstance(node, Neg):
        return -_eval(node.operand, env, cplx)
    if isinstance(node, Call):
        fn, out_of_domain = FUNCTIONS[node.func]
        a = _eval(node.arg, env, cplx)
        _domain_check(out_of_domain(a, cplx), a, f"{node.func}() outside its domain")
        with np.errstate(all="ignore"):
            r = fn(a)
        _domain_check(np.isfinite(a) & ~np.isfinite(r), a, f"{node.func}() overflowed")
        return r
    a = _eval(node.left, env, cplx)
    b = _eval(node.right, env, cplx)
    with np.errstate(all="ignore"):
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if node.op == "/":
            _domain_check(np.asarray(b) == 0, b, "division by zero")
            return a / b
        # ^
        a_arr, b_arr = np.broadcast_arrays(a, b)
        if not cplx:
            bad = (a_arr < 0) & (b_arr != np.round(b_arr))
            _domain_check(bad, a_arr, "negative base to a fractional power")
        _domain_check((a_arr == 0) & (np.real(b_arr) < 0), a_arr, "zero to a negative power")
        r = np.power(a_arr if cplx else a_arr.astype(float), b_arr)
        _domain_check(np.isfinite(a_arr) & np.isfinite(b_arr) & ~np.isfinite(r), a_arr, "power overflowed")
        return r


class Expression:
    """A parsed expression; call it with one array, or bind names with ``evaluate``."""

    def __init__(self, text, root):
        self.text = text
        self.root = root
        self.variables = frozenset(_variables(root, set()))

    def __repr__(self):
        return f"Expression({self.text!r})"

    def evaluate(self, **env):
        cplx = any(np.iscomplexobj(v) for v in env.values())
        arrays = {k: np.asarray(v, dtype=complex if cplx else float) for k, v in env.items()}
        shape = np.broadcast_shapes(*(a.shape for a in arrays.values())) if arrays else ()
        r = _eval(self.root, arrays, cplx)
        return np.broadcast_to(r, shape).copy() if np.ndim(r) < len(shape) else r

    def __call__(self, value):
        """Bind every variable in the expression to ``value``."""
        return self.evaluate(**{name: value for name in self.variables})


def parse_expression(text: str) -> Expression:
    if not text or not text.strip():
        raise ExpressionSyntaxError("empty expression", 0)
    return Expression(text, _Parser(text).parse())

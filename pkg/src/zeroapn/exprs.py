"""Integer exponent expressions over the parameters m, i, n.

Grammar: integer constants, the names m/i/n, + - * (also · and ×),
``^`` for powers, parentheses, and gcd(a, b).  Constraint clauses compare
two expressions with = == != < <= > >=, optionally ``mod k``:

    n = 2*m+1
    m != 5 mod 14
    gcd(i, n) = 1
"""

from __future__ import annotations

import ast
import math
import operator
import re

from .errors import CatalogError

NAMES = ("m", "i", "n")

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Pow: operator.pow,
}


def _normalize(text: str) -> str:
    t = text.replace("·", "*").replace("×", "*").replace("−", "-").replace("^", "**")
    # 2m -> 2*m, 3(…) -> 3*(…)
    return re.sub(r"(\d)\s*([a-z(])", r"\1*\2", t)


class Expr:
    """A compiled exponent expression."""

    def __init__(self, text: str):
        self.text = text.strip()
        try:
            self.tree = ast.parse(_normalize(self.text), mode="eval").body
        except SyntaxError as exc:
            raise CatalogError(f"cannot parse expression {text!r}") from exc
        self.names = frozenset(self._check(self.tree))

    def _check(self, node):
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return set()
        if isinstance(node, ast.Name):
            if node.id not in NAMES:
                raise CatalogError(f"unknown name {node.id!r} in {self.text!r}")
            return {node.id}
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return self._check(node.left) | self._check(node.right)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return self._check(node.operand)
        if (
            isinstance(node, ast.Call)
            and isinstance(node.func, ast.Name)
            and node.func.id == "gcd"
            and len(node.args) == 2
        ):
            return self._check(node.args[0]) | self._check(node.args[1])
        raise CatalogError(f"unsupported syntax in {self.text!r}")

    def __call__(self, **env) -> int:
        return self._eval(self.tree, env)

    def _eval(self, node, env):
        if isinstance(node, ast.Constant):
            return node.value
        if isinstance(node, ast.Name):
            return env[node.id]
        if isinstance(node, ast.BinOp):
            left = self._eval(node.left, env)
            right = self._eval(node.right, env)
            if isinstance(node.op, ast.Pow) and right < 0:
                raise CatalogError(f"negative power in {self.text!r}")
            return _BINOPS[type(node.op)](left, right)
        if isinstance(node, ast.UnaryOp):
            return -self._eval(node.operand, env)
        a, b = (self._eval(arg, env) for arg in node.args)
        return math.gcd(a, b)

    def __repr__(self):
        return f"Expr({self.text!r})"

    def __str__(self):
        return self.text


_CMP = {
    "==": operator.eq,
    "=": operator.eq,
    "!=": operator.ne,
    "<=": operator.le,
    ">=": operator.ge,
    "<": operator.lt,
    ">": operator.gt,
}
_CLAUSE = re.compile(r"^(.*?)(==|!=|<=|>=|=|<|>)(.*?)(?:\bmod\b(.*))?$")


class Constraint:
    def __init__(self, text: str):
        self.text = text.strip()
        m = _CLAUSE.match(self.text)
        if not m:
            raise CatalogError(f"cannot parse constraint {text!r}")
        self.lhs = Expr(m.group(1))
        self.op = m.group(2)
        self.rhs = Expr(m.group(3))
        self.modulus = Expr(m.group(4)) if m.group(4) else None
        self.names = self.lhs.names | self.rhs.names | (self.modulus.names if self.modulus else frozenset())

    def __call__(self, **env) -> bool:
        a, b = self.lhs(**env), self.rhs(**env)
        if self.modulus is not None:
            k = self.modulus(**env)
            a, b = a % k, b % k
        return _CMP[self.op](a, b)

    def __repr__(self):
        return f"Constraint({self.text!r})"

    def __str__(self):
        return self.text


def parse_constraints(text: str) -> list[Constraint]:
    return [Constraint(c) for c in text.split(";") if c.strip()]

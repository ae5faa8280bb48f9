"""
Tiny expression parser for catalog data.

Matrix entries, edge labels and named constants are stored as readable
expression strings over +, -, *, /, ^, parentheses, integers and names; the
environment supplies exact values (cyclotomic scalars or rational functions).
Built-in names: zN (the root of unity of order N) and sqrtN / sqrtmN (square
roots of +-N realized by Gauss sums; N must be an odd prime with the right
residue class so the sum squares to the requested sign).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .scalars import Cyc, gauss_sum, zeta

__all__ = ["parse_expr", "builtin_constant"]

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[-+*/^()])")


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad character in expression {text!r} at {pos}")
        tok = m.group(1)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


def builtin_constant(name: str):
    if re.fullmatch(r"z\d+", name):
        return zeta(int(name[1:]))
    if re.fullmatch(r"sqrt\d+", name):
        p = int(name[4:])
        if p % 4 != 1:
            raise ValueError(f"{name}: Gauss sum gives sqrt({p}) only for p = 1 mod 4")
        return gauss_sum(p)
    if re.fullmatch(r"sqrtm\d+", name):
        p = int(name[5:])
        if p % 4 != 3:
            raise ValueError(f"{name}: Gauss sum gives sqrt(-{p}) only for p = 3 mod 4")
        return gauss_sum(p)
    return None


class _Parser:
    def __init__(self, tokens, env):
        self.toks = tokens
        self.pos = 0
        self.env = env

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def eat(self, tok=None):
        cur = self.peek()
        if tok is not None and cur != tok:
            raise ValueError(f"expected {tok!r}, found {cur!r}")
        self.pos += 1
        return cur

    def expr(self):
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.eat()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() in ("*", "/"):
            op = self.eat()
            rhs = self.factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor(self):
        if self.peek() == "-":
            self.eat()
            return -self.factor()
        if self.peek() == "+":
            self.eat()
            return self.factor()
        val = self.atom()
        while self.peek() == "^":
            self.eat()
            sign = 1
            if self.peek() == "-":
                self.eat()
                sign = -1
            k = self.eat()
            if not k.isdigit():
                raise ValueError(f"exponent must be an integer, found {k!r}")
            val = val ** (sign * int(k))
        return val

    def atom(self):
        tok = self.eat()
        if tok == "(":
            val = self.expr()
            self.eat(")")
            return val
        if tok is None:
            raise ValueError("unexpected end of expression")
        if tok.isdigit():
            return Cyc.rational(Fraction(int(tok)))
        if tok in self.env:
            return self.env[tok]
        built = builtin_constant(tok)
        if built is not None:
            return built
        raise ValueError(f"unknown name {tok!r}")


def parse_expr(text: str, env: dict | None = None):
    """Evaluate an expression string in the given environment."""
    p = _Parser(_tokenize(text), env or {})
    val = p.expr()
    if p.pos != len(p.toks):
        raise ValueError(f"trailing tokens in {text!r}")
    return val

"""
Parser and evaluator for algebra expressions.

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' ['-'] integer)?
    atom   := rational | 'zeta' | 'q' | 'v' | gen | '(' expr ')'
    gen    := 'T[' i ',' j ']' | 'J[' i (',' i)* ']' | 'phi[' c ',' ... ']' | 'b[' e ',' ... ']'

`zeta` is zeta_N for the conductor N of the context. Negative powers are
allowed for invertible monomial elements (q, v, zeta, b[...], nonzero scalars).

>>> from hecke_params.langlands import Case, ClassifiedBlock, Nature
>>> ctx = AlgebraCtx([ClassifiedBlock("rho", 1, 1, 2, Case.I, Nature.NONE)])
>>> print(evaluate(ctx, "phi[1]*b[1]"))
-1 · b[1]*phi[1]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..arith import CycScalar, LaurentPoly, q_power, v_power
from ..weyl import InvalidGenerator, SimpleGen
from .context import AlgebraCtx, CtxMismatch
from .element import HeckeElem, b_mono, j_gen, phi_gen, scalar, t_gen, unit

__all__ = ["ExprError", "parse", "evaluate"]


class ExprError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at column {pos + 1}")
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>phi|zeta|[TJbqv])|(?P<op>[-+*/^()\[\],·−]))"
)


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    pos: int


def _tokenize(src: str) -> list[Tok]:
    out, pos = [], 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            start = len(src) - len(src[pos:].lstrip())
            raise ExprError(f"unexpected character {src[start]!r}", start)
        kind = m.lastgroup
        text = m.group(kind)
        if text == "·":
            text = "*"
        elif text == "−":
            text = "-"
        out.append(Tok(kind, text, m.start(kind)))
        pos = m.end()
    out.append(Tok("end", "", len(src)))
    return out


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    kind: str  # num, zeta, q, v, T, J, phi, b, add, sub, neg, mul, pow
    pos: int
    args: tuple = ()


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def cur(self) -> Tok:
        return self.toks[self.i]

    def eat(self, text: str | None = None, kind: str | None = None) -> Tok:
        t = self.cur
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(t.text) if t.kind != "end" else "end of input"
            raise ExprError(f"expected {want}, found {got}", t.pos)
        self.i += 1
        return t

    def parse(self) -> Node:
        node = self.expr()
        if self.cur.kind != "end":
            raise ExprError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return node

    def expr(self) -> Node:
        if self.cur.text == "-":
            pos = self.eat("-").pos
            node = Node("neg", pos, (self.term(),))
        else:
            if self.cur.text == "+":
                self.eat("+")
            node = self.term()
        while self.cur.text in ("+", "-"):
            op = self.eat()
            node = Node("add" if op.text == "+" else "sub", op.pos, (node, self.term()))
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.cur.text == "*":
            op = self.eat("*")
            node = Node("mul", op.pos, (node, self.factor()))
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.cur.text == "^":
            op = self.eat("^")
            sign = 1
            if self.cur.text == "-":
                self.eat("-")
                sign = -1
            k = int(self.eat(kind="int").text)
            node = Node("pow", op.pos, (node, sign * k))
        return node

    def _int_list(self) -> tuple[int, ...]:
        self.eat("[")
        vals = [self._signed_int()]
        while self.cur.text == ",":
            self.eat(",")
            vals.append(self._signed_int())
        self.eat("]")
        return tuple(vals)

    def _signed_int(self) -> int:
        sign = 1
        if self.cur.text in ("-", "+"):
            sign = -1 if self.eat().text == "-" else 1
        return sign * int(self.eat(kind="int").text)

    def atom(self) -> Node:
        t = self.cur
        if t.kind == "int":
            self.eat()
            value = Fraction(int(t.text))
            if self.cur.text == "/":
                self.eat("/")
                den = int(self.eat(kind="int").text)
                if den == 0:
                    raise ExprError("division by zero", t.pos)
                value = value / den
            return Node("num", t.pos, (value,))
        if t.text == "(":
            self.eat("(")
            node = self.expr()
            self.eat(")")
            return node
        if t.kind == "name":
            self.eat()
            if t.text in ("zeta", "q", "v"):
                return Node(t.text, t.pos)
            return Node(t.text, t.pos, self._int_list())
        got = repr(t.text) if t.kind != "end" else "end of input"
        raise ExprError(f"expected a factor, found {got}", t.pos)


def parse(src: str) -> Node:
    return _Parser(src).parse()


# -- evaluation --------------------------------------------------------------


def _invertible_coeff(x: HeckeElem) -> LaurentPoly | None:
    if len(x.terms) != 1:
        return None
    (key, c), = x.terms.items()
    ctx = x.ctx
    if key != (ctx.zero_char, frozenset(), ctx.identity):
        return None
    if isinstance(c, LaurentPoly) and c.is_monomial():
        return c
    return None


def _eval(ctx: AlgebraCtx, node: Node) -> HeckeElem:
    k = node.kind
    try:
        if k == "num":
            return scalar(ctx, node.args[0])
        if k == "zeta":
            return scalar(ctx, CycScalar.zeta(ctx.conductor, 1))
        if k == "q":
            return scalar(ctx, q_power(1))
        if k == "v":
            return scalar(ctx, v_power(1))
        if k == "T":
            if len(node.args) != 2:
                raise ExprError("T[...] takes a block and a position", node.pos)
            return t_gen(ctx, SimpleGen(*node.args))
        if k == "J":
            return j_gen(ctx, node.args)
        if k == "phi":
            return phi_gen(ctx, node.args)
        if k == "b":
            return b_mono(ctx, node.args)
    except (InvalidGenerator, CtxMismatch) as exc:
        raise CtxMismatch(f"{exc} at column {node.pos + 1}") from None
    if k == "neg":
        return -_eval(ctx, node.args[0])
    if k in ("add", "sub", "mul"):
        a, b = _eval(ctx, node.args[0]), _eval(ctx, node.args[1])
        return a + b if k == "add" else a - b if k == "sub" else a * b
    if k == "pow":
        base, e = _eval(ctx, node.args[0]), node.args[1]
        if e < 0:
            c = _invertible_coeff(base)
            if c is None:
                raise ExprError("negative power of a non-invertible element", node.pos)
            return scalar(ctx, c**e)
        out = unit(ctx)
        for _ in range(e):
            out = out * base
        return out
    raise AssertionError(k)  # pragma: no cover


def evaluate(ctx: AlgebraCtx, src: str) -> HeckeElem:
    return _eval(ctx, parse(src))

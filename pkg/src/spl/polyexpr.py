"""Tokenizer, parser and canonical printer for polynomial expressions.

Grammar (whitespace insignificant)::

    expr     := ["-"] term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := atom ("^" NAT)?
    atom     := RATIONAL | VAR | "(" expr ")"
    RATIONAL := INT ("/" INT)?     INT := ["-"] [0-9]+     NAT := [0-9]+

There is no implicit multiplication and ``^`` binds only to an atom, so
``2x`` and ``x^2^3`` are both rejected.  ``.sid`` files hold one
``ring v1 v2 ...`` header followed by ``gen <expr>`` lines.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from .errors import (EmptyInput, ExponentOverflow, LexError, MissingRingHeader, ParseError,
                     UnknownVariable)
from .polyring import Polynomial, RingSpec

MAX_EXPONENT = 2 ** 31 - 1

_TOKEN = re.compile(r"\s*(?:(?P<num>[0-9]+)|(?P<var>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*/^()]))")


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "ExprAst"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - *
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exp: int


ExprAst = Union[Num, Var, Neg, BinOp, Pow]


def tokenize(src: str) -> List[Tuple[str, str, int]]:
    """Split ``src`` into (kind, text, offset) triples; kinds are num/var/op."""
    out = []
    pos = 0
    n = len(src)
    while pos < n:
        if src[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise LexError(f"unexpected character {src[pos]!r} at offset {pos}")
        kind = m.lastgroup
        text = m.group(kind)
        start = m.start(kind)
        if text == "*" and out and out[-1][1] == "*" and out[-1][2] == start - 1:
            raise LexError(f"'**' is not an operator (offset {start - 1}); use '^'")
        out.append((kind, text, start))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    def peek(self, ahead=0):
        j = self.i + ahead
        return self.toks[j] if j < len(self.toks) else (None, None, -1)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, text):
        kind, t, off = self.take()
        if t != text:
            if t is None:
                raise ParseError(f"expected {text!r}, found end of input")
            raise ParseError(f"expected {text!r} at offset {off}, found {t!r}")

    def parse(self) -> ExprAst:
        if not self.toks:
            raise EmptyInput("empty expression")
        node = self.expr()
        if self.i != len(self.toks):
            kind, t, off = self.peek()
            raise ParseError(f"unexpected {t!r} at offset {off}")
        return node

    def expr(self) -> ExprAst:
        if self.peek()[1] == "-" and self.peek(1)[0] != "num":
            self.take()
            node: ExprAst = Neg(self.term())
        else:
            node = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> ExprAst:
        node = self.factor()
        while self.peek()[1] == "*":
            self.take()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> ExprAst:
        node = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, t, off = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be a natural number (offset {off})")
            k = int(t)
            if k > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {t} exceeds 2^31-1")
            node = Pow(node, k)
            if self.peek()[1] == "^":
                raise ParseError("chained exponents need parentheses, e.g. (x^2)^3")
        return node

    def integer(self) -> int:
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        kind, t, off = self.take()
        if kind != "num":
            raise ParseError(f"expected an integer at offset {off}, found {t!r}")
        return sign * int(t)

    def atom(self) -> ExprAst:
        kind, t, off = self.peek()
        if kind == "num" or (t == "-" and self.peek(1)[0] == "num"):
            num = self.integer()
            if self.peek()[1] == "/":
                self.take()
                den = self.integer()
                if den == 0:
                    raise ParseError(f"zero denominator at offset {off}")
                return Num(Fraction(num, den))
            return Num(Fraction(num))
        if kind == "var":
            self.take()
            return Var(t)
        if t == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        if t is None:
            raise ParseError("unexpected end of input")
        raise ParseError(f"unexpected {t!r} at offset {off}")


def parse_expr(src: str) -> ExprAst:
    return _Parser(src).parse()


def evaluate_ast(node: ExprAst, ring: RingSpec) -> Polynomial:
    if isinstance(node, Num):
        return Polynomial.const(ring, node.value)
    if isinstance(node, Var):
        if node.name not in ring.variables:
            raise UnknownVariable(f"unknown variable {node.name!r}")
        return Polynomial.var(ring, node.name)
    if isinstance(node, Neg):
        return -evaluate_ast(node.arg, ring)
    if isinstance(node, Pow):
        return evaluate_ast(node.base, ring) ** node.exp
    left = evaluate_ast(node.left, ring)
    right = evaluate_ast(node.right, ring)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def parse_poly(src: str, ring: RingSpec) -> Polynomial:
    """Parse and fully expand ``src`` into a normalized polynomial of ``ring``."""
    return evaluate_ast(parse_expr(src), ring)


# -- printing ----------------------------------------------------------------

def _monomial_str(e: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def print_poly(p: Polynomial) -> str:
    """Canonical text: descending active order, reduced fractions, folded signs."""
    if p.is_zero():
        return "0"
    names = p.ring.variables
    out = []
    for idx, (c, e) in enumerate(p.terms()):
        neg = c < 0
        a = -c if neg else c
        mono = _monomial_str(e, names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# -- .sid files --------------------------------------------------------------

def loads_ideal(text: str) -> Tuple[RingSpec, List[Polynomial]]:
    ring = None
    gens: List[Polynomial] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        if ring is None:
            if head != "ring":
                raise MissingRingHeader("first line must be 'ring v1 v2 ...'", line=lineno)
            try:
                ring = RingSpec.of(rest.split())
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from None
            continue
        if head != "gen":
            raise ParseError(f"expected 'gen <expr>', found {head!r}", line=lineno)
        try:
            gens.append(parse_poly(rest, ring))
        except ParseError as exc:
            raise type(exc)(str(exc), line=lineno) from None
    if ring is None:
        raise MissingRingHeader("no ring header found")
    return ring, gens


def load_ideal_file(path) -> Tuple[RingSpec, List[Polynomial]]:
    """Read a ``.sid`` file; IO problems surface as ``OSError``."""
    text = Path(path).read_text(encoding="utf-8")
    return loads_ideal(text)


def dumps_ideal(ring: RingSpec, gens: Sequence[Polynomial]) -> str:
    lines = [f"ring {' '.join(ring.variables)}"]
    lines.extend(f"gen {print_poly(g)}" for g in gens)
    return "\n".join(lines) + "\n"


def dump_ideal_file(path, ring: RingSpec, gens: Sequence[Polynomial]) -> None:
    Path(path).write_text(dumps_ideal(ring, gens), encoding="utf-8")

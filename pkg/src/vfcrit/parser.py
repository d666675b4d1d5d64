"""Recursive-descent parser and deterministic printer for polynomial text.

Grammar (whitespace is insignificant, ``*`` is mandatory)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('-' | '+') factor | base ('^' uint)?
    base   := integer | integer '/' integer | name | '(' expr ')'

``^`` binds tighter than unary minus, so ``-x^2`` is ``-(x^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Sequence

from .algebra import MultiPoly
from .errors import ParseError

MAX_EXPONENT = 4096

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rat>\d+/\d+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names; ``names[0]`` is the distinguished variable."""

    names: tuple

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if not names:
            raise ValueError("at least one variable is required")
        for n in names:
            if not isinstance(n, str) or not _NAME_RE.match(n):
                raise ValueError(f"invalid variable name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {list(names)}")
        object.__setattr__(self, "names", names)

    @classmethod
    def from_string(cls, spec: str) -> "VariableContext":
        return cls([s.strip() for s in spec.split(",")])

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


class _Token(NamedTuple):
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos))
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), _byte_offset(text, pos)))
        pos = m.end()
    tokens.append(_Token("eof", "", _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, text: str, ctx: VariableContext):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ctx = ctx

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, message, tok=None):
        tok = tok or self.tok
        raise ParseError(message, tok.offset)

    def parse(self) -> MultiPoly:
        if self.tok.kind == "eof":
            self.fail("empty expression")
        p = self.expr()
        if self.tok.kind != "eof":
            self.fail(f"unexpected {self.tok.text!r}; expected operator or end of input")
        return p

    def expr(self) -> MultiPoly:
        p = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> MultiPoly:
        p = self.factor()
        while self.tok.text == "*":
            self.advance()
            p = p * self.factor()
        return p

    def factor(self) -> MultiPoly:
        if self.tok.text == "-":
            self.advance()
            return -self.factor()
        if self.tok.text == "+":
            self.advance()
            return self.factor()
        b = self.base()
        if self.tok.text == "^":
            self.advance()
            t = self.tok
            if t.kind != "int":
                self.fail("exponent must be a non-negative integer")
            self.advance()
            e = int(t.text)
            if e > MAX_EXPONENT:
                self.fail(f"exponent {e} exceeds limit {MAX_EXPONENT}", t)
            b = b ** e
        return b

    def base(self) -> MultiPoly:
        t = self.tok
        n = self.ctx.nvars
        if t.kind == "int":
            self.advance()
            return MultiPoly.constant(int(t.text), n)
        if t.kind == "rat":
            self.advance()
            num, den = t.text.split("/")
            if int(den) == 0:
                self.fail("zero denominator", t)
            return MultiPoly.constant(Fraction(int(num), int(den)), n)
        if t.kind == "name":
            self.advance()
            if t.text not in self.ctx.names:
                self.fail(f"unknown variable {t.text!r}", t)
            return MultiPoly.variable(self.ctx.index(t.text), n)
        if t.text == "(":
            self.advance()
            p = self.expr()
            if self.tok.text != ")":
                self.fail("expected ')'")
            self.advance()
            return p
        if t.kind == "eof":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {t.text!r}")


def parse_poly(text: str, ctx: VariableContext) -> MultiPoly:
    return _Parser(text, ctx).parse()


def _format_monomial(mono, names) -> List[str]:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return parts


def print_poly(p: MultiPoly, ctx: VariableContext) -> str:
    """Graded-lex (highest first) rendering that :func:`parse_poly` reads back."""
    if p.nvars != ctx.nvars:
        raise ValueError(f"polynomial has {p.nvars} variables, context has {ctx.nvars}")
    if p.is_zero():
        return "0"
    out = []
    for k, (mono, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        parts = _format_monomial(mono, ctx.names)
        if mag != 1 or not parts:
            parts.insert(0, str(mag))
        body = "*".join(parts)
        if k == 0:
            out.append(f"-{body}" if sign == "-" else body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)

"""Term language for composites of the Frobenius generators.

Grammar::

    term   := layer (";" layer)*
    layer  := factor ("*" factor)*
    factor := atom | "(" term ")"
    atom   := mult | unit | comult | counit | swap | id | id<k>

``*`` is the tensor product and binds tighter than ``;`` (composition in
diagrammatic order).  Both are left-associative.  ``#`` starts a comment
running to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Literal, NamedTuple, Optional

from hocospan import cospan as cs

Semantics = Literal["homotopy", "strict"]
Position = Optional[tuple[int, int]]


class TermError(ValueError):
    """Base class for errors that carry a 1-based (line, column)."""

    def __init__(self, message: str, pos: Position = None):
        self.pos = pos
        where = f"{pos[0]}:{pos[1]}: " if pos else ""
        super().__init__(where + message)


class ParseError(TermError):
    pass


class ArityError(TermError):
    pass


class Arity(NamedTuple):
    dom: int
    cod: int


class Term:
    pos: Position


@dataclass(frozen=True)
class Mult(Term):
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Unit(Term):
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Comult(Term):
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Counit(Term):
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Swap(Term):
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Id(Term):
    n: int = 1
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Seq(Term):
    first: Term
    second: Term
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Par(Term):
    left: Term
    right: Term
    pos: Position = field(default=None, compare=False, repr=False)


_ATOMS = {"mult": Mult, "unit": Unit, "comult": Comult, "counit": Counit, "swap": Swap}
_GENERATOR_ARITY = {Mult: Arity(2, 1), Unit: Arity(0, 1), Comult: Arity(1, 2), Counit: Arity(1, 0), Swap: Arity(2, 2)}
_GENERATOR_KIND = {Mult: "mult", Unit: "unit", Comult: "comult", Counit: "counit", Swap: "swap"}

_TOKEN = re.compile(r"(?P<ws>[ \t\r\f\v]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[;*()])")
_ID = re.compile(r"id([0-9]*)\Z")


class Token(NamedTuple):
    kind: str
    text: str
    pos: tuple[int, int]


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, i = 1, 0, 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        pos = (line, i - line_start + 1)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", pos)
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind == "word":
            tokens.append(Token("word", m.group(), pos))
        elif kind == "op":
            tokens.append(Token(m.group(), m.group(), pos))
        i = m.end()
    tokens.append(Token("eof", "", (line, i - line_start + 1)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def term(self) -> Term:
        t = self.layer()
        while self.peek().kind == ";":
            op = self.advance()
            t = Seq(t, self.layer(), pos=op.pos)
        return t

    def layer(self) -> Term:
        t = self.factor()
        while self.peek().kind == "*":
            op = self.advance()
            t = Par(t, self.factor(), pos=op.pos)
        return t

    def factor(self) -> Term:
        tok = self.advance()
        if tok.kind == "(":
            t = self.term()
            close = self.advance()
            if close.kind != ")":
                raise ParseError(f"unbalanced parenthesis opened at {tok.pos[0]}:{tok.pos[1]}", close.pos)
            return t
        if tok.kind == "word":
            return _atom(tok)
        if tok.kind == "eof":
            raise ParseError("unexpected end of input, expected a term", tok.pos)
        if tok.kind == ")":
            raise ParseError("unbalanced parenthesis", tok.pos)
        raise ParseError(f"unexpected {tok.text!r}, expected a term", tok.pos)


def _atom(tok: Token) -> Term:
    if tok.text in _ATOMS:
        return _ATOMS[tok.text](pos=tok.pos)
    m = _ID.match(tok.text)
    if m:
        return Id(int(m.group(1)) if m.group(1) else 1, pos=tok.pos)
    raise ParseError(f"unknown generator {tok.text!r}", tok.pos)


def parse(text: str) -> Term:
    tokens = tokenize(text)
    if tokens[0].kind == "eof":
        raise ParseError("empty input", tokens[0].pos)
    parser = _Parser(tokens)
    t = parser.term()
    tok = parser.peek()
    if tok.kind == ")":
        raise ParseError("unbalanced parenthesis", tok.pos)
    if tok.kind != "eof":
        raise ParseError(f"unexpected {tok.text!r} after complete term", tok.pos)
    return t


def pretty(t: Term) -> str:
    """Render a term so that ``parse(pretty(t)) == t``."""
    if isinstance(t, Id):
        return f"id{t.n}"
    if isinstance(t, Seq):
        right = pretty(t.second)
        if isinstance(t.second, Seq):
            right = f"({right})"
        return f"{pretty(t.first)} ; {right}"
    if isinstance(t, Par):
        left, right = pretty(t.left), pretty(t.right)
        if isinstance(t.left, Seq):
            left = f"({left})"
        if isinstance(t.right, (Seq, Par)):
            right = f"({right})"
        return f"{left} * {right}"
    return _GENERATOR_KIND[type(t)]


def infer_arity(t: Term) -> Arity:
    if isinstance(t, Id):
        return Arity(t.n, t.n)
    if isinstance(t, Seq):
        a, b = infer_arity(t.first), infer_arity(t.second)
        if a.cod != b.dom:
            raise ArityError(
                f"cannot compose {a.dom}->{a.cod} with {b.dom}->{b.cod} ({a.cod} != {b.dom})", t.pos
            )
        return Arity(a.dom, b.cod)
    if isinstance(t, Par):
        a, b = infer_arity(t.left), infer_arity(t.right)
        return Arity(a.dom + b.dom, a.cod + b.cod)
    return _GENERATOR_ARITY[type(t)]


def compile_term(t: Term, semantics: Semantics = "homotopy") -> cs.GraphCospan:
    if semantics not in ("homotopy", "strict"):
        raise ValueError(f"unknown semantics {semantics!r}")
    infer_arity(t)
    compose = cs.compose_homotopy if semantics == "homotopy" else cs.compose_strict
    return _compile(t, compose)


def _compile(t: Term, compose) -> cs.GraphCospan:
    if isinstance(t, Id):
        return cs.identity_cospan(t.n)
    if isinstance(t, Seq):
        return compose(_compile(t.first, compose), _compile(t.second, compose))
    if isinstance(t, Par):
        return cs.tensor_cospan(_compile(t.left, compose), _compile(t.right, compose))
    return cs.generator_cospan(_GENERATOR_KIND[type(t)])


def leaves(t: Term):
    if isinstance(t, Seq):
        yield from leaves(t.first)
        yield from leaves(t.second)
    elif isinstance(t, Par):
        yield from leaves(t.left)
        yield from leaves(t.right)
    else:
        yield t

"""Prefix-form text syntax for set expressions.

    (iota) (diag) (half >= c) (half <= c) (lit [t1] [t2] ...)
    (union E E ...) (meet E E ...) (shift E) (swap01 E) (neg0 E)
    (zero0 E) (proj0 E) (stride m E) (addc c E) (mulc c E)
    (perm (p0 p1 ...) E) (prod k E E) (add01 E) (pattern NAME)

``perm`` lists the image of coordinates 0, 1, ...: coordinate i moves to p_i.
``NAME`` in ``pattern`` is a catalog name (``q.paper``) or a pattern file path.
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import Callable

from ..codec import format_tuple, parse_tuple
from ..errors import ParseError
from .expr import (Add01, AddC, Diag, Half, Iota, Lit, Meet, MulC, Neg0, Pattern, Perm,
                   Prod, Proj0, SetExpr, Shift, Stride, Swap01, Union, Zero0)
from .pattern import PatternSet, parse_pattern

_TOKEN = re.compile(r"\s*(\(|\)|\[[^\]]*\]?|[^\s()\[\]]+)")

Resolver = Callable[[str], PatternSet]

_UNARY = {"shift": Shift, "swap01": Swap01, "neg0": Neg0, "zero0": Zero0,
          "proj0": Proj0, "add01": Add01}


def default_resolver(name: str) -> PatternSet:
    from .. import catalog

    p = catalog.lookup_pattern(name)
    if p is not None:
        return p
    path = Path(name)
    if path.is_file():
        return parse_pattern(path.read_text(), name=name)
    raise KeyError(f"unknown pattern {name!r} (not a catalog name or a file)")


def _tokenize(text: str) -> list[tuple[str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1):
            toks.append((m.group(1), m.start(1)))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str, resolver: Resolver):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.resolver = resolver

    def error(self, msg: str) -> ParseError:
        pos = self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)
        return ParseError(msg, pos, self.text)

    def peek(self) -> str | None:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self) -> str:
        if self.i >= len(self.toks):
            raise self.error("unexpected end of expression")
        tok = self.toks[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            raise self.error(f"expected {tok!r}")
        self.i += 1

    def integer(self) -> int:
        tok = self.peek()
        if tok is None or not re.fullmatch(r"[+-]?[0-9]+", tok):
            raise self.error(f"expected an integer, got {tok!r}")
        self.i += 1
        return int(tok)

    def expr(self) -> SetExpr:
        self.expect("(")
        head = self.take()
        start = self.i - 1
        try:
            node = self._node(head)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            self.i = start
            raise self.error(str(exc)) from None
        self.expect(")")
        return node

    def _node(self, head: str) -> SetExpr:
        if head == "iota":
            return Iota()
        if head == "diag":
            return Diag()
        if head == "half":
            op = self.take()
            if op not in (">=", "<="):
                self.i -= 1
                raise self.error("half expects '>=' or '<='")
            return Half(self.integer(), op == ">=")
        if head == "lit":
            items = []
            while self.peek() not in (")", None):
                tok, pos = self.toks[self.i]
                try:
                    items.append(parse_tuple(tok))
                except ParseError as exc:
                    raise ParseError(str(exc).split(" (at")[0], pos, self.text) from None
                self.i += 1
            return Lit(frozenset(items))
        if head in ("union", "meet"):
            parts = [self.expr()]
            while self.peek() == "(":
                parts.append(self.expr())
            if len(parts) < 2:
                raise self.error(f"{head} needs at least two operands")
            cls = Union if head == "union" else Meet
            out = parts[0]
            for p in parts[1:]:
                out = cls(out, p)
            return out
        if head in _UNARY:
            return _UNARY[head](self.expr())
        if head == "stride":
            m = self.integer()
            return Stride(m, self.expr())
        if head in ("addc", "mulc"):
            c = self.integer()
            return (AddC if head == "addc" else MulC)(self.expr(), c)
        if head == "perm":
            self.expect("(")
            p = []
            while self.peek() != ")":
                p.append(self.integer())
            self.expect(")")
            return Perm(self.expr(), tuple(p))
        if head == "prod":
            k = self.integer()
            return Prod(k, self.expr(), self.expr())
        if head == "pattern":
            name = self.take()
            try:
                return Pattern(self.resolver(name), name)
            except (KeyError, OSError) as exc:
                self.i -= 1
                raise self.error(str(exc).strip("'\"")) from None
        self.i -= 1
        raise self.error(f"unknown operation {head!r}")


def parse_expr(text: str, resolver: Resolver | None = None) -> SetExpr:
    p = _Parser(text, resolver or default_resolver)
    e = p.expr()
    if p.peek() is not None:
        raise p.error("trailing input after expression")
    return e


def _head(e: SetExpr) -> tuple[str, list]:
    """Operator text and the argument list (strings or subexpressions)."""
    if isinstance(e, Iota):
        return "iota", []
    if isinstance(e, Diag):
        return "diag", []
    if isinstance(e, Half):
        return "half", [">=" if e.ge else "<=", str(e.c)]
    if isinstance(e, Lit):
        return "lit", [format_tuple(t) for t in e.sorted_items()]
    if isinstance(e, Pattern):
        ref = e.ref or e.pattern.name
        if not ref:
            raise ValueError("an unnamed pattern cannot be printed")
        return "pattern", [ref]
    if isinstance(e, Union):
        return "union", [e.a, e.b]
    if isinstance(e, Meet):
        return "meet", [e.a, e.b]
    if isinstance(e, Stride):
        return "stride", [str(e.m), e.a]
    if isinstance(e, AddC):
        return "addc", [str(e.c), e.a]
    if isinstance(e, MulC):
        return "mulc", [str(e.c), e.a]
    if isinstance(e, Perm):
        return "perm", ["(" + " ".join(map(str, e.p)) + ")", e.a]
    if isinstance(e, Prod):
        return "prod", [str(e.k), e.a, e.b]
    for name, cls in _UNARY.items():
        if type(e) is cls:
            return name, [e.a]
    raise TypeError(f"not a set expression: {e!r}")


def format_expr(e: SetExpr, pretty: bool = False, width: int = 88) -> str:
    if not pretty:
        head, args = _head(e)
        return "(" + " ".join([head] + [a if isinstance(a, str) else format_expr(a) for a in args]) + ")"
    return _pretty(e, 0, width)


def _pretty(e: SetExpr, indent: int, width: int) -> str:
    flat = format_expr(e)
    if indent + len(flat) <= width:
        return flat
    head, args = _head(e)
    atoms = [a for a in args if isinstance(a, str)]
    subs = [a for a in args if not isinstance(a, str)]
    first = "(" + " ".join([head] + atoms)
    pad = " " * (indent + 2)
    lines = [first] + [pad + _pretty(s, indent + 2, width) for s in subs]
    return "\n".join(lines) + ")"

"""Integer affine forms ``c0 + c1*p1 + ... + cd*pd`` and a small parser for them."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import ParseError

_TOKENS = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


@dataclass(frozen=True)
class AffineForm:
    const: int = 0
    coeffs: tuple[tuple[str, int], ...] = ()

    @classmethod
    def make(cls, const: int = 0, coeffs: Mapping[str, int] | None = None) -> AffineForm:
        items = tuple(sorted((k, int(v)) for k, v in (coeffs or {}).items() if v))
        return cls(int(const), items)

    @classmethod
    def var(cls, name: str, coeff: int = 1) -> AffineForm:
        return cls.make(0, {name: coeff})

    def coeff(self, name: str) -> int:
        for k, v in self.coeffs:
            if k == name:
                return v
        return 0

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.coeffs)

    def is_constant(self) -> bool:
        return not self.coeffs

    def _combine(self, other: AffineForm, sign: int) -> AffineForm:
        d = dict(self.coeffs)
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + sign * v
        return AffineForm.make(self.const + sign * other.const, d)

    def __add__(self, other: AffineForm) -> AffineForm:
        return self._combine(other, 1)

    def __sub__(self, other: AffineForm) -> AffineForm:
        return self._combine(other, -1)

    def __neg__(self) -> AffineForm:
        return self.scale(-1)

    def scale(self, c: int) -> AffineForm:
        return AffineForm.make(self.const * c, {k: v * c for k, v in self.coeffs})

    def __call__(self, env: Mapping[str, int]) -> int:
        return self.const + sum(v * env[k] for k, v in self.coeffs)

    def format(self, order: Sequence[str] | None = None) -> str:
        names = list(order) if order is not None else [k for k, _ in self.coeffs]
        parts = []
        for k in names:
            v = self.coeff(k)
            if not v:
                continue
            mag = "" if abs(v) == 1 else f"{abs(v)}*"
            sign = "-" if v < 0 else ("+" if parts else "")
            parts.append(f"{sign}{mag}{k}")
        if self.const or not parts:
            parts.append(f"{self.const:+d}" if parts else str(self.const))
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()


class _Parser:
    def __init__(self, text: str, names: frozenset[str] | None, offset: int):
        self.text = text
        self.names = names
        self.offset = offset
        self.toks = []
        for m in _TOKENS.finditer(text):
            if m.group(0).strip() == "":
                continue
            kind = "int" if m.group(1) else "name" if m.group(2) else "op"
            self.toks.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        self.i = 0

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        if pos is None:
            pos = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
        return ParseError(msg, self.offset + pos, self.text)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> AffineForm:
        f = self.expr()
        if self.i != len(self.toks):
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return f

    def expr(self) -> AffineForm:
        f = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> AffineForm:
        f = self.factor()
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.take()
            elif not (kind == "name" or val == "("):
                return f
            pos = self.peek()[2]
            g = self.factor()
            if f.is_constant():
                f = g.scale(f.const)
            elif g.is_constant():
                f = f.scale(g.const)
            else:
                raise self.error("product of two non-constant terms is not affine", pos)

    def factor(self) -> AffineForm:
        kind, val, pos = self.take()
        if val in ("-", "+"):
            f = self.factor()
            return -f if val == "-" else f
        if kind == "int":
            return AffineForm(int(val))
        if kind == "name":
            if self.names is not None and val not in self.names:
                raise self.error(f"unknown parameter {val!r}", pos)
            return AffineForm.var(val)
        if val == "(":
            f = self.expr()
            if self.take()[1] != ")":
                raise self.error("expected ')'")
            return f
        raise self.error("expected a number, parameter or '('" if val is not None else "unexpected end of expression", pos)


def parse_affine(text: str, names: Sequence[str] | None = None, offset: int = 0) -> AffineForm:
    """Parse e.g. ``1-k``, ``-(k-1)``, ``2*p+q``, ``2k``.

    ``names`` restricts the allowed parameters; ``offset`` shifts error positions.
    """
    return _Parser(text, None if names is None else frozenset(names), offset).parse()

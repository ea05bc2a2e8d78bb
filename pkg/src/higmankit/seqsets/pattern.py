"""Parametric tuple families with affine coordinates.

A pattern of arity L has integer parameters p1..pd, one affine form per
coordinate, and a domain given by affine inequalities ``form >= 0``.  Every
parameter must have a pivot: a coordinate whose form is ``c + p`` or
``c - p``.  The pivot pins the only candidate value of the parameter, which
makes membership a direct check.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from ..affine import AffineForm, parse_affine
from ..codec import ExpTuple, canonical
from ..errors import ParseError, PatternError
from . import interval as iv


@dataclass(frozen=True)
class PatternSet:
    params: tuple[str, ...]
    forms: tuple[AffineForm, ...]
    pivots: tuple[int, ...]
    domain: tuple[AffineForm, ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.pivots) != len(self.params):
            raise PatternError("every parameter needs exactly one pivot")
        if len(set(self.params)) != len(self.params):
            raise PatternError("duplicate parameter names")
        known = set(self.params)
        for j, f in enumerate(self.forms):
            extra = set(f.params) - known
            if extra:
                raise PatternError(f"coordinate {j} uses undeclared parameter(s) {sorted(extra)}")
        for d in self.domain:
            extra = set(d.params) - known
            if extra:
                raise PatternError(f"domain uses undeclared parameter(s) {sorted(extra)}")
        for p, q in zip(self.params, self.pivots):
            if not 0 <= q < len(self.forms):
                raise PatternError(f"pivot {q} of {p} is outside arity {len(self.forms)}")
            f = self.forms[q]
            if f.params != (p,) or abs(f.coeff(p)) != 1:
                raise PatternError(f"coordinate {q} is not a pivot for {p}: {f.format(self.params)}")

    @property
    def arity(self) -> int:
        return len(self.forms)

    def pivot_sign(self, i: int) -> int:
        return self.forms[self.pivots[i]].coeff(self.params[i])

    def in_domain(self, env: Mapping[str, int]) -> bool:
        return all(d(env) >= 0 for d in self.domain)

    def point(self, env: Mapping[str, int] | Sequence[int]) -> ExpTuple:
        if not isinstance(env, Mapping):
            env = dict(zip(self.params, env))
        return canonical(f(env) for f in self.forms)

    def solve(self, t: Sequence[int]) -> dict[str, int]:
        """The unique parameter values the pivots allow for ``t``."""
        env = {}
        for i, (p, q) in enumerate(zip(self.params, self.pivots)):
            x = t[q] if q < len(t) else 0
            env[p] = self.pivot_sign(i) * (x - self.forms[q].const)
        return env

    def contains(self, t: Sequence[int]) -> bool:
        t = canonical(t)
        if len(t) > self.arity:
            return False
        env = self.solve(t)
        return self.in_domain(env) and self.point(env) == t

    __contains__ = contains

    def param_box(self, box: iv.Box | None = None, rounds: int = 16) -> dict[str, iv.Interval] | None:
        """Sound interval bounds on the parameters of members lying in ``box``.

        ``box`` defaults to all coordinates free.  Returns None when no
        member can lie in the box.
        """
        if box is None:
            box = (iv.FULL,) * self.arity
        for j in range(self.arity, len(box)):
            if not iv.contains(box[j], 0):
                return None
        P = {p: iv.FULL for p in self.params}
        constraints = [(f, iv.get(box, j)) for j, f in enumerate(self.forms)]
        constraints += [(d, (0, iv.INF)) for d in self.domain]
        for _ in range(rounds):
            changed = False
            for f, target in constraints:
                if f.is_constant():
                    if not iv.contains(target, f.const):
                        return None
                    continue
                for p, a in f.coeffs:
                    rest = (f.const, f.const)
                    for o, b in f.coeffs:
                        if o != p:
                            rest = iv.add(rest, iv.scale(P[o], b))
                    new = iv.div_in(iv.sub(target, rest), a)
                    new = new and iv.meet(P[p], new)
                    if new is None:
                        return None
                    if new != P[p]:
                        P[p] = new
                        changed = True
            if not changed:
                break
        return P

    def eval_box(self, P: Mapping[str, iv.Interval]) -> iv.Box:
        out = []
        for f in self.forms:
            acc = (f.const, f.const)
            for p, a in f.coeffs:
                acc = iv.add(acc, iv.scale(P[p], a))
            out.append(acc)
        return tuple(out)

    def points(self, radius: int) -> Iterator[ExpTuple]:
        """Members whose parameters all satisfy ``|p| <= radius``."""
        vals = sorted(range(-radius, radius + 1), key=lambda v: (abs(v), v < 0))
        for combo in itertools.product(vals, repeat=len(self.params)):
            env = dict(zip(self.params, combo))
            if self.in_domain(env):
                yield self.point(env)

    def format(self) -> str:
        lines = []
        if self.name:
            lines.append(f"name {self.name}")
        lines.append(f"arity {self.arity}")
        single: dict[str, list[str]] = {p: [] for p in self.params}
        multi = []
        for d in self.domain:
            if len(d.params) == 1:
                single[d.params[0]].append(_format_ineq(d, self.params))
            else:
                multi.append(_format_ineq(d, self.params))
        for p, q in zip(self.params, self.pivots):
            dom = f" domain {', '.join(single[p])}" if single[p] else ""
            lines.append(f"param {p} pivot {q}{dom}")
        lines += [f"domain {s}" for s in multi]
        lines += [f"coord {j} = {f.format(self.params)}" for j, f in enumerate(self.forms)]
        return "\n".join(lines) + "\n"


def _format_ineq(d: AffineForm, order: Sequence[str]) -> str:
    lin = AffineForm(0, d.coeffs)
    if len(d.coeffs) == 1 and d.coeffs[0][1] < 0:
        return f"{(-lin).format(order)}<={d.const}"
    return f"{lin.format(order)}>={-d.const}"


def pattern_member(P: PatternSet, t: Sequence[int]) -> bool:
    return P.contains(t)


def parse_inequality(text: str, names: Sequence[str], offset: int = 0) -> AffineForm:
    m = re.search(r">=|<=", text)
    if m is None:
        raise ParseError(f"expected '>=' or '<=' in {text.strip()!r}", offset)
    lhs = parse_affine(text[:m.start()], names, offset)
    rhs = parse_affine(text[m.end():], names, offset + m.end())
    return lhs - rhs if m.group() == ">=" else rhs - lhs


def parse_pattern(text: str, name: str | None = None) -> PatternSet:
    arity = None
    params: list[str] = []
    pivots: list[int] = []
    pending_domain: list[tuple[str, int]] = []
    coords: dict[int, tuple[str, int]] = {}
    offset = 0
    for line in text.splitlines(keepends=True):
        start = offset
        offset += len(line)
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        col = start + line.index(body)
        head, _, rest = body.partition(" ")
        rest = rest.strip()
        rest_col = col + len(body) - len(rest)
        if head == "name":
            name = name or rest
        elif head == "arity":
            if not rest.isdigit():
                raise ParseError(f"bad arity {rest!r}", rest_col, text)
            arity = int(rest)
        elif head == "param":
            m = re.fullmatch(r"([A-Za-z_]\w*)\s+pivot\s+([0-9]+)(?:\s+domain\s+(.*))?", rest)
            if m is None:
                raise ParseError("expected 'param <name> pivot <j> [domain <ineq>, ...]'", col, text)
            params.append(m.group(1))
            pivots.append(int(m.group(2)))
            if m.group(3):
                pending_domain += _split_domain(m.group(3), rest_col + m.start(3))
        elif head == "domain":
            pending_domain += _split_domain(rest, rest_col)
        elif head == "coord":
            m = re.fullmatch(r"([0-9]+)\s*=\s*(.+)", rest)
            if m is None:
                raise ParseError("expected 'coord <j> = <affine expr>'", col, text)
            j = int(m.group(1))
            if j in coords:
                raise ParseError(f"coordinate {j} defined twice", col, text)
            coords[j] = (m.group(2), rest_col + m.start(2))
        else:
            raise ParseError(f"unknown directive {head!r}", col, text)
    if arity is None:
        arity = max(coords) + 1 if coords else 0
    missing = [j for j in range(arity) if j not in coords]
    if missing or any(j >= arity for j in coords):
        raise PatternError(f"coordinates must be exactly 0..{arity - 1}")
    forms = tuple(parse_affine(coords[j][0], params, coords[j][1]) for j in range(arity))
    domain = tuple(parse_inequality(s, params, pos) for s, pos in pending_domain)
    return PatternSet(tuple(params), forms, tuple(pivots), domain, name)


def _split_domain(text: str, pos: int) -> list[tuple[str, int]]:
    out = []
    for piece in text.split(","):
        if piece.strip():
            out.append((piece, pos))
        pos += len(piece) + 1
    return out


def make_pattern(forms: Sequence[str | int], params: Sequence[str], pivots: Sequence[int],
                 domain: Sequence[str] = (), name: str | None = None) -> PatternSet:
    """Build a pattern from short strings, e.g. ``make_pattern(["k", "-k"], ["k"], [0], ["k>=2"])``."""
    fs = tuple(parse_affine(str(f), params) for f in forms)
    ds = tuple(parse_inequality(d, params) for d in domain)
    return PatternSet(tuple(params), fs, tuple(pivots), ds, name)

"""Compile a pivoted affine pattern into an expression over the base sets.

The result is an intersection of constraints, each living on a fixed number
W of coordinates (the pattern's arity plus scratch coordinates):

* a parameter's pivot coordinate holds ``Iota``, or ``Half`` when the domain
  bounds that parameter;
* a constant coordinate holds a one-point ``Lit``;
* a coordinate depending on one parameter is tied to the pivot by a
  two-coordinate link built from ``Diag`` with ``AddC``/``MulC``/``Neg0``;
* a coordinate depending on several parameters, and a domain inequality on
  several parameters, is computed through scratch coordinates with the sum
  relation ``{(x + y, y, x)}``.

Each constraint is padded to W coordinates with ``Prod`` and moved into
place with ``Perm``.  Scratch coordinates are then swapped to coordinate 0
and erased with ``Proj0``, in allocation order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnsupportedPattern
from .seqsets.expr import (Add01, AddC, Diag, Half, Iota, Lit, MulC, Neg0, Pattern, Perm, Prod,
                           Proj0, SetExpr, Swap01, meet_all)
from .seqsets.pattern import PatternSet
from .seqsets.window import Comparison, eq_on_window

EMPTY = Lit(frozenset())


@lru_cache(maxsize=None)
def any_set(n: int) -> SetExpr:
    """All sequences supported on [0, n)."""
    if n == 0:
        return Lit(frozenset([()]))
    if n == 1:
        return Iota()
    return Prod(1, Iota(), any_set(n - 1))


def link(mult: int, x_off: int, y_off: int) -> SetExpr:
    """``{(mult*(x - x_off) + y_off, x)}`` from ``Diag``."""
    e: SetExpr = Diag()
    if x_off:
        e = Swap01(AddC(Swap01(e), x_off))
    if mult == -1:
        e = Neg0(e)
    elif mult != 1:
        e = MulC(e, mult)
    if y_off:
        e = AddC(e, y_off)
    return e


def sum_relation(const: int = 0) -> SetExpr:
    """``{(x + y + const, y, x)}``."""
    e: SetExpr = Add01(Perm(Prod(2, Diag(), Iota()), (0, 2, 1)))
    return AddC(e, const) if const else e


def place(core: SetExpr, positions: list[int], width: int) -> SetExpr:
    """Pad ``core`` (living on ``len(positions)`` coordinates) to ``width`` and route it."""
    w = len(positions)
    e = Prod(w, core, any_set(width - w)) if width > w else core
    rest = sorted(set(range(width)) - set(positions))
    p = tuple(positions) + tuple(rest)
    return e if p == tuple(range(width)) else Perm(e, p)


def _transposition(n: int, i: int) -> tuple[int, ...]:
    p = list(range(n))
    p[0], p[i] = i, 0
    return tuple(p)


class _Builder:
    def __init__(self, P: PatternSet):
        self.P = P
        self.width = P.arity
        self.scratch: list[int] = []
        self.constraints: list[tuple[SetExpr, list[int]]] = []

    def fresh(self) -> int:
        i = self.width
        self.width += 1
        self.scratch.append(i)
        return i

    def pivot_info(self, p: str) -> tuple[int, int, int]:
        i = self.P.params.index(p)
        q = self.P.pivots[i]
        return q, self.P.pivot_sign(i), self.P.forms[q].const

    def term(self, p: str, a: int) -> int:
        """A coordinate holding ``a * p``."""
        q, s, c = self.pivot_info(p)
        if a * s == 1 and c == 0:
            return q
        t = self.fresh()
        self.constraints.append((link(a * s, c, 0), [t, q]))
        return t

    def sum_into(self, target: int, coeffs, const: int) -> None:
        positions = [self.term(p, a) for p, a in coeffs]
        acc = positions[0]
        for n, pos in enumerate(positions[1:], 2):
            last = n == len(positions)
            out = target if last else self.fresh()
            self.constraints.append((sum_relation(const if last else 0), [out, pos, acc]))
            acc = out


def _bounds(P: PatternSet, p: str) -> list[Half]:
    """Unary domain bounds on parameter ``p`` as bounds on its pivot coordinate."""
    i = P.params.index(p)
    q = P.pivots[i]
    s, c_q = P.pivot_sign(i), P.forms[q].const
    out = []
    for d in P.domain:
        if d.params != (p,):
            continue
        a = d.coeff(p)
        # a*p + d.const >= 0, and x = s*p + c_q on the pivot
        if a > 0:
            lo = -(d.const // a)
            out.append(Half(lo + c_q, True) if s == 1 else Half(c_q - lo, False))
        else:
            hi = d.const // -a
            out.append(Half(hi + c_q, False) if s == 1 else Half(c_q - hi, True))
    return out


def compile_pattern(P: PatternSet) -> SetExpr:
    for p, q in zip(P.params, P.pivots):
        f = P.forms[q]
        if f.params != (p,) or abs(f.coeff(p)) != 1:
            raise UnsupportedPattern(f"coordinate {q} is not a pivot for {p}")
    if any(d.is_constant() and d.const < 0 for d in P.domain):
        return EMPTY

    b = _Builder(P)
    for p, q in zip(P.params, P.pivots):
        hs = _bounds(P, p)
        b.constraints.append((meet_all(hs) if hs else Iota(), [q]))
    pivots = set(P.pivots)
    for j, f in enumerate(P.forms):
        if j in pivots:
            continue
        if f.is_constant():
            b.constraints.append((Lit.of((f.const,)), [j]))
        elif len(f.coeffs) == 1:
            (p, a), = f.coeffs
            q, s, c_q = b.pivot_info(p)
            b.constraints.append((link(a * s, c_q, f.const), [j, q]))
        else:
            b.sum_into(j, f.coeffs, f.const)
    for d in P.domain:
        if len(d.params) > 1:
            v = b.fresh()
            b.sum_into(v, d.coeffs, d.const)
            b.constraints.append((Half(0, True), [v]))

    W = b.width
    e = meet_all(place(core, pos, W) for core, pos in b.constraints)
    for s in b.scratch:
        t = _transposition(W, s)
        e = Perm(Proj0(Perm(e, t)), t)
    if b.scratch:
        e = meet_all([e, any_set(P.arity)])
    return e


@dataclass(frozen=True)
class VerifyReport:
    verdict: str
    witness: tuple | None
    pattern_window: int
    expr_window: int
    unresolved: int
    queries: int
    budget_spent: int

    def __str__(self) -> str:
        if self.verdict == "Differ":
            return "Differ([" + ",".join(map(str, self.witness)) + "])"
        return self.verdict


def verify_compilation(P: PatternSet, e: SetExpr, L: int, N: int, budget: int) -> VerifyReport:
    c: Comparison = eq_on_window(Pattern(P, P.name), e, L, N, budget)
    return VerifyReport(
        c.verdict, c.witness, len(c.left.members), len(c.right.members),
        len(c.left.unresolved) + len(c.right.unresolved),
        c.left.queries + c.right.queries, c.left.spent + c.right.spent,
    )

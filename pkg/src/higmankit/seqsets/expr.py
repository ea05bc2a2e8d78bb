"""Immutable expression trees over sets of finitely supported integer sequences.

Bases: ``Iota``, ``Lit``, ``Diag``, ``Half``, ``Pattern``.  Higman operations:
``Union``, ``Meet``, ``Shift``, ``Swap01``, ``Neg0``, ``Zero0``, ``Proj0``,
``Stride``.  Auxiliary operations: ``AddC``, ``MulC``, ``Perm``, ``Prod``,
``Add01``.  What each node means lives in :mod:`.semantics`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, fields
from typing import Iterable, Iterator

from ..codec import ExpTuple, canonical
from .pattern import PatternSet


class SetExpr:
    __slots__ = ()

    def children(self) -> tuple[SetExpr, ...]:
        return tuple(getattr(self, f.name) for f in fields(self) if isinstance(getattr(self, f.name), SetExpr))

    def walk(self) -> Iterator[SetExpr]:
        stack = [self]
        while stack:
            e = stack.pop()
            yield e
            stack.extend(reversed(e.children()))

    def __str__(self) -> str:
        from .dsl import format_expr
        return format_expr(self)


# -- bases -------------------------------------------------------------------

@dataclass(frozen=True)
class Iota(SetExpr):
    """All sequences supported on coordinate 0."""


@dataclass(frozen=True)
class Lit(SetExpr):
    items: frozenset

    @classmethod
    def of(cls, *tuples: Iterable[int]) -> Lit:
        return cls(frozenset(canonical(t) for t in tuples))

    def sorted_items(self) -> list[ExpTuple]:
        return sorted(self.items, key=lambda t: (len(t), t))


@dataclass(frozen=True)
class Diag(SetExpr):
    """``{(n, n)}``."""


@dataclass(frozen=True)
class Half(SetExpr):
    """``{(n) : n >= c}`` or ``{(n) : n <= c}``."""

    c: int
    ge: bool = True


@dataclass(frozen=True)
class Pattern(SetExpr):
    pattern: PatternSet
    ref: str | None = None  # name used by the DSL printer


# -- Higman operations -----------------------------------------------------

@dataclass(frozen=True)
class Union(SetExpr):
    a: SetExpr
    b: SetExpr


@dataclass(frozen=True)
class Meet(SetExpr):
    a: SetExpr
    b: SetExpr


@dataclass(frozen=True)
class Shift(SetExpr):
    a: SetExpr


@dataclass(frozen=True)
class Swap01(SetExpr):
    a: SetExpr


@dataclass(frozen=True)
class Neg0(SetExpr):
    a: SetExpr


@dataclass(frozen=True)
class Zero0(SetExpr):
    a: SetExpr


@dataclass(frozen=True)
class Proj0(SetExpr):
    a: SetExpr


@dataclass(frozen=True)
class Stride(SetExpr):
    m: int
    a: SetExpr

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("stride needs m >= 1")


# -- auxiliary operations ----------------------------------------------------

@dataclass(frozen=True)
class AddC(SetExpr):
    a: SetExpr
    c: int


@dataclass(frozen=True)
class MulC(SetExpr):
    a: SetExpr
    c: int

    def __post_init__(self):
        if self.c == 0:
            raise ValueError("mulc constant must be nonzero")


@dataclass(frozen=True)
class Perm(SetExpr):
    """Coordinate ``i`` of each member of ``a`` moves to position ``p[i]``."""

    a: SetExpr
    p: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.p) != list(range(len(self.p))):
            raise ValueError(f"not a permutation of 0..{len(self.p) - 1}: {self.p}")


@dataclass(frozen=True)
class Prod(SetExpr):
    """Members whose first ``k`` coordinates lie in ``a`` and whose tail lies in ``b``."""

    k: int
    a: SetExpr
    b: SetExpr

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("prod needs k >= 0")


@dataclass(frozen=True)
class Add01(SetExpr):
    """Add coordinate 1 into coordinate 0."""

    a: SetExpr


BASES = (Iota, Lit, Diag, Half, Pattern)
HIGMAN_OPS = (Union, Meet, Shift, Swap01, Neg0, Zero0, Proj0, Stride)
AUX_OPS = (AddC, MulC, Perm, Prod, Add01)
NODE_TYPES = BASES + HIGMAN_OPS + AUX_OPS


def union_all(items: Iterable[SetExpr]) -> SetExpr:
    items = list(items)
    if not items:
        return Lit(frozenset())
    out = items[0]
    for e in items[1:]:
        out = Union(out, e)
    return out


def meet_all(items: Iterable[SetExpr]) -> SetExpr:
    items = list(items)
    if not items:
        raise ValueError("meet of nothing")
    out = items[0]
    for e in items[1:]:
        out = Meet(out, e)
    return out


@dataclass(frozen=True)
class ExprStats:
    nodes: int
    depth: int
    histogram: dict


def expr_stats(e: SetExpr) -> ExprStats:
    hist: Counter = Counter()
    depth = 0
    stack = [(e, 1)]
    while stack:
        node, d = stack.pop()
        hist[type(node).__name__] += 1
        depth = max(depth, d)
        stack.extend((c, d + 1) for c in node.children())
    return ExprStats(sum(hist.values()), depth, dict(sorted(hist.items())))

"""Finite windows of a set: members with support in [0, L) and entries in [-N, N].

``window`` walks the box coordinate by coordinate and prunes with the
interval refinement from :mod:`.semantics`, so it never visits a region
that refinement proves empty.  Every surviving point gets a full
``member`` query.  ``window_brute`` queries every point of the box and is
kept as the reference for small boxes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..codec import ExpTuple, canonical
from . import interval as iv
from . import semantics
from .expr import SetExpr
from .verdict import UNKNOWN, YES, Budget


@dataclass
class WindowResult:
    L: int
    N: int
    members: list[ExpTuple] = field(default_factory=list)
    unresolved: list[ExpTuple] = field(default_factory=list)
    queries: int = 0
    spent: int = 0

    def __len__(self) -> int:
        return len(self.members)


def window_key(t: ExpTuple, L: int) -> tuple:
    return tuple(t) + (0,) * (L - len(t))


def _finish(res: WindowResult) -> WindowResult:
    res.members.sort(key=lambda t: window_key(t, res.L))
    res.unresolved.sort(key=lambda t: window_key(t, res.L))
    return res


def _query(e: SetExpr, t: ExpTuple, budget: int, res: WindowResult) -> None:
    b = Budget(budget)
    v = semantics.member(e, t, b)
    res.queries += 1
    res.spent += b.spent
    if v is YES:
        res.members.append(t)
    elif v is UNKNOWN:
        res.unresolved.append(t)


def window(e: SetExpr, L: int, N: int, budget: int) -> WindowResult:
    res = WindowResult(L, N)
    start = ((-N, N),) * L

    def search(box):
        box = semantics.refine(e, box)
        if box is None:
            return
        best = None
        for i in range(L):
            lo, hi = iv.get(box, i)
            if lo != hi and (best is None or hi - lo < best[1]):
                best = (i, hi - lo)
        if best is None:
            _query(e, canonical(lo for lo, _ in iv.pad(box, L)), budget, res)
            return
        i = best[0]
        lo, hi = iv.get(box, i)
        for v in range(lo, hi + 1):
            nb = list(iv.pad(box, L))
            nb[i] = (v, v)
            search(iv.trim(nb))

    search(iv.trim(start))
    return _finish(res)


def window_brute(e: SetExpr, L: int, N: int, budget: int) -> WindowResult:
    res = WindowResult(L, N)
    for t in itertools.product(range(-N, N + 1), repeat=L):
        _query(e, canonical(t), budget, res)
    return _finish(res)


@dataclass(frozen=True)
class Comparison:
    verdict: str  # "Equal" | "Differ" | "Unknown"
    witness: ExpTuple | None
    left: WindowResult
    right: WindowResult

    def __str__(self) -> str:
        if self.verdict == "Differ":
            return "Differ(" + "[" + ",".join(map(str, self.witness)) + "])"
        return self.verdict


def eq_on_window(e1: SetExpr, e2: SetExpr, L: int, N: int, budget: int) -> Comparison:
    """Compare two sets on a window.

    A witness is only reported when one side says yes and the other says no;
    the smallest such tuple in window order is chosen.
    """
    w1, w2 = window(e1, L, N, budget), window(e2, L, N, budget)
    yes1, yes2 = set(w1.members), set(w2.members)
    unk1, unk2 = set(w1.unresolved), set(w2.unresolved)
    diff = (yes1 - yes2 - unk2) | (yes2 - yes1 - unk1)
    if diff:
        return Comparison("Differ", min(diff, key=lambda t: window_key(t, L)), w1, w2)
    if unk1 or unk2:
        return Comparison("Unknown", None, w1, w2)
    return Comparison("Equal", None, w1, w2)

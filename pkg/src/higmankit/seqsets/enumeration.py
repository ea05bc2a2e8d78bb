"""Fair enumeration of expression members by stages.

Stage ``s`` of a node is a finite, ordered list that grows with ``s`` and
exhausts the set in the limit: ``Lit`` is complete at stage 0, ``Iota``,
``Diag`` and ``Half`` hold the values with ``|n| <= s``, ``Pattern`` the
parameter points with every ``|p| <= s``, ``Union`` interleaves its
children, ``Meet`` keeps what both children reached, ``Stride`` and
``Prod`` combine child stages whose indices sum to at most ``s``.  The
stream emits each stage's new items in order, so every member shows up
at a finite position.
"""
from __future__ import annotations

from typing import Iterator

from ..codec import ExpTuple
from . import semantics
from .expr import SetExpr


def stage_items(e: SetExpr, s: int, cache: dict | None = None) -> list[ExpTuple]:
    return list(semantics.upto(e, s, {} if cache is None else cache))


def enumerate_set(e: SetExpr, max_stage: int | None = None) -> Iterator[ExpTuple]:
    """Yield members of ``e`` without repeats; ends only for saturating expressions."""
    cache: dict = {}
    sat = semantics.saturation(e)
    s = 0
    while True:
        yield from semantics.new_at(e, s, cache)
        if (sat is not None and s >= sat) or (max_stage is not None and s >= max_stage):
            return
        s += 1


def first_stage(e: SetExpr, t: ExpTuple, limit: int = 1000) -> int | None:
    """The stage at which ``t`` first appears, searching up to ``limit``."""
    cache: dict = {}
    for s in range(limit + 1):
        if t in semantics.new_at(e, s, cache):
            return s
    return None

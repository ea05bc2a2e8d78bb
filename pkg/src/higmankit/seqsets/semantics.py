"""Meaning of every expression node, kept in one dispatch table.

Each node type maps to four functions:

member(e, t, budget)  three-valued membership of a canonical tuple
refine(e, box)        a box containing every member of ``e`` inside ``box``
                      (None when there is none); sound, not necessarily tight
fresh(e, s, cache)    the members produced at stage ``s`` (earlier ones may repeat;
                      the driver drops them), in a fixed order
saturation(e)         a stage after which nothing new is produced, or None

Adopted meanings (f ranges over finitely supported integer sequences):

    Iota        f supported on {0}
    Diag        (n, n)
    Half(c)     (n) with n >= c (or n <= c)
    Union/Meet  union / intersection
    Shift       (0, g0, g1, ...)
    Swap01      g with coordinates 0 and 1 exchanged
    Neg0        g with coordinate 0 negated
    Zero0       members with f(0) = 0
    Proj0       f(0) = 0 and some f[0 := n] is a member
    Stride(m)   every subsequence f(m*i + j), j < m, is a member
    AddC/MulC   coordinate 0 shifted by c / multiplied by c
    Perm(p)     coordinate i of a member moved to p[i]
    Prod(k)     first k coordinates in A, the rest (shifted down) in B
    Add01       coordinate 1 added into coordinate 0

To change the meaning of a node, replace its row in ``TABLE``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from ..codec import ExpTuple, canonical
from . import interval as iv
from .expr import (Add01, AddC, Diag, Half, Iota, Lit, Meet, MulC, Neg0, Pattern, Perm,
                   Prod, Proj0, SetExpr, Shift, Stride, Swap01, Union, Zero0)
from .verdict import NO, UNKNOWN, YES, Budget, Verdict, from_bool, v_and, v_or

MEET_ROUNDS = 64


@dataclass(frozen=True)
class NodeSemantics:
    member: Callable[[SetExpr, ExpTuple, Budget], Verdict]
    refine: Callable[[SetExpr, iv.Box], Optional[iv.Box]]
    fresh: Callable[[SetExpr, int, dict], list]
    saturation: Callable[[SetExpr], Optional[int]]


TABLE: dict[type, NodeSemantics] = {}


# -- drivers -----------------------------------------------------------------

def member(e: SetExpr, t: ExpTuple, budget: Budget) -> Verdict:
    return TABLE[type(e)].member(e, t, budget)


def refine(e: SetExpr, box: iv.Box) -> Optional[iv.Box]:
    r = TABLE[type(e)].refine(e, box)
    return None if r is None else iv.box_meet(r, box)


class _Stages:
    """Per-node enumeration state: new items of each stage and when each appeared."""

    def __init__(self, e: SetExpr):
        self.e = e  # keeps id(e) from being reused while the cache lives
        self.stages: list[list] = []
        self.first: dict = {}


def _state(e: SetExpr, cache: dict) -> _Stages:
    st = cache.get(id(e))
    if st is None:
        st = cache[id(e)] = _Stages(e)
    return st


def new_at(e: SetExpr, s: int, cache: dict) -> list:
    """Items first produced at stage ``s``."""
    st = _state(e, cache)
    while len(st.stages) <= s:
        k = len(st.stages)
        new = []
        for t in TABLE[type(e)].fresh(e, k, cache):
            if t not in st.first:
                st.first[t] = k
                new.append(t)
        st.stages.append(new)
    return st.stages[s]


def upto(e: SetExpr, s: int, cache: dict) -> list:
    """Everything produced by stage ``s``, in stream order."""
    return [t for k in range(s + 1) for t in new_at(e, k, cache)]


def seen_by(e: SetExpr, t: ExpTuple, s: int, cache: dict) -> bool:
    new_at(e, s, cache)
    return cache[id(e)].first.get(t, s + 1) <= s


def saturation(e: SetExpr) -> Optional[int]:
    return TABLE[type(e)].saturation(e)


# -- small helpers -----------------------------------------------------------

def _at(t: ExpTuple, i: int) -> int:
    return t[i] if i < len(t) else 0


def _set0(t: ExpTuple, v: int) -> ExpTuple:
    return canonical((v,) + tuple(t[1:]))


def _signed(s: int) -> Iterator[int]:
    yield 0
    for n in range(1, s + 1):
        yield n
        yield -n


def _zeros_from(box: iv.Box, start: int) -> bool:
    return all(iv.contains(box[i], 0) for i in range(start, len(box)))


def _unary(forward, backward):
    """Row for a node acting by an invertible map on each member."""

    def m(e, t, b):
        g = backward(e, t)
        return NO if g is None else member(e.a, g, b)

    def u(e, s, cache):
        return [canonical(forward(e, g)) for g in new_at(e.a, s, cache)]

    return m, u


def _child_sat(e):
    return saturation(e.a)


def _never(e):
    return None


# -- bases -------------------------------------------------------------------

def _iota_member(e, t, b):
    return from_bool(len(t) <= 1)


def _iota_refine(e, box):
    return (iv.get(box, 0),) if _zeros_from(box, 1) else None


def _iota_fresh(e, s, cache):
    return [(s,), (-s,)] if s else [()]


def _lit_member(e, t, b):
    return from_bool(t in e.items)


def _lit_refine(e, box):
    out = None
    for t in e.items:
        n = max(len(t), len(box))
        if all(iv.contains(iv.get(box, i), _at(t, i)) for i in range(n)):
            pb = iv.point_box(t)
            out = pb if out is None else iv.box_hull(out, pb)
    return out


def _lit_fresh(e, s, cache):
    return e.sorted_items() if s == 0 else []


def _diag_member(e, t, b):
    return from_bool(len(t) <= 2 and _at(t, 0) == _at(t, 1))


def _diag_refine(e, box):
    if not _zeros_from(box, 2):
        return None
    x = iv.meet(iv.get(box, 0), iv.get(box, 1))
    return None if x is None else (x, x)


def _diag_fresh(e, s, cache):
    return [(s, s), (-s, -s)] if s else [()]


def _half_ok(e, n):
    return n >= e.c if e.ge else n <= e.c


def _half_member(e, t, b):
    return from_bool(len(t) <= 1 and _half_ok(e, _at(t, 0)))


def _half_refine(e, box):
    if not _zeros_from(box, 1):
        return None
    x = iv.meet(iv.get(box, 0), (e.c, iv.INF) if e.ge else (-iv.INF, e.c))
    return None if x is None else (x,)


def _half_fresh(e, s, cache):
    return [canonical((n,)) for n in ((s, -s) if s else (0,)) if _half_ok(e, n)]


def _pattern_member(e, t, b):
    return from_bool(e.pattern.contains(t))


def _pattern_refine(e, box):
    P = e.pattern.param_box(box)
    if P is None:
        return None
    out = []
    for j, x in enumerate(e.pattern.eval_box(P)):
        x = iv.meet(x, iv.get(box, j))
        if x is None:
            return None
        out.append(x)
    return tuple(out)


def _pattern_fresh(e, s, cache):
    # parameter vectors on the boundary of the box |p| <= s
    P = e.pattern
    vals = list(_signed(s))
    out = []
    for combo in itertools.product(vals, repeat=len(P.params)):
        if max(map(abs, combo), default=0) != s:
            continue
        env = dict(zip(P.params, combo))
        if P.in_domain(env):
            out.append(P.point(env))
    return out


def _pattern_sat(e):
    P = e.pattern.param_box()
    if P is None:
        return 0
    bound = 0
    for lo, hi in P.values():
        if not iv.is_finite((lo, hi)):
            return None
        bound = max(bound, abs(lo), abs(hi))
    return int(bound)


# -- Higman operations -----------------------------------------------------

def _union_member(e, t, b):
    x = member(e.a, t, b)
    return YES if x is YES else v_or(x, member(e.b, t, b))


def _union_refine(e, box):
    ra, rb = refine(e.a, box), refine(e.b, box)
    if ra is None:
        return rb
    if rb is None:
        return ra
    return iv.box_hull(ra, rb)


def _union_fresh(e, s, cache):
    xs, ys = new_at(e.a, s, cache), new_at(e.b, s, cache)
    mixed = []
    for x, y in itertools.zip_longest(xs, ys):
        if x is not None:
            mixed.append(x)
        if y is not None:
            mixed.append(y)
    return mixed


def _both_sat(e):
    a, b = saturation(e.a), saturation(e.b)
    return None if a is None or b is None else max(a, b)


def _meet_member(e, t, b):
    x = member(e.a, t, b)
    return NO if x is NO else v_and(x, member(e.b, t, b))


def _conjuncts(e: SetExpr) -> list:
    out, stack = [], [e]
    while stack:
        n = stack.pop()
        if isinstance(n, Meet):
            stack += [n.b, n.a]
        else:
            out.append(n)
    return out


def _meet_refine(e, box):
    parts = _conjuncts(e)
    for _ in range(MEET_ROUNDS):
        prev = box
        for c in parts:
            box = refine(c, box)
            if box is None:
                return None
        if box == prev:
            break
    return box


def _meet_fresh(e, s, cache):
    # items both children have produced by stage s, at least one of them just now
    out = [t for t in new_at(e.a, s, cache) if seen_by(e.b, t, s, cache)]
    out += [t for t in new_at(e.b, s, cache) if seen_by(e.a, t, s, cache)]
    return out


def _shift_back(e, t):
    return t[1:] if _at(t, 0) == 0 else None


def _shift_fwd(e, g):
    return (0,) + g if g else ()


def _shift_refine(e, box):
    if not iv.contains(iv.get(box, 0), 0):
        return None
    r = refine(e.a, tuple(box[1:]))
    return None if r is None else (iv.ZERO,) + r


def _swap(e, t):
    return canonical((_at(t, 1), _at(t, 0)) + tuple(t[2:]))


def _swap_refine(e, box):
    r = refine(e.a, _swap_box(box))
    return None if r is None else _swap_box(r)


def _swap_box(box):
    return iv.trim((iv.get(box, 1), iv.get(box, 0)) + tuple(box[2:]))


def _neg0(e, t):
    return _set0(t, -_at(t, 0))


def _neg0_refine(e, box):
    r = refine(e.a, (iv.neg(iv.get(box, 0)),) + tuple(box[1:]))
    return None if r is None else (iv.neg(iv.get(r, 0)),) + tuple(r[1:])


def _zero0_member(e, t, b):
    return NO if _at(t, 0) != 0 else member(e.a, t, b)


def _zero0_refine(e, box):
    if not iv.contains(iv.get(box, 0), 0):
        return None
    return refine(e.a, (iv.ZERO,) + tuple(box[1:]))


def _zero0_fresh(e, s, cache):
    return [t for t in new_at(e.a, s, cache) if _at(t, 0) == 0]


def _witness_order(lo, hi) -> Iterator[int]:
    """Integers of [lo, hi] by increasing distance from 0 (positive first)."""
    if lo > 0:
        yield from itertools.count(lo) if iv.INF == hi else range(lo, hi + 1)
        return
    if hi < 0:
        yield from (-n for n in (itertools.count(-hi) if lo == -iv.INF else range(-hi, -lo + 1)))
        return
    yield 0
    n = 1
    while n <= hi or -n >= lo:
        if n <= hi:
            yield n
        if -n >= lo:
            yield -n
        n += 1


def _proj0_member(e, t, b):
    if _at(t, 0) != 0:
        return NO
    r = refine(e.a, (iv.FULL,) + tuple((v, v) for v in t[1:]))
    if r is None:
        return NO
    lo, hi = iv.get(r, 0)
    bounded = iv.is_finite((lo, hi))
    unresolved = False
    for n in _witness_order(lo, hi):
        if not b.take():
            return UNKNOWN
        x = member(e.a, _set0(t, n), b)
        if x is YES:
            return YES
        unresolved |= x is UNKNOWN
    return UNKNOWN if unresolved or not bounded else NO


def _proj0_refine(e, box):
    if not iv.contains(iv.get(box, 0), 0):
        return None
    r = refine(e.a, (iv.FULL,) + tuple(box[1:]))
    return None if r is None else (iv.ZERO,) + tuple(r[1:])


def _proj0_fresh(e, s, cache):
    return [_set0(g, 0) for g in new_at(e.a, s, cache)]


def _stride_member(e, t, b):
    out = YES
    for j in range(e.m):
        out = v_and(out, member(e.a, canonical(t[j::e.m]), b))
        if out is NO:
            return NO
    return out


def _interleave(parts, m):
    n = max((len(p) for p in parts), default=0)
    out = [0] * (m * n)
    for j, p in enumerate(parts):
        for i, v in enumerate(p):
            out[m * i + j] = v
    return canonical(out)


def _stride_refine(e, box):
    parts = []
    for j in range(e.m):
        r = refine(e.a, tuple(box[j::e.m]))
        if r is None:
            return None
        parts.append(r)
    n = max((len(p) for p in parts), default=0)
    out = [iv.ZERO] * (e.m * n)
    for j, p in enumerate(parts):
        for i, x in enumerate(p):
            out[e.m * i + j] = x
    return iv.trim(out)


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _stride_fresh(e, s, cache):
    # Cantor-style diagonal: child stages (i_0, ..., i_{m-1}) summing to s
    out = []
    for stages in _compositions(s, e.m):
        pools = [new_at(e.a, i, cache) for i in stages]
        for combo in itertools.product(*pools):
            out.append(_interleave(combo, e.m))
    return out


def _stride_sat(e):
    a = saturation(e.a)
    return None if a is None else e.m * a


# -- auxiliary operations ----------------------------------------------------

def _addc_back(e, t):
    return _set0(t, _at(t, 0) - e.c)


def _addc_fwd(e, g):
    return (_at(g, 0) + e.c,) + tuple(g[1:])


def _addc_refine(e, box):
    r = refine(e.a, (iv.shift(iv.get(box, 0), -e.c),) + tuple(box[1:]))
    return None if r is None else (iv.shift(iv.get(r, 0), e.c),) + tuple(r[1:])


def _mulc_back(e, t):
    x = _at(t, 0)
    return None if x % e.c else _set0(t, x // e.c)


def _mulc_fwd(e, g):
    return (_at(g, 0) * e.c,) + tuple(g[1:])


def _mulc_refine(e, box):
    d = iv.div_in(iv.get(box, 0), e.c)
    if d is None:
        return None
    r = refine(e.a, (d,) + tuple(box[1:]))
    return None if r is None else (iv.scale(iv.get(r, 0), e.c),) + tuple(r[1:])


def _perm_back(e, t):
    n = len(e.p)
    return canonical([_at(t, e.p[i]) for i in range(n)] + list(t[n:]))


def _perm_fwd(e, g):
    n = len(e.p)
    out = [0] * max(n, len(g))
    for i in range(len(out)):
        out[e.p[i] if i < n else i] = _at(g, i)
    return out


def _perm_refine(e, box):
    n = len(e.p)
    child = [iv.get(box, e.p[i]) for i in range(n)] + list(box[n:])
    r = refine(e.a, iv.trim(child))
    if r is None:
        return None
    out = [iv.ZERO] * max(n, len(r))
    for i in range(len(out)):
        out[e.p[i] if i < n else i] = iv.get(r, i)
    return iv.trim(out)


def _prod_member(e, t, b):
    x = member(e.a, canonical(t[:e.k]), b)
    return NO if x is NO else v_and(x, member(e.b, tuple(t[e.k:]), b))


def _prod_refine(e, box):
    ra = refine(e.a, iv.trim(box[:e.k]))
    if ra is None:
        return None
    rb = refine(e.b, tuple(box[e.k:]))
    if rb is None:
        return None
    return iv.trim(iv.pad(ra, e.k) + rb)


def _prod_fresh(e, s, cache):
    out = []
    for i in range(s + 1):
        heads = [a for a in new_at(e.a, i, cache) if len(a) <= e.k]
        if not heads:
            continue
        tails = new_at(e.b, s - i, cache)
        for a in heads:
            for t in tails:
                out.append(canonical(a + (0,) * (e.k - len(a)) + t))
    return out


def _prod_sat(e):
    a, b = saturation(e.a), saturation(e.b)
    return None if a is None or b is None else a + b


def _add01_back(e, t):
    return _set0(t, _at(t, 0) - _at(t, 1))


def _add01_fwd(e, g):
    return (_at(g, 0) + _at(g, 1),) + tuple(g[1:])


def _add01_refine(e, box):
    # members are (g0 + g1, g1, ...) for g in e.a, so f1 = f0 - g0 as well
    x0, x1, rest = iv.get(box, 0), iv.get(box, 1), tuple(box[2:])
    for _ in range(4):
        r = refine(e.a, iv.trim((iv.sub(x0, x1), x1) + rest))
        if r is None:
            return None
        g0 = iv.get(r, 0)
        y1 = iv.meet(x1, iv.get(r, 1))
        y1 = y1 and iv.meet(y1, iv.sub(x0, g0))
        y0 = y1 and iv.meet(x0, iv.add(g0, y1))
        if y0 is None:
            return None
        new_rest = tuple(r[2:])
        if (y0, y1, new_rest) == (x0, x1, rest):
            break
        x0, x1, rest = y0, y1, new_rest
    return iv.trim((x0, x1) + rest)


def _register():
    simple = {
        Shift: (_shift_fwd, _shift_back, _shift_refine),
        Swap01: (_swap, _swap, _swap_refine),
        Neg0: (_neg0, _neg0, _neg0_refine),
        AddC: (_addc_fwd, _addc_back, _addc_refine),
        MulC: (_mulc_fwd, _mulc_back, _mulc_refine),
        Perm: (_perm_fwd, _perm_back, _perm_refine),
        Add01: (_add01_fwd, _add01_back, _add01_refine),
    }
    for cls, (fwd, back, ref) in simple.items():
        m, u = _unary(fwd, back)
        TABLE[cls] = NodeSemantics(m, ref, u, _child_sat)
    TABLE[Iota] = NodeSemantics(_iota_member, _iota_refine, _iota_fresh, _never)
    TABLE[Lit] = NodeSemantics(_lit_member, _lit_refine, _lit_fresh, lambda e: 0)
    TABLE[Diag] = NodeSemantics(_diag_member, _diag_refine, _diag_fresh, _never)
    TABLE[Half] = NodeSemantics(_half_member, _half_refine, _half_fresh, _never)
    TABLE[Pattern] = NodeSemantics(_pattern_member, _pattern_refine, _pattern_fresh, _pattern_sat)
    TABLE[Union] = NodeSemantics(_union_member, _union_refine, _union_fresh, _both_sat)
    TABLE[Meet] = NodeSemantics(_meet_member, _meet_refine, _meet_fresh, _both_sat)
    TABLE[Zero0] = NodeSemantics(_zero0_member, _zero0_refine, _zero0_fresh, _child_sat)
    TABLE[Proj0] = NodeSemantics(_proj0_member, _proj0_refine, _proj0_fresh, _child_sat)
    TABLE[Stride] = NodeSemantics(_stride_member, _stride_refine, _stride_fresh, _stride_sat)
    TABLE[Prod] = NodeSemantics(_prod_member, _prod_refine, _prod_fresh, _prod_sat)


_register()

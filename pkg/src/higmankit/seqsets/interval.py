"""Closed integer intervals with optional infinite ends, and boxes of them.

An interval is ``(lo, hi)`` with ints or ``-INF``/``INF``.  A box is a tuple
of intervals, one per coordinate; coordinates past the end are pinned to 0.
Empty results are ``None``.
"""
from __future__ import annotations

import math
from typing import Iterable, Optional

INF = math.inf
FULL = (-INF, INF)
ZERO = (0, 0)

Interval = tuple
Box = tuple


def meet(a: Interval, b: Interval) -> Optional[Interval]:
    lo = max(a[0], b[0])
    hi = min(a[1], b[1])
    return None if lo > hi else (lo, hi)


def hull(a: Interval, b: Interval) -> Interval:
    return (min(a[0], b[0]), max(a[1], b[1]))


def add(a: Interval, b: Interval) -> Interval:
    return (a[0] + b[0], a[1] + b[1])


def sub(a: Interval, b: Interval) -> Interval:
    return (a[0] - b[1], a[1] - b[0])


def neg(a: Interval) -> Interval:
    return (-a[1], -a[0])


def shift(a: Interval, c: int) -> Interval:
    return (a[0] + c, a[1] + c)


def scale(a: Interval, c: int) -> Interval:
    if c == 0:
        return ZERO
    lo, hi = a[0] * c, a[1] * c
    return (lo, hi) if c > 0 else (hi, lo)


def _ceil_div(x, c: int):
    if math.isinf(x):
        return x if c > 0 else -x
    return -((-x) // c)


def _floor_div(x, c: int):
    if math.isinf(x):
        return x if c > 0 else -x
    return x // c


def div_in(a: Interval, c: int) -> Optional[Interval]:
    """Integers ``x`` with ``c*x`` in ``a``."""
    if c < 0:
        a, c = neg(a), -c
    lo, hi = _ceil_div(a[0], c), _floor_div(a[1], c)
    return None if lo > hi else (lo, hi)


def contains(a: Interval, v: int) -> bool:
    return a[0] <= v <= a[1]


def is_point(a: Interval) -> bool:
    return a[0] == a[1]


def is_finite(a: Interval) -> bool:
    return not (math.isinf(a[0]) or math.isinf(a[1]))


def get(box: Box, i: int) -> Interval:
    return box[i] if i < len(box) else ZERO


def pad(box: Box, n: int) -> Box:
    return tuple(box) + (ZERO,) * (n - len(box)) if len(box) < n else tuple(box)


def trim(box: Iterable[Interval]) -> Box:
    b = list(box)
    while b and b[-1] == ZERO:
        b.pop()
    return tuple(b)


def box_meet(a: Box, b: Box) -> Optional[Box]:
    if a == b:
        return trim(a)
    la, lb = len(a), len(b)
    out = []
    for i in range(max(la, lb)):
        x = a[i] if i < la else ZERO
        y = b[i] if i < lb else ZERO
        lo = x[0] if x[0] > y[0] else y[0]
        hi = x[1] if x[1] < y[1] else y[1]
        if lo > hi:
            return None
        out.append((lo, hi))
    return trim(out)


def box_hull(a: Box, b: Box) -> Box:
    n = max(len(a), len(b))
    return trim(hull(get(a, i), get(b, i)) for i in range(n))


def point_box(t: Iterable[int]) -> Box:
    return trim((v, v) for v in t)

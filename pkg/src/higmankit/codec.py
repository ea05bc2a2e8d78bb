"""Coding of {b,c}-words as integer tuples.

``b^n0 c^n1 b^n2 ... c^n(2m+1)`` is coded as ``(n0, n1, ..., n(2m+1))``.
Only the first and last entries may vanish.  Tuples are kept canonical:
trailing zeros are stripped, so the identity codes as ``()``.
"""
from __future__ import annotations

import re
from typing import Iterable

from .errors import AlphabetMismatch, InvalidCoding, ParseError
from .freewords import BC, Word, reduce_word

ExpTuple = tuple[int, ...]

_LETTERS = ("b", "c")


def canonical(t: Iterable[int]) -> ExpTuple:
    t = list(t)
    while t and t[-1] == 0:
        t.pop()
    return tuple(t)


def valid_coding(t: Iterable[int]) -> bool:
    t = canonical(t)
    n = len(t) + len(t) % 2
    return all(x != 0 for x in t[1:n - 1])


def encode(w: Word) -> ExpTuple:
    if w.alphabet != BC:
        raise AlphabetMismatch(f"encode needs alphabet {BC}, got {w.alphabet}")
    out: list[int] = []
    for g, e in w.syllables:
        if _LETTERS[len(out) % 2] != g:
            out.append(0)
        out.append(e)
    return canonical(out)


def decode(t: Iterable[int]) -> Word:
    t = canonical(t)
    if not valid_coding(t):
        raise InvalidCoding(f"interior zero in coding {format_tuple(t)}")
    # a valid coding alternates letters with nonzero exponents, so it is already reduced
    return Word(BC, tuple((_LETTERS[i % 2], n) for i, n in enumerate(t) if n))


def decode_lenient(t: Iterable[int]) -> Word:
    """Read any tuple as alternating b/c powers and reduce."""
    return reduce_word(((_LETTERS[i % 2], n) for i, n in enumerate(t)), BC)


def format_tuple(t: Iterable[int]) -> str:
    return "[" + ",".join(str(x) for x in t) + "]"


def parse_tuple(text: str) -> ExpTuple:
    """Parse ``[n0,n1,...]``; the result is canonical."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"tuple must be bracketed: {text!r}", 0, text)
    body = s[1:-1].strip()
    if not body:
        return ()
    out = []
    pos = text.find("[") + 1
    for item in s[1:-1].split(","):
        if not re.fullmatch(r"\s*[+-]?[0-9]+\s*", item):
            raise ParseError(f"bad tuple entry {item.strip()!r}", pos, text)
        out.append(int(item))
        pos += len(item) + 1
    return canonical(out)

"""Free-group words kept as merged syllable lists.

A word is stored as ``((gen, exp), ...)`` with nonzero exponents and no two
adjacent syllables on the same generator, which is the free normal form.
Exponents are Python ints, so ``b^100000`` costs one syllable.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import AlphabetMismatch, ParseError, UnknownGenerator

GEN_NAME = re.compile(r"[a-z]([0-9]+)?")
_TOKEN = re.compile(r"([a-z][0-9]*)(?:\^([+-]?[0-9]+))?")

Syllable = tuple[str, int]


@dataclass(frozen=True)
class Alphabet:
    """A finite list of letters, or an indexed family ``a1, a2, ...``.

    ``size=None`` on an indexed alphabet means countably many generators.
    """

    letters: tuple[str, ...] = ()
    prefix: str | None = None
    size: int | None = None

    @classmethod
    def of(cls, *letters: str) -> Alphabet:
        for g in letters:
            if not GEN_NAME.fullmatch(g):
                raise ValueError(f"invalid generator name {g!r}")
        if len(set(letters)) != len(letters):
            raise ValueError("duplicate generator names")
        return cls(letters=tuple(letters))

    @classmethod
    def indexed(cls, prefix: str = "a", size: int | None = None) -> Alphabet:
        if not re.fullmatch(r"[a-z]", prefix):
            raise ValueError(f"invalid index prefix {prefix!r}")
        if size is not None and size < 0:
            raise ValueError("alphabet size must be >= 0")
        return cls(prefix=prefix, size=size)

    def index(self, name: str) -> int | None:
        """Index of ``name`` in an indexed alphabet, else None."""
        if self.prefix is None or not name.startswith(self.prefix):
            return None
        digits = name[len(self.prefix):]
        if not digits.isdigit() or digits.startswith("0"):
            return None
        i = int(digits)
        if self.size is not None and i > self.size:
            return None
        return i

    def __contains__(self, name: object) -> bool:
        if self.prefix is None:
            return name in self.letters
        return isinstance(name, str) and self.index(name) is not None

    def __str__(self) -> str:
        if self.prefix is not None:
            n = "..." if self.size is None else f"..{self.size}"
            return f"{{{self.prefix}1{n}}}"
        return "{" + ",".join(self.letters) + "}"


BC = Alphabet.of("b", "c")
ABC = Alphabet.of("a", "b", "c")
A_INDEXED = Alphabet.indexed("a")


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        prev = None
        for g, e in self.syllables:
            if g not in self.alphabet:
                raise UnknownGenerator(f"generator {g!r} not in alphabet {self.alphabet}")
            if e == 0:
                raise ValueError("zero exponent in a reduced word")
            if g == prev:
                raise ValueError("adjacent syllables on the same generator")
            prev = g

    @classmethod
    def identity(cls, alphabet: Alphabet) -> Word:
        return cls(alphabet)

    @classmethod
    def gen(cls, alphabet: Alphabet, name: str, exp: int = 1) -> Word:
        return reduce_word([(name, exp)], alphabet)

    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        """Number of syllables."""
        return len(self.syllables)

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def exponent_sum(self, name: str) -> int:
        return sum(e for g, e in self.syllables if g == name)

    def __mul__(self, other: Word) -> Word:
        return mul(self, other)

    def __pow__(self, n: int) -> Word:
        return power(self, n)

    def inverse(self) -> Word:
        return inv(self)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def _push(stack: list[list], g: str, e: int) -> None:
    if e == 0:
        return
    if stack and stack[-1][0] == g:
        e += stack[-1][1]
        if e == 0:
            stack.pop()
        else:
            stack[-1][1] = e
    else:
        stack.append([g, e])


def reduce_word(raw: Iterable[tuple[str, int]], alphabet: Alphabet) -> Word:
    """Freely reduce a raw syllable list.

    Zero exponents are dropped and equal neighbours merged; a merge that
    cancels exposes the next pair, so the stack handles cascades.
    """
    stack: list[list] = []
    for g, e in raw:
        if g not in alphabet:
            raise UnknownGenerator(f"generator {g!r} not in alphabet {alphabet}")
        _push(stack, g, int(e))
    return Word(alphabet, tuple((g, e) for g, e in stack))


def _check_same(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {u.alphabet} vs {v.alphabet}")


def mul(u: Word, v: Word) -> Word:
    _check_same(u, v)
    stack = [list(s) for s in u.syllables]
    for g, e in v.syllables:
        _push(stack, g, e)
    return Word(u.alphabet, tuple((g, e) for g, e in stack))


def inv(w: Word) -> Word:
    return Word(w.alphabet, tuple((g, -e) for g, e in reversed(w.syllables)))


def power(w: Word, n: int) -> Word:
    if n < 0:
        w, n = inv(w), -n
    result = Word(w.alphabet)
    base = w
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse whitespace-separated ``gen`` / ``gen^exp`` tokens; empty text is the identity."""
    raw = []
    for m in re.finditer(r"\S+", text):
        tok = _TOKEN.fullmatch(m.group())
        if tok is None or not GEN_NAME.fullmatch(tok.group(1)):
            raise ParseError(f"bad word token {m.group()!r}", m.start(), text)
        name = tok.group(1)
        if name not in alphabet:
            raise UnknownGenerator(f"generator {name!r} not in alphabet {alphabet}", m.start(), text)
        raw.append((name, int(tok.group(2)) if tok.group(2) is not None else 1))
    return reduce_word(raw, alphabet)


def format_word(w: Word) -> str:
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w.syllables)


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u^-1 v^-1 u v``."""
    return inv(u) * inv(v) * u * v

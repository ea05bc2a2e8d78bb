"""Rewriting presentations on a1, a2, ... into relators on b, c.

Each generator a_i is replaced by a word s(i) on {b, c}; a relator r becomes
r(s(1), s(2), ...).  The default scheme is a_i -> b^-i c b^i.  Whether the
substitution is an embedding is not checked here.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple

from .affine import AffineForm, parse_affine
from .codec import ExpTuple, encode
from .errors import ParseError, SchemeDomainError
from .freewords import BC, Alphabet, Word, format_word, parse_word, power, reduce_word


@dataclass(frozen=True)
class RelatorFamily:
    """Relators ``k -> build(k)`` for ``k >= start``.

    ``template`` keeps the source text when the family came from a
    presentation file (or should be printable as one).
    """

    name: str
    start: int
    build: Callable[[int], Word] = field(compare=False)
    template: str | None = None

    def word(self, k: int) -> Word:
        if k < self.start:
            raise ValueError(f"family {self.name} starts at k={self.start}, got {k}")
        return self.build(k)


@dataclass(frozen=True)
class Presentation:
    gen_count: int | None = None
    relators: tuple[Word, ...] = ()
    families: tuple[RelatorFamily, ...] = ()

    def __post_init__(self):
        for r in self.relators:
            self._check(r, "relator")

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.indexed("a", self.gen_count)

    def _check(self, w: Word, what: str) -> None:
        for g, _ in w.syllables:
            if g not in self.alphabet:
                raise ValueError(f"{what} {format_word(w)!r} uses undeclared generator {g}")

    def family_word(self, fam: RelatorFamily, k: int) -> Word:
        w = fam.word(k)
        self._check(w, f"family {fam.name} at k={k}:")
        return w


@dataclass(frozen=True)
class SubstScheme:
    name: str
    image: Callable[[int], Word] = field(compare=False)

    def __call__(self, i: int) -> Word:
        if i < 1:
            raise SchemeDomainError(f"scheme {self.name} is defined on i >= 1, got {i}")
        w = self.image(i)
        if w.alphabet != BC or w.is_identity():
            raise SchemeDomainError(f"scheme {self.name} gave a bad image for a{i}: {w!r}")
        return w


def _std_image(i: int) -> Word:
    return Word(BC, (("b", -i), ("c", 1), ("b", i)))


def std_scheme() -> SubstScheme:
    """a_i -> b^-i c b^i."""
    return SubstScheme("std", _std_image)


SCHEMES = {"std": std_scheme}


def rewrite_relator(r: Word, scheme: SubstScheme) -> Word:
    raw = []
    for g, e in r.syllables:
        i = r.alphabet.index(g)
        if i is None:
            raise SchemeDomainError(f"generator {g} is not an indexed generator")
        raw.extend(power(scheme(i), e).syllables)
    return reduce_word(raw, BC)


class Rewritten(NamedTuple):
    source: str  # "rel" for explicit relators, else the family name
    k: int  # relator number (1-based) for explicit relators
    word: Word
    code: ExpTuple


def iter_rewritten(p: Presentation, scheme: SubstScheme, kmax: int) -> Iterator[Rewritten]:
    for n, r in enumerate(p.relators, 1):
        w = rewrite_relator(r, scheme)
        yield Rewritten("rel", n, w, encode(w))
    for fam in p.families:
        for k in range(fam.start, kmax + 1):
            w = rewrite_relator(p.family_word(fam, k), scheme)
            yield Rewritten(fam.name, k, w, encode(w))


def rewrite_family(p: Presentation, scheme: SubstScheme, kmax: int) -> list[Rewritten]:
    """Explicit relators first, then families in declaration order with k ascending."""
    return list(iter_rewritten(p, scheme, kmax))


# -- presentation text format ------------------------------------------------

_TEMPLATE_TOKEN = re.compile(
    r"([a-z])(?:([0-9]+)|\{([^}]*)\})(?:\^(?:([+-]?[0-9]+)|\{([^}]*)\}))?"
)


def compile_template(template: str, offset: int = 0) -> Callable[[int], Word]:
    """Turn ``a{k}^{k} a{k-1}^-1`` into a function of k."""
    parts: list[tuple[AffineForm, AffineForm]] = []
    for m in re.finditer(r"\S+", template):
        tok = _TEMPLATE_TOKEN.fullmatch(m.group())
        pos = offset + m.start()
        if tok is None or tok.group(1) != "a":
            raise ParseError(f"bad template token {m.group()!r}", pos)
        letter, idx_lit, idx_expr, exp_lit, exp_expr = tok.groups()
        idx = AffineForm(int(idx_lit)) if idx_lit else parse_affine(idx_expr, ["k"], pos)
        if exp_lit is not None:
            exp = AffineForm(int(exp_lit))
        elif exp_expr is not None:
            exp = parse_affine(exp_expr, ["k"], pos)
        else:
            exp = AffineForm(1)
        parts.append((idx, exp))

    def build(k: int) -> Word:
        raw = []
        for idx, exp in parts:
            i = idx({"k": k})
            if i < 1:
                raise ValueError(f"template index evaluates to {i} at k={k}")
            raw.append((f"a{i}", exp({"k": k})))
        return reduce_word(raw, Alphabet.indexed("a"))

    return build


def parse_presentation(text: str) -> Presentation:
    gen_count: int | None = None
    seen_gens = False
    rel_lines: list[tuple[str, int]] = []
    families = []
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
        if head == "gens":
            if rest == "countable":
                gen_count = None
            elif rest.isdigit():
                gen_count = int(rest)
            else:
                raise ParseError(f"gens expects a count or 'countable', got {rest!r}", col)
            seen_gens = True
        elif head == "rel":
            rel_lines.append((rest, col + body.index(rest) if rest else col))
        elif head == "family":
            m = re.fullmatch(r"([A-Za-z_][\w.]*)\s+from\s+([+-]?[0-9]+)\s*:\s*(.*)", rest)
            if m is None:
                raise ParseError("expected 'family <name> from <k0>: <template>'", col)
            tpos = col + body.index(m.group(3)) if m.group(3) else col
            build = compile_template(m.group(3), tpos)
            families.append(RelatorFamily(m.group(1), int(m.group(2)), build, m.group(3)))
        else:
            raise ParseError(f"unknown directive {head!r}", col)
    if not seen_gens:
        raise ParseError("missing 'gens' line", 0)
    alphabet = Alphabet.indexed("a", gen_count)
    relators = []
    for src, pos in rel_lines:
        try:
            relators.append(parse_word(src, alphabet))
        except ParseError as exc:
            raise ParseError(str(exc).split(" (at")[0], pos + (exc.pos or 0), text) from None
    return Presentation(gen_count, tuple(relators), tuple(families))


def format_presentation(p: Presentation) -> str:
    lines = [f"gens {'countable' if p.gen_count is None else p.gen_count}"]
    lines += [f"rel {format_word(r)}" for r in p.relators]
    for fam in p.families:
        if fam.template is None:
            raise ValueError(f"family {fam.name} has no template and cannot be printed")
        lines.append(f"family {fam.name} from {fam.start}: {fam.template}")
    return "\n".join(lines) + "\n"

"""Concrete group families: presentations, coded relators, pattern sets, exact models.

Shipped families (addressable by name):

    q          rationals, <a1, a2, ... | a_k^k = a_{k-1}, k >= 2>, a_k -> 1/k!
    zn.<n>     free abelian of rank n, commutator relators, a_i -> i-th unit vector
    cpinf.<p>  quasicyclic p-group, <a1, ... | a1^p, a_{k+1}^p = a_k>, a_k -> 1/p^k mod 1

``q.paper`` is the 19-coordinate tuple family published for the rationals,
kept as ground-truth data; ``q.std`` is what the default substitution
scheme produces from the presentation above.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .affine import AffineForm
from .codec import ExpTuple, encode
from .errors import PatternError
from .freewords import ABC, Alphabet, Word, commutator, reduce_word
from .seqsets.expr import Lit, Pattern, SetExpr, Union
from .seqsets.pattern import PatternSet, make_pattern
from .twogen import (Presentation, RelatorFamily, SubstScheme, compile_template,
                     rewrite_relator, std_scheme)

HIGMAN_WORDS_CONVENTION = "v1"

Q_PAPER_FORMS = ("1", "-k", "-1", "-k", "-1", "k", "1", "k", "1", "1",
                 "-1", "1-k", "-1", "-1", "1", "k-1", "1", "k-1", "-1")


@dataclass(frozen=True)
class AbelianModel:
    """Generators a_i sent to vectors over Q (optionally taken mod Z).

    Since the target is abelian, a relator's value is the exponent-weighted
    sum of its generators' values.
    """

    value: Callable[[int], tuple[Fraction, ...]] = field(compare=False)
    dim: int = 1
    mod_one: bool = False
    description: str = ""

    def evaluate(self, w: Word) -> tuple[Fraction, ...]:
        acc = [Fraction(0)] * self.dim
        for g, e in w.syllables:
            v = self.value(w.alphabet.index(g))
            for j in range(self.dim):
                acc[j] += e * v[j]
        if self.mod_one:
            acc = [x % 1 for x in acc]
        return tuple(acc)


@dataclass(frozen=True)
class GroupFamily:
    name: str
    presentation: Presentation
    model: AbelianModel
    pattern_std: PatternSet | None = None
    pattern_paper: PatternSet | None = None

    def std_codes(self, scheme: SubstScheme | None = None) -> list[ExpTuple]:
        """Codes of the explicit (finite) relators under the scheme."""
        scheme = scheme or std_scheme()
        return [encode(rewrite_relator(r, scheme)) for r in self.presentation.relators]

    def std_expr(self) -> SetExpr:
        """The whole coded relator set under the default scheme."""
        parts: list[SetExpr] = []
        codes = self.std_codes()
        if codes or self.pattern_std is None:
            parts.append(Lit(frozenset(codes)))
        if self.pattern_std is not None:
            parts.append(Pattern(self.pattern_std, self.pattern_std.name))
        out = parts[0]
        for p in parts[1:]:
            out = Union(out, p)
        return out


def derive_std_pattern(fam: RelatorFamily, scheme: SubstScheme, name: str,
                       probe: int = 12) -> PatternSet:
    """Fit an affine-in-k pattern to the coded family and check it on ``probe`` values.

    Raises PatternError when the codes are not affine in k (for instance
    when their length changes with k).
    """
    ks = range(fam.start, fam.start + probe)
    codes = [encode(rewrite_relator(fam.word(k), scheme)) for k in ks]
    n = len(codes[0])
    if any(len(c) != n for c in codes):
        raise PatternError(f"family {fam.name}: code length varies with k")
    forms = []
    for j in range(n):
        slope = codes[1][j] - codes[0][j]
        const = codes[0][j] - slope * fam.start
        forms.append(AffineForm.make(const, {"k": slope}))
    for k, c in zip(ks, codes):
        if tuple(f({"k": k}) for f in forms) != c:
            raise PatternError(f"family {fam.name}: codes are not affine in k")
    pivot = next((j for j, f in enumerate(forms) if abs(f.coeff("k")) == 1), None)
    if pivot is None:
        raise PatternError(f"family {fam.name}: no coordinate carries k with coefficient +-1")
    domain = (AffineForm.make(-fam.start, {"k": 1}),)
    return PatternSet(("k",), tuple(forms), (pivot,), domain, name)


@lru_cache(maxsize=None)
def q_paper_pattern() -> PatternSet:
    return make_pattern(Q_PAPER_FORMS, ["k"], [1], ["k>=2"], name="q.paper")


@lru_cache(maxsize=None)
def build_q() -> GroupFamily:
    template = "a{k}^{k} a{k-1}^-1"
    fam = RelatorFamily("q", 2, compile_template(template), template)
    pres = Presentation(None, (), (fam,))
    model = AbelianModel(lambda i: (Fraction(1, math.factorial(i)),), 1, False, "a_k -> 1/k! in (Q,+)")
    std = derive_std_pattern(fam, std_scheme(), "q.std")
    return GroupFamily("q", pres, model, std, q_paper_pattern())


@lru_cache(maxsize=None)
def build_zn(n: int) -> GroupFamily:
    if n < 1:
        raise ValueError("zn needs n >= 1")
    alpha = Alphabet.indexed("a", n)
    gens = [Word.gen(alpha, f"a{i}") for i in range(1, n + 1)]
    rels = tuple(commutator(gens[i], gens[j]) for i in range(n) for j in range(i + 1, n))
    pres = Presentation(n, rels, ())

    def unit(i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(j == i - 1)) for j in range(n))

    return GroupFamily(f"zn.{n}", pres, AbelianModel(unit, n, False, f"a_i -> e_i in Z^{n}"))


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


@lru_cache(maxsize=None)
def build_quasicyclic(p: int) -> GroupFamily:
    if not is_prime(p):
        raise ValueError(f"quasicyclic family needs a prime p, got {p}")
    template = f"a{{k+1}}^{p} a{{k}}^-1"
    fam = RelatorFamily(f"cpinf.{p}", 1, compile_template(template), template)
    first = reduce_word([("a1", p)], Alphabet.indexed("a"))
    pres = Presentation(None, (first,), (fam,))
    model = AbelianModel(lambda i: (Fraction(1, p ** i),), 1, True, f"a_k -> 1/{p}^k in Q/Z")
    std = derive_std_pattern(fam, std_scheme(), f"cpinf.{p}")
    return GroupFamily(f"cpinf.{p}", pres, model, std)


def lookup_family(name: str) -> GroupFamily:
    base = name.split(".")[0] if name.startswith("q") else name
    if base == "q":
        return build_q()
    m = re.fullmatch(r"(zn|cpinf)\.([0-9]+)", name)
    if m is None:
        raise KeyError(f"unknown catalog family {name!r} (try q, zn.<n>, cpinf.<p>)")
    n = int(m.group(2))
    return build_zn(n) if m.group(1) == "zn" else build_quasicyclic(n)


def lookup_pattern(name: str) -> PatternSet | None:
    if name == "q.paper":
        return q_paper_pattern()
    if name == "q.std":
        return build_q().pattern_std
    if re.fullmatch(r"cpinf\.[0-9]+", name):
        return lookup_family(name).pattern_std
    return None


def lookup_expr(name: str) -> SetExpr | None:
    """Catalog name to a set expression, or None if ``name`` is not a catalog name."""
    if name == "q.paper":
        return Pattern(q_paper_pattern(), "q.paper")
    if name in ("q", "q.std"):
        return build_q().std_expr()
    if re.fullmatch(r"(zn|cpinf)\.[0-9]+", name):
        return lookup_family(name).std_expr()
    return None


# -- model checks ------------------------------------------------------------

@dataclass
class ModelReport:
    family: str
    checked: int = 0
    failures: list = field(default_factory=list)  # (label, value)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        passed = self.checked - len(self.failures)
        return f"{'OK' if self.ok else 'FAIL'} {passed}/{self.checked}"


def model_check(fam: GroupFamily, kmax: int) -> ModelReport:
    rep = ModelReport(fam.name)
    pres = fam.presentation
    items = [(f"rel {n}", r) for n, r in enumerate(pres.relators, 1)]
    for f in pres.families:
        items += [(f"{f.name} k={k}", pres.family_word(f, k)) for k in range(f.start, kmax + 1)]
    for label, w in items:
        rep.checked += 1
        v = fam.model.evaluate(w)
        if any(v):
            rep.failures.append((label, v))
    return rep


# -- elements of F3 ----------------------------------------------------------

def higman_words(t: ExpTuple) -> tuple[Word, Word]:
    """``b_f`` and ``a_f`` in F(a, b, c) under the fixed convention v1.

    b_f is the product over the support of t, ascending, of c^-i b^t(i) c^i;
    a_f = b_f^-1 a b_f.
    """
    raw = []
    for i, n in enumerate(t):
        if n:
            raw += [("c", -i), ("b", n), ("c", i)]
    b_f = reduce_word(raw, ABC)
    a_f = b_f.inverse() * Word.gen(ABC, "a") * b_f
    return b_f, a_f

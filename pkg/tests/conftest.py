"""Shared strategies and independent oracles."""
from __future__ import annotations

import random

import pytest
from hypothesis import settings, strategies as st

from higmankit.freewords import BC, Alphabet, Word, reduce_word

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

# the worked-out tuples for the rationals' published family at k = 2 and k = 5
F2 = (1, -2, -1, -2, -1, 2, 1, 2, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1)
F5 = (1, -5, -1, -5, -1, 5, 1, 5, 1, 1, -1, -4, -1, -1, 1, 4, 1, 4, -1)


def expand(w: Word) -> list[tuple[str, int]]:
    """Letter string of a word, one (gen, +-1) per letter."""
    out = []
    for g, e in w.syllables:
        out += [(g, 1 if e > 0 else -1)] * abs(e)
    return out


def naive_reduce(letters, alphabet: Alphabet) -> Word:
    """Letter-by-letter cancellation, then merge; independent of reduce_word."""
    stack: list[tuple[str, int]] = []
    for g, e in letters:
        for _ in range(abs(e)):
            s = 1 if e > 0 else -1
            if stack and stack[-1] == (g, -s):
                stack.pop()
            else:
                stack.append((g, s))
    merged: list[tuple[str, int]] = []
    for g, s in stack:
        if merged and merged[-1][0] == g:
            merged[-1] = (g, merged[-1][1] + s)
        else:
            merged.append((g, s))
    return Word(alphabet, tuple(merged))


def random_word(rng: random.Random, alphabet_letters=("b", "c"), max_syl=10, max_exp=9,
                alphabet: Alphabet = BC) -> Word:
    raw = [(rng.choice(alphabet_letters), rng.choice([-1, 1]) * rng.randint(1, max_exp))
           for _ in range(rng.randint(0, max_syl))]
    return reduce_word(raw, alphabet)


@st.composite
def words(draw, letters=("b", "c"), alphabet: Alphabet = BC, max_syl=10, max_exp=9):
    raw = draw(st.lists(st.tuples(st.sampled_from(letters),
                                  st.integers(-max_exp, max_exp).filter(bool)),
                        max_size=max_syl))
    return reduce_word(raw, alphabet)


@pytest.fixture
def rng():
    return random.Random(20240611)


# -- acceptance report -------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion and echo it to the terminal."""
    reporter = request.config.pluginmanager.getplugin("terminalreporter")

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        if reporter is not None:
            reporter.write_line("")
            reporter.write_line(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

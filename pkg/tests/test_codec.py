import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import F2, random_word, words
from higmankit.codec import (canonical, decode, decode_lenient, encode, format_tuple,
                             parse_tuple, valid_coding)
from higmankit.errors import AlphabetMismatch, InvalidCoding, ParseError
from higmankit.freewords import ABC, BC, Word, parse_word


def W(text):
    return parse_word(text, BC)


def oracle_decode(t):
    """Alternating b/c syllables straight from the definition, no reduction needed."""
    syl = [("bc"[i % 2], n) for i, n in enumerate(t) if n]
    return Word(BC, tuple(syl))


def test_encode_examples():
    assert encode(W("b^-1 c^-1 b c")) == (-1, -1, 1, 1)
    assert encode(Word.identity(BC)) == ()
    assert encode(W("c^3 b^-2")) == (0, 3, -2)


def test_encode_wrong_alphabet():
    with pytest.raises(AlphabetMismatch):
        encode(parse_word("b c", ABC))


def test_decode_examples():
    assert decode((-1, -1, 1, 1)) == W("b^-1 c^-1 b c")
    assert decode(()).is_identity()
    f2 = decode(F2)
    assert f2 == W("b c^-2 b^-1 c^-2 b^-1 c^2 b c^2 b c b^-1 c^-1 b^-1 c^-1 b c b c b^-1")
    assert encode(f2) == F2


def test_decode_rejects_interior_zero():
    with pytest.raises(InvalidCoding):
        decode((1, 0, 2, 1))


def test_lenient_examples():
    assert decode_lenient((0, 0, 5, 0)) == W("b^5")
    assert decode_lenient(()).is_identity()
    assert decode_lenient((-1, -1, 1, 1)) == W("b^-1 c^-1 b c")
    assert decode_lenient((0, 0)).is_identity()


def test_valid_coding_examples():
    assert valid_coding((-1, -1, 1, 1))
    assert not valid_coding((1, 0, 2, 1))
    assert valid_coding((0, 1))
    assert decode((0, 1)) == W("c")
    # odd length: the implicit last c-exponent is zero, so every written entry after 0 is interior
    assert valid_coding((1, 2, 3))
    assert not valid_coding((1, 0, 3))


def test_canonical_strips_trailing_zeros():
    assert canonical((1, 0, 0)) == (1,)
    assert canonical((0, 0)) == ()


def test_tuple_text():
    assert format_tuple((-1, -1, 1, 1)) == "[-1,-1,1,1]"
    assert parse_tuple("[-1, -1, 1, 1]") == (-1, -1, 1, 1)
    assert parse_tuple("[]") == ()
    assert parse_tuple("[3,0]") == (3,)
    with pytest.raises(ParseError):
        parse_tuple("1,2")
    with pytest.raises(ParseError) as exc:
        parse_tuple("[1,x]")
    assert exc.value.pos == 3


def test_round_trip_a_random_words():
    rng = random.Random(11)
    for _ in range(1000):
        w = random_word(rng, max_syl=20)
        assert decode(encode(w)) == w


def test_round_trip_b_exhaustive_short():
    # every tuple, canonical or not, up to length 6; length 8 runs in the acceptance suite
    checked = 0
    for n in range(7):
        for t in itertools.product(range(-4, 5), repeat=n):
            if not valid_coding(t):
                continue
            checked += 1
            w = decode(t)
            assert encode(w) == canonical(t)
            assert w == oracle_decode(canonical(t))
    assert checked > 300000


@given(st.lists(st.integers(-4, 4), max_size=10))
def test_lenient_agrees_on_valid(t):
    if valid_coding(t):
        assert decode_lenient(t) == decode(t)
    else:
        with pytest.raises(InvalidCoding):
            decode(t)


@given(words(max_syl=20))
def test_encode_is_valid_and_canonical(w):
    t = encode(w)
    assert valid_coding(t)
    assert t == canonical(t)

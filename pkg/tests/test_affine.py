import pytest
from hypothesis import given, strategies as st

from higmankit.affine import AffineForm, parse_affine
from higmankit.errors import ParseError


@pytest.mark.parametrize("text, const, coeffs", [
    ("k", 0, {"k": 1}),
    ("-k+1", 1, {"k": -1}),
    ("1-k", 1, {"k": -1}),
    ("-(k-1)", 1, {"k": -1}),
    ("2k + 3", 3, {"k": 2}),
    ("2*(p - q) + q", 0, {"p": 2, "q": -1}),
    ("k - k", 0, {}),
    ("7", 7, {}),
])
def test_parse(text, const, coeffs):
    assert parse_affine(text) == AffineForm.make(const, coeffs)


@pytest.mark.parametrize("text", ["k*k", "(k", "k +", "2 3", "k^2"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_affine(text)


def test_unknown_name():
    with pytest.raises(ParseError):
        parse_affine("j", ["k"])


forms = st.builds(lambda c, a, b: AffineForm.make(c, {"p": a, "q": b}),
                  st.integers(-20, 20), st.integers(-5, 5), st.integers(-5, 5))


@given(forms, st.integers(-50, 50), st.integers(-50, 50))
def test_format_round_trip_and_eval(f, p, q):
    g = parse_affine(f.format(["p", "q"]), ["p", "q"])
    assert g == f
    assert f({"p": p, "q": q}) == f.const + f.coeff("p") * p + f.coeff("q") * q


@given(forms, forms, st.integers(-4, 4))
def test_linear_ops(f, g, c):
    env = {"p": 3, "q": -2}
    assert (f + g)(env) == f(env) + g(env)
    assert (f - g)(env) == f(env) - g(env)
    assert f.scale(c)(env) == c * f(env)

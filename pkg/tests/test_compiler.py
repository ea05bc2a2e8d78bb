import pytest

from higmankit import catalog
from higmankit.compiler import (any_set, compile_pattern, link, sum_relation, verify_compilation)
from higmankit.errors import UnsupportedPattern
from higmankit.seqsets import (NODE_TYPES, Diag, Half, Iota, Lit, Meet, Neg0, Perm, Prod, expr_stats,
                               format_expr, make_pattern, window)
from higmankit.seqsets.pattern import PatternSet
from higmankit.affine import AffineForm

from oracles import oracle_window, synthetic_patterns


def test_arity_one_half():
    P = make_pattern(["p"], ["p"], [0], ["p>=3"])
    assert compile_pattern(P) == Half(3)


def test_opposites_link():
    P = make_pattern(["p", "-p"], ["p"], [0])
    e = compile_pattern(P)
    assert e == Meet(Prod(1, Iota(), Iota()), Perm(Neg0(Diag()), (1, 0)))
    assert verify_compilation(P, e, 2, 6, 100).verdict == "Equal"


def test_building_blocks_against_oracle():
    assert window(link(3, 1, -2), 2, 6, 10).members == oracle_window(link(3, 1, -2), 2, 6)
    assert window(sum_relation(1), 3, 3, 10).members == oracle_window(sum_relation(1), 3, 3)
    assert (3, 1, 1) in window(sum_relation(1), 3, 3, 10).members
    assert window(any_set(3), 3, 1, 10).members == oracle_window(any_set(3), 3, 1)


def test_bq_compiles_and_verifies():
    P = catalog.q_paper_pattern()
    e = compile_pattern(P)
    rep = verify_compilation(P, e, 19, 10, 10000)
    assert rep.verdict == "Equal"
    assert rep.pattern_window == rep.expr_window == 9
    assert rep.unresolved == 0
    st = expr_stats(e)
    assert "Pattern" not in st.histogram
    assert (st.nodes, st.depth) == (734, 38)


def test_against_empty_lit():
    P = make_pattern(["p", "2"], ["p"], [0], ["p>=0", "p<=1"])
    rep = verify_compilation(P, Lit(frozenset()), 2, 3, 100)
    assert rep.verdict == "Differ" and rep.witness == (0, 2)
    assert str(rep) == "Differ([0,2])"


def test_empty_domain():
    P = make_pattern(["p"], ["p"], [0], ["p>=3", "p<=1"])
    assert verify_compilation(P, compile_pattern(P), 1, 5, 100).verdict == "Equal"
    Q = PatternSet(("p",), (AffineForm.make(0, {"p": 1}),), (0,), (AffineForm(-1),))
    assert compile_pattern(Q) == Lit(frozenset())


def test_constant_pattern():
    P = make_pattern(["4", "0", "-1"], [], [])
    e = compile_pattern(P)
    assert window(e, 3, 4, 10).members == [(4, 0, -1)]


def test_multi_parameter_pattern_uses_scratch():
    P = make_pattern(["p", "q", "p+q+1", "2*p-q"], ["p", "q"], [0, 1], ["p+q<=3"])
    e = compile_pattern(P)
    assert "Proj0" in expr_stats(e).histogram
    rep = verify_compilation(P, e, 4, 8, 10000)
    assert rep.verdict == "Equal" and rep.unresolved == 0


def test_unsupported():
    bad = PatternSet.__new__(PatternSet)
    object.__setattr__(bad, "params", ("p",))
    object.__setattr__(bad, "forms", (AffineForm.make(0, {"p": 2}),))
    object.__setattr__(bad, "pivots", (0,))
    object.__setattr__(bad, "domain", ())
    object.__setattr__(bad, "name", None)
    with pytest.raises(UnsupportedPattern):
        compile_pattern(bad)


def test_deterministic():
    P = catalog.q_paper_pattern()
    assert format_expr(compile_pattern(P)) == format_expr(compile_pattern(P))


@pytest.mark.parametrize("P", synthetic_patterns(), ids=lambda P: P.name)
def test_synthetic_patterns_verify(P):
    e = compile_pattern(P)
    assert all(k in NODE_TYPES_NAMES for k in expr_stats(e).histogram)
    assert "Pattern" not in expr_stats(e).histogram
    rep = verify_compilation(P, e, P.arity, 8, 10000)
    assert rep.verdict == "Equal", (P.format(), rep)


NODE_TYPES_NAMES = {cls.__name__ for cls in NODE_TYPES}

"""Acceptance criteria 1-9, each at its stated tolerance.

Every test records one ``criterion N: PASS|FAIL`` line (shown in the
terminal and collected in the summary section at the end of the run) and
then asserts, so a failing criterion also fails the suite.
"""
import itertools
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from conftest import F2, random_word
from oracles import brute_pattern_member, synthetic_patterns
from higmankit import catalog
from higmankit.codec import decode, encode, valid_coding
from higmankit.compiler import compile_pattern, verify_compilation
from higmankit.freewords import BC, parse_word
from higmankit.seqsets import (Diag, Half, Iota, Lit, Meet, Neg0, Pattern, Proj0, Shift, Stride,
                               Swap01, Union, Zero0, enumerate_set, eq_on_window, make_pattern,
                               window)
from higmankit.twogen import Presentation, RelatorFamily, compile_template, rewrite_relator, std_scheme


def closed_form(k):
    return (1, -k, -1, -k, -1, k, 1, k, 1, 1, -1, 1 - k, -1, -1, 1, k - 1, 1, k - 1, -1)


# 1 -------------------------------------------------------------------------

def test_criterion_1_reference_vector(acceptance):
    w = parse_word("b^-1 c^-1 b c", BC)
    best = float("inf")
    ok = True
    for _ in range(5):
        t0 = time.perf_counter()
        t = encode(w)
        back = decode(t)
        best = min(best, time.perf_counter() - t0)
        ok &= t == (-1, -1, 1, 1) and back == w
    ok &= best < 1e-3
    acceptance(1, ok, f"encode/decode of the commutator: {best * 1e6:.0f} us (bound 1 ms)")
    assert ok


# 2 -------------------------------------------------------------------------

def test_criterion_2_closed_form_family(acceptance):
    P = catalog.q_paper_pattern()
    t0 = time.perf_counter()
    problems = []
    perturbations = 0
    for k in range(2, 11):
        f = closed_form(k)
        if not valid_coding(f):
            problems.append(f"k={k} invalid coding")
        if encode(decode(f)) != f:
            problems.append(f"k={k} round trip")
        if not P.contains(f):
            problems.append(f"k={k} not accepted")
        for j in range(19):
            for d in (-1, 1):
                g = list(f)
                g[j] += d
                perturbations += 1
                if P.contains(g):
                    problems.append(f"k={k} j={j} d={d} accepted")
                if brute_pattern_member(P, g):
                    problems.append(f"k={k} j={j} d={d} is another family member")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 1.0 and perturbations == 9 * 38
    acceptance(2, ok, f"k=2..10, {perturbations} perturbations all rejected, "
                      f"{len(problems)} problems, {elapsed:.2f} s (bound 1 s)")
    assert ok, problems[:5]


# 3 -------------------------------------------------------------------------

def _canonical_valid(n, r=4):
    """Canonical valid codings of length exactly n with entries in [-r, r]."""
    if n == 0:
        yield ()
        return
    nz = [v for v in range(-r, r + 1) if v]
    for first in (range(-r, r + 1) if n > 1 else nz):
        for rest in itertools.product(nz, repeat=n - 1):
            yield (first,) + rest


def test_criterion_3_codec_round_trips(acceptance):
    rng = random.Random(2024)
    fails_a = 0
    for _ in range(1000):
        w = random_word(rng, max_syl=20)
        fails_a += decode(encode(w)) != w
    fails_b = 0
    checked = 0
    t0 = time.perf_counter()
    for n in range(9):
        for t in _canonical_valid(n):
            checked += 1
            if encode(decode(t)) != t:
                fails_b += 1
    # a tuple with trailing zeros decodes through its canonical form; spot-check the padding
    for t in itertools.islice(_canonical_valid(6), 0, None, 997):
        padded = t + (0, 0)
        checked += 1
        fails_b += encode(decode(padded)) != t
    elapsed = time.perf_counter() - t0
    ok = fails_a == 0 and fails_b == 0
    acceptance(3, ok, f"1000 random words: {fails_a} failures; {checked} codings of length <= 8, "
                      f"|entry| <= 4: {fails_b} failures ({elapsed:.0f} s)")
    assert ok


# 4 -------------------------------------------------------------------------

def _operands():
    rng = random.Random(4)
    lits = [Lit(frozenset(tuple(rng.randint(-3, 3) for _ in range(rng.randint(0, 4)))
                          for _ in range(rng.randint(1, 6)))) for _ in range(3)]
    pats = [
        Pattern(make_pattern(["p", "-p"], ["p"], [0], name="opp"), "opp"),
        Pattern(make_pattern(["p"], ["p"], [0], ["p>=-1", "p<=2"], name="btw"), "btw"),
        Pattern(make_pattern(["p", "1", "q", "p-q"], ["p", "q"], [0, 2], ["p>=0"], name="two"), "two"),
        Pattern(make_pattern(["0", "k", "k-1"], ["k"], [1], ["k>=1"], name="tri"), "tri"),
    ]
    return lits + pats


def test_criterion_4_algebra_identities(acceptance):
    L, N = 6, 4
    t0 = time.perf_counter()
    bad = []

    def equal(x, y, what):
        c = eq_on_window(x, y, L, N, 1000)
        if c.verdict != "Equal":
            bad.append((what, str(c)))

    ops = _operands()
    for a in ops + [Iota(), Diag(), Half(-1), Shift(Diag())]:
        equal(Swap01(Swap01(a)), a, "swap01 twice")
        equal(Neg0(Neg0(a)), a, "neg0 twice")
        equal(Stride(1, a), a, "stride 1")
        equal(Proj0(Proj0(a)), Proj0(a), "proj0 idempotent")
        if not set(window(Zero0(a), L, N, 1000).members) <= set(window(a, L, N, 1000).members):
            bad.append(("zero0 subset", a))
    for a, b in itertools.permutations(ops, 2):
        equal(Union(a, b), Union(b, a), "union commutes")
        equal(Meet(a, b), Meet(b, a), "meet commutes")
    for a, b, c in itertools.permutations(ops, 3):
        equal(Union(Union(a, b), c), Union(a, Union(b, c)), "union associates")
        equal(Meet(Meet(a, b), c), Meet(a, Meet(b, c)), "meet associates")
        equal(Meet(a, Union(b, c)), Union(Meet(a, b), Meet(a, c)), "meet over union")
        equal(Union(a, Meet(b, c)), Meet(Union(a, b), Union(a, c)), "union over meet")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    acceptance(4, ok, f"identities on window L={L}, N={N}: {len(bad)} counterexamples, "
                      f"{elapsed:.1f} s (bound 30 s)")
    assert ok, bad[:5]


# 5 -------------------------------------------------------------------------

def test_criterion_5_compiler_equivalence(acceptance):
    t0 = time.perf_counter()
    P = catalog.q_paper_pattern()
    rep = verify_compilation(P, compile_pattern(P), 19, 10, 10000)
    verdicts = [rep.verdict]
    for S in synthetic_patterns():
        verdicts.append(verify_compilation(S, compile_pattern(S), S.arity, 8, 10000).verdict)
    elapsed = time.perf_counter() - t0
    ok = all(v == "Equal" for v in verdicts) and len(verdicts) == 21 and elapsed < 300
    acceptance(5, ok, f"B_Q at L=19, N=10: {rep.verdict} ({rep.pattern_window} members); "
                      f"synthetic: {verdicts[1:].count('Equal')}/20 Equal; {elapsed:.1f} s (bound 300 s)")
    assert ok


# 6 -------------------------------------------------------------------------

def test_criterion_6_fairness(acceptance):
    e = Union(Iota(), Shift(Iota()))
    prefix = list(itertools.islice(enumerate_set(e), 10000))
    pos = {}
    for i, t in enumerate(prefix):
        pos.setdefault(t, i)
    wanted = {(n,) if n else () for n in range(-5, 6)} | {(0, n) for n in range(-5, 6) if n}
    missing = wanted - set(pos)
    ok = not missing
    last = max(pos.get(t, -1) for t in wanted)
    acceptance(6, ok, f"{len(wanted)} members with |values| <= 5; last one at position {last} "
                      f"(bound 10000); missing {len(missing)}")
    assert ok


# 7 -------------------------------------------------------------------------

def test_criterion_7_pipeline(acceptance):
    s = std_scheme()
    from higmankit.freewords import A_INDEXED

    mismatches = []
    for k in range(2, 51):
        r = parse_word(f"a{k}^{k} a{k - 1}^-1", A_INDEXED)
        code = encode(rewrite_relator(r, s))
        if code != (-k, k, 1, -1, k - 1):
            mismatches.append(k)
    P = catalog.build_q().pattern_std
    rep = verify_compilation(P, compile_pattern(P), 5, 10, 10000)
    ok = not mismatches and rep.verdict == "Equal"
    acceptance(7, ok, f"k=2..50 codes match (-k,k,1,-1,k-1): {49 - len(mismatches)}/49; "
                      f"compiled pattern on L=5, N=10: {rep.verdict}")
    assert ok


# 8 -------------------------------------------------------------------------

def test_criterion_8_models(acceptance):
    q = catalog.model_check(catalog.build_q(), 50)
    c2 = catalog.model_check(catalog.build_quasicyclic(2), 20)
    c3 = catalog.model_check(catalog.build_quasicyclic(3), 20)
    tmpl = "a{k}^{k} a{k-1}^-2"
    corrupt = catalog.GroupFamily(
        "corrupt", Presentation(None, (), (RelatorFamily("corrupt", 2, compile_template(tmpl), tmpl),)),
        catalog.build_q().model)
    bad = catalog.model_check(corrupt, 50)
    caught = not bad.ok and bad.failures[0][0] == "corrupt k=2"
    exact = all(isinstance(v, Fraction) for _, vals in bad.failures for v in vals)
    ok = q.ok and c2.ok and c3.ok and caught and exact
    acceptance(8, ok, f"Q {q.summary()}, C2inf {c2.summary()}, C3inf {c3.summary()}, "
                      f"corrupted relator {'detected at k=2' if caught else 'NOT detected'}")
    assert ok


# 9 -------------------------------------------------------------------------

F2_TEXT = "[" + ",".join(map(str, F2)) + "]"
EVEN_ODD = "(proj0 (meet (mulc 2 (iota)) (addc 1 (mulc 2 (iota)))))"

CLI_CASES = [
    # the three reference examples
    (("encode", "b^-1 c^-1 b c"), 0, "[-1,-1,1,1]\n"),
    (("member", "q.paper", F2_TEXT), 0, "yes\n"),
    (("catalog", "q", "--k", "2", "--emit", "tuples", "--family", "paper"), 0, F2_TEXT + "\n"),
    # the exit-code table
    (("encode", "b^"), 1, ""),
    (("decode", "[1,0,2,1]"), 2, ""),
    (("member", "q.paper", "[]"), 3, "no\n"),
    (("member", EVEN_ODD, "[]", "--budget", "5"), 4, "unknown\n"),
    (("verify", "q.paper", "(lit)", "--coords", "19", "--max", "2"), 5, "Differ(" + F2_TEXT + ")\n"),
]


def _run(args):
    env = dict(os.environ)
    env.pop("HIGMANKIT_BUDGET", None)
    p = subprocess.run([sys.executable, "-m", "higmankit", *args], capture_output=True, env=env)
    return p.returncode, p.stdout


def test_criterion_9_cli_contract(acceptance):
    problems = []
    for args, code, out in CLI_CASES:
        first, second = _run(args), _run(args)
        if first != second:
            problems.append(f"{args[0]}: runs differ")
        if first != (code, out.encode()):
            problems.append(f"{args[0]}: got {first}")
    ok = not problems
    acceptance(9, ok, f"{len(CLI_CASES)} commands, exit codes 0-5, two runs each byte-identical; "
                      f"{len(problems)} problems")
    assert ok, problems

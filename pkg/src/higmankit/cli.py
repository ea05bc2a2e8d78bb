"""Command-line entry point.

Exit codes: 0 ok, 1 parse or usage error, 2 invalid coding, 3 member answered
no, 4 unknown (budget exhausted), 5 sets differ or a model check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from . import catalog
from .codec import decode, decode_lenient, encode, format_tuple, parse_tuple
from .compiler import compile_pattern, verify_compilation
from .errors import HigmanKitError, InvalidCoding, ParseError
from .freewords import BC, format_word, parse_word
from .seqsets import (NO, YES, PatternSet, SetExpr, enumerate_set, eq_on_window, expr_stats,
                      format_expr, member, parse_expr, parse_pattern, window)
from .seqsets.membership import default_budget
from .twogen import SCHEMES, iter_rewritten, parse_presentation

EXIT_OK, EXIT_PARSE, EXIT_CODING, EXIT_NO, EXIT_UNKNOWN, EXIT_DIFFER = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage, which would collide with "invalid coding"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


class Out:
    """Line-oriented output, optionally as one JSON value per line."""

    def __init__(self, fmt: str, stream=None):
        self.json = fmt == "json"
        self.stream = stream or sys.stdout

    def line(self, text: str, obj=None) -> None:
        if self.json:
            text = json.dumps(obj if obj is not None else text, separators=(",", ":"))
        self.stream.write(text + "\n")


# -- argument resolution -----------------------------------------------------

def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def load_expr(arg: str) -> SetExpr:
    """A catalog name, an inline ``(...)`` expression, or a file holding one."""
    if arg.lstrip().startswith("("):
        return parse_expr(arg)
    e = catalog.lookup_expr(arg)
    if e is not None:
        return e
    path = Path(arg)
    if path.is_file():
        return parse_expr(_strip_comments(path.read_text()))
    raise UsageError(f"{arg!r} is not a catalog name, an inline expression or a file")


def load_pattern(arg: str) -> PatternSet:
    p = catalog.lookup_pattern(arg)
    if p is not None:
        return p
    path = Path(arg)
    if path.is_file():
        P = parse_pattern(path.read_text())
        return P if P.name else replace(P, name=path.stem)
    if "coord" in arg:
        return parse_pattern(arg.replace(";", "\n"))
    raise UsageError(f"{arg!r} is not a catalog pattern or a pattern file")


def _k_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad k range {text!r} (expected K or K1..K2)") from None
    return range(a, b + 1)


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


# -- commands ----------------------------------------------------------------

def cmd_encode(args, out: Out) -> int:
    t = encode(parse_word(args.word, BC))
    out.line(format_tuple(t), list(t))
    return EXIT_OK


def cmd_decode(args, out: Out) -> int:
    t = parse_tuple(args.tuple)
    w = decode_lenient(t) if args.lenient else decode(t)
    out.line(format_word(w))
    return EXIT_OK


def cmd_enum(args, out: Out) -> int:
    e = load_expr(args.expr)
    for n, t in enumerate(enumerate_set(e, args.max_stage)):
        if n >= args.limit:
            break
        out.line(format_tuple(t), list(t))
    return EXIT_OK


_VERDICT_EXIT = {"yes": EXIT_OK, "no": EXIT_NO, "unknown": EXIT_UNKNOWN}


def cmd_member(args, out: Out) -> int:
    e = load_expr(args.expr)
    v = member(e, parse_tuple(args.tuple), _budget(args))
    word = "yes" if v is YES else "no" if v is NO else "unknown"
    out.line(word)
    return _VERDICT_EXIT[word]


def cmd_window(args, out: Out) -> int:
    e = load_expr(args.expr)
    res = window(e, args.coords, args.max, _budget(args))
    for t in res.members:
        out.line(format_tuple(t), list(t))
    for t in res.unresolved:
        out.line("unknown " + format_tuple(t), {"unknown": list(t)})
    return EXIT_UNKNOWN if res.unresolved else EXIT_OK


def cmd_compile(args, out: Out) -> int:
    P = load_pattern(args.pattern)
    e = compile_pattern(P)
    text = format_expr(e, pretty=args.pretty)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        out.line(text)
    if args.stats:
        st = expr_stats(e)
        hist = " ".join(f"{k}={v}" for k, v in sorted(st.histogram.items()))
        print(f"nodes={st.nodes} depth={st.depth} {hist}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, out: Out) -> int:
    P = load_pattern(args.pattern)
    e = load_expr(args.expr)
    L = args.coords if args.coords is not None else P.arity
    rep = verify_compilation(P, e, L, args.max, _budget(args))
    out.line(str(rep), {"verdict": rep.verdict,
                        "witness": list(rep.witness) if rep.witness is not None else None,
                        "pattern_window": rep.pattern_window, "expr_window": rep.expr_window,
                        "unresolved": rep.unresolved, "budget_spent": rep.budget_spent})
    return {"Equal": EXIT_OK, "Differ": EXIT_DIFFER}.get(rep.verdict, EXIT_UNKNOWN)


def cmd_compare(args, out: Out) -> int:
    c = eq_on_window(load_expr(args.left), load_expr(args.right), args.coords, args.max,
                     _budget(args))
    out.line(str(c), {"verdict": c.verdict,
                      "witness": list(c.witness) if c.witness is not None else None})
    return {"Equal": EXIT_OK, "Differ": EXIT_DIFFER}.get(c.verdict, EXIT_UNKNOWN)


def _family_tuples(fam, which: str, ks: range):
    P = fam.pattern_paper if which == "paper" else fam.pattern_std
    if P is None:
        for t in fam.std_codes():
            yield None, t
        return
    for k in ks:
        env = {P.params[0]: k}
        if P.in_domain(env):
            yield k, P.point(env)


def cmd_catalog(args, out: Out) -> int:
    fam = catalog.lookup_family(args.name)
    which = args.family
    if which == "paper" and fam.pattern_paper is None:
        raise UsageError(f"{fam.name} has no published tuple family; use --family std")
    if args.emit == "pattern":
        P = fam.pattern_paper if which == "paper" else fam.pattern_std
        if P is None:
            for t in fam.std_codes():
                out.line(format_tuple(t), list(t))
            return EXIT_OK
        for line in P.format().splitlines():
            out.line(line)
        return EXIT_OK
    ks = _k_range(args.k) if args.k else range(2, 6)
    if args.emit == "higman":
        out.line("# convention: " + catalog.HIGMAN_WORDS_CONVENTION,
                 {"convention": catalog.HIGMAN_WORDS_CONVENTION})
    for k, t in _family_tuples(fam, which, ks):
        label = "" if k is None else f"k={k}\t"
        if args.emit == "tuples":
            out.line(format_tuple(t), list(t))
        elif args.emit == "words":
            w = format_word(decode(t))
            out.line(label + w, {"k": k, "word": w})
        else:
            b_f, a_f = catalog.higman_words(t)
            out.line(f"{label}b_f = {format_word(b_f)}\ta_f = {format_word(a_f)}",
                     {"k": k, "b_f": format_word(b_f), "a_f": format_word(a_f)})
    return EXIT_OK


def cmd_rewrite(args, out: Out) -> int:
    path = Path(args.presentation)
    if path.is_file():
        pres = parse_presentation(path.read_text())
    else:
        try:
            pres = catalog.lookup_family(args.presentation).presentation
        except KeyError:
            raise UsageError(f"{args.presentation!r} is not a presentation file or catalog family") from None
    scheme = SCHEMES[args.scheme]()
    for r in iter_rewritten(pres, scheme, args.kmax):
        w = format_word(r.word)
        out.line(f"{r.source}\t{r.k}\t{w}\t{format_tuple(r.code)}",
                 {"source": r.source, "k": r.k, "word": w, "tuple": list(r.code)})
    return EXIT_OK


def cmd_modelcheck(args, out: Out) -> int:
    fam = catalog.lookup_family(args.name)
    rep = catalog.model_check(fam, args.kmax)
    for label, value in rep.failures:
        shown = ",".join(str(v) for v in value)
        out.line(f"nonzero {label}: {shown}", {"failure": label, "value": [str(v) for v in value]})
    out.line(rep.summary(), {"ok": rep.ok, "checked": rep.checked,
                             "failed": len(rep.failures)})
    return EXIT_OK if rep.ok else EXIT_DIFFER


def cmd_stats(args, out: Out) -> int:
    st = expr_stats(load_expr(args.expr))
    out.line(f"nodes {st.nodes}", {"nodes": st.nodes})
    out.line(f"depth {st.depth}", {"depth": st.depth})
    for k, v in sorted(st.histogram.items()):
        out.line(f"{k} {v}", {k: v})
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="text lines, or one JSON value per line")

    budget = _Parser(add_help=False)
    budget.add_argument("--budget", type=int, default=None,
                        help="search steps per membership query (default $HIGMANKIT_BUDGET or 10000)")

    win = _Parser(add_help=False)
    win.add_argument("--coords", "-L", type=int, default=None, help="support length L")
    win.add_argument("--max", "-N", type=int, default=4, help="entry bound N")

    ap = _Parser(prog="higmankit", description="Relator codings, two-generator rewriting and "
                 "Higman-style sequence sets.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", parents=[common], help="{b,c}-word to tuple")
    p.add_argument("word")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="tuple to {b,c}-word")
    p.add_argument("tuple")
    p.add_argument("--lenient", action="store_true", help="accept interior zeros")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("enum", parents=[common], help="stream members in stage order")
    p.add_argument("expr")
    p.add_argument("--limit", type=int, default=20)
    p.add_argument("--max-stage", type=int, default=None)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("member", parents=[common, budget], help="yes / no / unknown")
    p.add_argument("expr")
    p.add_argument("tuple")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("window", parents=[common, budget, win], help="sorted window of members")
    p.add_argument("expr")
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("compile", parents=[common], help="pattern to set expression")
    p.add_argument("pattern")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--stats", action="store_true", help="print node statistics to stderr")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("verify", parents=[common, budget, win],
                       help="compare a pattern and an expression on a window")
    p.add_argument("pattern")
    p.add_argument("expr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", parents=[common, budget, win],
                       help="compare two expressions on a window")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("catalog", parents=[common], help="emit data for a catalog family")
    p.add_argument("name", help="q, zn.<n> or cpinf.<p>")
    p.add_argument("--k", default=None, help="K or K1..K2 (default 2..5)")
    p.add_argument("--emit", choices=("tuples", "words", "pattern", "higman"), default="tuples")
    p.add_argument("--family", choices=("paper", "std"), default="std")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("rewrite", parents=[common], help="rewrite a presentation over {b,c}")
    p.add_argument("presentation", help="presentation file or catalog family")
    p.add_argument("--scheme", choices=sorted(SCHEMES), default="std")
    p.add_argument("--kmax", type=int, default=5)
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("modelcheck", parents=[common], help="evaluate relators in the exact model")
    p.add_argument("name")
    p.add_argument("--kmax", type=int, default=50)
    p.set_defaults(func=cmd_modelcheck)

    p = sub.add_parser("stats", parents=[common], help="node count, depth and histogram")
    p.add_argument("expr")
    p.set_defaults(func=cmd_stats)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "coords", 0) is None and args.command in ("window", "compare"):
        args.coords = 1
    out = Out(args.format)
    try:
        return args.func(args, out)
    except InvalidCoding as exc:
        print(f"higmankit: {exc}", file=sys.stderr)
        return EXIT_CODING
    except (ParseError, UsageError, KeyError, HigmanKitError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"higmankit: {msg}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

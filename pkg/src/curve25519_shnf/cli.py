"""Command line front end.

    curve-shnf verify all [--jobs N] [--seed S] [--json OUT]
    curve-shnf verify comp C-COMM
    curve-shnf norm --term-file F --vars "X Y Z"
    curve-shnf reduce --term-file F
    curve-shnf triple add PI0 "add(PI0, PI1)"
"""

from __future__ import annotations

import argparse
import logging
import re
import sys

from . import shnf, triples
from .curve_reduce import reduce
from .sexpr import parse, render, strip_comments
from .verify import registry
from .verify.report import run_all, run_one


def read_term_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse(strip_comments(fh.read()))


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|[(),])")


def parse_triple_expr(text: str) -> triples.Triple:
    """``PI0 | OMEGA | add(e, e) | neg(e)``, case-insensitive."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad triple expression at position {pos}: {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    it = iter(tokens + [None])
    tok = [next(it)]

    def take(expected=None):
        t = tok[0]
        if expected is not None and t != expected:
            raise ValueError(f"expected {expected!r}, got {t!r} in {text!r}")
        tok[0] = next(it)
        return t

    def expr():
        name = take()
        if name is None:
            raise ValueError(f"unexpected end of {text!r}")
        upper = name.upper()
        if upper in triples.NAMED:
            return triples.NAMED[upper]
        if upper in ("ADD", "NEG"):
            take("(")
            a = expr()
            if upper == "ADD":
                take(",")
                b = expr()
                take(")")
                return triples.add_term(a, b)
            take(")")
            return triples.neg_term(a)
        raise ValueError(f"unknown name {name!r} in {text!r}")

    result = expr()
    if tok[0] is not None:
        raise ValueError(f"trailing input in {text!r}")
    return result


def _print_triple(t) -> None:
    for name, component in zip(("m", "n", "z"), t):
        print(f"{name}: {render(component)}")


def cmd_verify(args) -> int:
    if args.what == "comp":
        if not args.id:
            print("verify comp needs a computation id", file=sys.stderr)
            return 2
        try:
            res = run_one(args.id)
        except registry.UnknownComputation as exc:
            print(exc.args[0], file=sys.stderr)
            return 2
        print(f"{res.id}: {'pass' if res.passed else 'FAIL'} {res.ms} ms hash={res.hash}")
        return 0 if res.passed else 1
    report = run_all(jobs=args.jobs, seed=args.seed, scale=args.scale,
                     with_suites=not args.no_suites)
    for c in report.computations:
        print(f"{c.id:16} {'pass' if c.passed else 'FAIL'} {c.ms:>8} ms  {c.hash}")
    for s in report.suites:
        print(f"{s.name:20} {s.trials:>8} trials {s.failures:>4} failures")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.dumps() + "\n")
    return 0 if report.passed else 1


def cmd_norm(args) -> int:
    term = read_term_file(args.term_file)
    h = shnf.run_deep(shnf.norm, term, args.vars.split())
    print(render(h))
    return 0


def cmd_reduce(args) -> int:
    term = read_term_file(args.term_file)
    text = render(shnf.run_deep(reduce, term))
    print(text)
    print(f"fnv1a64: {registry.fnv1a_64(text.encode())}")
    return 0


def cmd_triple(args) -> int:
    operands = [parse_triple_expr(e) for e in args.exprs]
    need = {"add": 2, "neg": 1, "check": 1, "sim": 2}[args.op]
    if len(operands) != need:
        print(f"triple {args.op} takes {need} expression(s)", file=sys.stderr)
        return 2
    if args.op == "add":
        _print_triple(triples.add_term(*operands))
        return 0
    if args.op == "neg":
        _print_triple(triples.neg_term(*operands))
        return 0
    fn = triples.is_ec_encoding if args.op == "check" else triples.sim
    ok = shnf.run_deep(fn, *operands)
    print("true" if ok else "false")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curve-shnf", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the group-law computations")
    v.add_argument("what", choices=("all", "comp"))
    v.add_argument("id", nargs="?")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", metavar="OUT")
    v.add_argument("--scale", type=float, default=1.0,
                   help="multiply randomized suite sizes")
    v.add_argument("--no-suites", action="store_true")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("norm", help="normal form of a term")
    n.add_argument("--term-file", required=True)
    n.add_argument("--vars", required=True)
    n.set_defaults(func=cmd_norm)

    r = sub.add_parser("reduce", help="curve reduction of a term over Y0..X2")
    r.add_argument("--term-file", required=True)
    r.set_defaults(func=cmd_reduce)

    t = sub.add_parser("triple", help="term-triple operations on named points")
    t.add_argument("op", choices=("add", "neg", "check", "sim"))
    t.add_argument("exprs", nargs="+")
    t.set_defaults(func=cmd_triple)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

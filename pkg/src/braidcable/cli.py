"""Command-line front end: evaluation, cabling, decomposition, kernel checks.

Exit codes: 0 success/verified, 1 verification or precondition failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braids import BraidWord, bigelow_element, cable_word
from .decompose import (
    kernel_equivalence_check,
    verify_global_decomposition,
    verify_infinitesimal_decomposition,
)
from .laurent import LaurentPoly
from .reps import burau_rep, direct_sum, eval_word, frame, sym_rep, twist


class PreconditionError(ValueError):
    pass


def parse_rep(descriptor, n):
    """Parse a representation descriptor: burau | sym, with modifiers.

    Modifiers are comma-separated: twist=<r>, frame=<±q^k>; sums are written
    sum(desc; desc; ...).
    """
    descriptor = descriptor.strip()
    if descriptor.startswith("sum(") and descriptor.endswith(")"):
        inner = descriptor[4:-1]
        parts = [p for p in inner.split(";") if p.strip()]
        return direct_sum([parse_rep(p, n) for p in parts])
    fields = [f.strip() for f in descriptor.split(",") if f.strip()]
    if not fields:
        raise PreconditionError("empty representation descriptor")
    name = fields[0]
    if name == "burau":
        rep = burau_rep(n)
    elif name == "sym":
        rep = sym_rep(n)
    else:
        raise PreconditionError("unknown representation %r" % name)
    for mod in fields[1:]:
        if "=" not in mod:
            raise PreconditionError("bad modifier %r" % mod)
        key, val = mod.split("=", 1)
        key, val = key.strip(), val.strip()
        if key == "twist":
            rep = twist(rep, int(val))
        elif key == "frame":
            rep = frame(rep, _parse_unit(val))
        else:
            raise PreconditionError("unknown modifier %r" % key)
    return rep


def _parse_unit(text):
    """Parse ±q^k (also 1, -1, q, -q) into a Laurent monomial."""
    t = text.replace(" ", "")
    sign = 1
    if t.startswith("-"):
        sign = -1
        t = t[1:]
    elif t.startswith("+"):
        t = t[1:]
    if t == "1":
        return LaurentPoly.const(sign)
    if t == "q":
        return LaurentPoly.monomial(1, sign)
    if t.startswith("q^"):
        return LaurentPoly.monomial(int(t[2:]), sign)
    raise PreconditionError("framing unit must be of the form ±q^k, got %r" % text)


def parse_word(text, n):
    text = text.strip()
    if text == "@bigelow":
        if n is not None and n != 5:
            raise PreconditionError("@bigelow lives in B_5; use --n 5")
        return bigelow_element()
    if n is None:
        raise PreconditionError("--n is required")
    return BraidWord.from_text(n, text)


def _print_matrix(m, args):
    order = args.series_order
    if order is not None:
        m = m.to_series(order)
    if args.json:
        print(json.dumps(m.to_json()))
    else:
        print(m)


def cmd_eval(args):
    w = parse_word(args.word, args.n)
    rep = parse_rep(args.rep, w.strands)
    _print_matrix(eval_word(rep, w), args)
    return 0


def cmd_cable(args):
    w = parse_word(args.word, args.n)
    out = cable_word(w, args.r)
    if args.json:
        print(json.dumps({"n": out.strands, "word": list(out.letters)}))
    else:
        print(out.to_text())
    return 0


def cmd_decompose(args):
    if args.infinitesimal:
        report = verify_infinitesimal_decomposition(args.n, args.r)
    else:
        report = verify_global_decomposition(args.n, args.r)
    if args.json:
        print(json.dumps(report.to_json(emit_intertwiner=args.emit_intertwiner)))
    else:
        print("left:  %s" % report.left_label)
        print("right: %s" % report.right_label)
        for (label, dim, mult) in report.block_structure:
            print("block: %s  (dim %d, multiplicity %d)" % (label, dim, mult))
        print("verified: %s" % report.verified)
        if report.detail:
            print(report.detail)
        if args.emit_intertwiner:
            print(report.intertwiner)
    return 0 if report.verified else 1


def cmd_kernel(args):
    w = parse_word(args.word, args.n)
    verdict = kernel_equivalence_check(w, args.r)
    print(json.dumps(verdict.to_json()))
    return 0


def cmd_selftest(args):
    from . import selftest

    return selftest.run(quick=args.quick)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="braidcable",
        description="Exact computation with Burau representations, cabling, "
        "and their decomposition",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a representation on a braid word")
    p.add_argument("--rep", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--word", required=True)
    p.add_argument("--series-order", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("cable", help="cable a braid word")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("decompose", help="verify the decomposition theorem")
    p.add_argument("--n", type=_at_least(2, "--n"), required=True)
    p.add_argument("--r", type=_at_least(2, "--r"), required=True)
    p.add_argument("--infinitesimal", action="store_true")
    p.add_argument("--emit-intertwiner", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("kernel", help="kernel membership for Burau and its cabling")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("selftest", help="run the full acceptance grid")
    p.add_argument("--quick", action="store_true",
                   help="skip the long exact cabled-kernel confirmation")
    p.set_defaults(func=cmd_selftest)

    return parser


def _at_least(bound, flag):
    def check(text):
        value = int(text)
        if value < bound:
            raise argparse.ArgumentTypeError("%s must be >= %d" % (flag, bound))
        return value

    return check


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

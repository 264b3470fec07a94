"""``gog`` command-line front end.

Germ expressions use ``x``, rationals, ``+ - * /``, ``^`` with an integer or a
parenthesized rational exponent, ``inv(...)``, ``D(...)`` and ``@`` for
composition (left-associative, looser than ``+``).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import series as S
from .coeff import Ordering
from .errors import FuelExhausted, GogError, IdentityHasNoRank, ParseError
from .series import EqualToDepth, Germ

EXIT_OK, EXIT_FAIL, EXIT_UNDECIDED, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 64, 65


# --------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: Fraction


@dataclass(frozen=True)
class Comp:
    left: object
    right: object


@dataclass(frozen=True)
class Inv:
    arg: object


@dataclass(frozen=True)
class Derive:
    arg: object


_BINARY = {Add: "+", Sub: "-", Mul: "*", Div: "/", Comp: "@"}


def unparse(node) -> str:
    """Fully parenthesized text that parses back to the same tree."""
    if isinstance(node, Num):
        v = node.value
        return str(v) if v >= 0 else f"(-{-v})"
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Neg):
        return f"(-{unparse(node.arg)})"
    if isinstance(node, Pow):
        e = node.exponent
        exp = str(e) if e.denominator == 1 and e >= 0 else f"({e})"
        return f"({unparse(node.base)})^{exp}"
    if isinstance(node, Inv):
        return f"inv({unparse(node.arg)})"
    if isinstance(node, Derive):
        return f"D({unparse(node.arg)})"
    op = _BINARY[type(node)]
    return f"({unparse(node.left)} {op} {unparse(node.right)})"


# --------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected):
        raise ParseError(self.pos, expected, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.error([repr(token)])

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error(["integer"])
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        sign = -1 if self.accept("-") else 1
        num = self.integer()
        if self.accept("/"):
            pos = self.pos
            den = self.integer()
            if den == 0:
                self.pos = pos
                self.error(["positive integer"])
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def parse(self):
        node = self.comp()
        self.skip()
        if self.pos != len(self.text):
            self.error(["'+'", "'-'", "'*'", "'/'", "'@'", "'^'"])
        return node

    def comp(self):
        node = self.sum()
        while self.accept("@"):
            node = Comp(node, self.sum())
        return node

    def sum(self):
        node = self.term()
        while True:
            if self.accept("+"):
                node = Add(node, self.term())
            elif self.accept("-"):
                node = Sub(node, self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            if self.accept("*"):
                node = Mul(node, self.unary())
            elif self.accept("/"):
                node = Div(node, self.unary())
            else:
                return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        return self.factor()

    def factor(self):
        node = self.atom()
        if self.accept("^"):
            if self.accept("("):
                e = self.rational()
                self.expect(")")
            elif self.peek().isdigit():
                e = Fraction(self.integer())
            else:
                self.error(["'('", "integer"])
            node = Pow(node, e)
        return node

    def atom(self):
        c = self.peek()
        if c.isdigit():
            return Num(Fraction(self.integer()))
        for name, ctor in (("inv(", Inv), ("D(", Derive)):
            if self.accept(name):
                node = self.comp()
                self.expect(")")
                return ctor(node)
        if self.accept("x"):
            return Var()
        if self.accept("("):
            node = self.comp()
            self.expect(")")
            return node
        self.error(["integer", "'x'", "'('", "'inv('", "'D('"])


def parse(text: str):
    """Parse a germ expression into a syntax tree; raises ParseError with the column."""
    return _Parser(text).parse()


def evaluate(node, fuel=None) -> Germ:
    if isinstance(node, Num):
        return S.constant(node.value)
    if isinstance(node, Var):
        return S.x()
    if isinstance(node, Neg):
        return -evaluate(node.arg, fuel)
    if isinstance(node, Pow):
        base = evaluate(node.base, fuel)
        e = node.exponent
        if e.denominator == 1 and e >= 0:
            out = S.constant(1)
            for _ in range(int(e)):
                out = S.mul(out, base)
            return out
        return S.rational_power(base, e, fuel)
    if isinstance(node, Inv):
        return S.func_inverse(evaluate(node.arg, fuel), fuel)
    if isinstance(node, Derive):
        return S.derive(evaluate(node.arg, fuel))
    a, b = evaluate(node.left, fuel), evaluate(node.right, fuel)
    if isinstance(node, Add):
        return S.add(a, b)
    if isinstance(node, Sub):
        return S.sub(a, b)
    if isinstance(node, Mul):
        return S.mul(a, b)
    if isinstance(node, Div):
        return S.mul(a, S.recip(b, fuel))
    return S.compose(a, b, fuel)


def germ(text: str, fuel=None) -> Germ:
    g = evaluate(parse(text), fuel)
    g.origin = text
    return g


# --------------------------------------------------------------------------
# verbs


class _Usage(Exception):
    pass


def _out(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _cmp(args, fuel):
    f, g = germ(args.exprs[0], fuel), germ(args.exprs[1], fuel)
    r = S.cmp(f, g, fuel)
    k = 3
    if isinstance(r, EqualToDepth):
        _out(args, f"EqualToDepth({r.depth})", {"verdict": "EqualToDepth", "depth": r.depth})
        return EXIT_UNDECIDED
    name = {Ordering.LESS: "Less", Ordering.GREATER: "Greater", Ordering.EQUAL: "Equal"}[r]
    sym = {"Less": "<", "Greater": ">", "Equal": "="}[name]
    _out(args, f"{name} ({S.render(f, k, fuel)} {sym} {S.render(g, k, fuel)})",
         {"verdict": name, "lhs": S.terms_json(f, k, fuel), "rhs": S.terms_json(g, k, fuel)})
    return EXIT_OK


def _rank(args, fuel):
    from .gogcore import rank
    r = rank(germ(args.exprs[0], fuel), fuel)
    _out(args, str(r), {"rank": str(r)})
    return EXIT_OK


def _order_eq(args, fuel):
    from .gogcore import Similarity, order_eq
    v = order_eq(germ(args.exprs[0], fuel), germ(args.exprs[1], fuel), fuel)
    name = {Similarity.SIMILAR: "Similar", Similarity.NOT_SIMILAR: "NotSimilar",
            Similarity.UNDECIDED: "Undecided"}[v]
    _out(args, name, {"verdict": name})
    return EXIT_UNDECIDED if v is Similarity.UNDECIDED else EXIT_OK


def _expand(args, fuel):
    from .gogcore import asym_expand, expansion_json, render_expansion
    steps = asym_expand(germ(args.exprs[0], fuel), args.depth, fuel)
    _out(args, render_expansion(steps), expansion_json(steps))
    return EXIT_OK


def _series(args, fuel, g: Germ):
    _out(args, S.render(g, args.depth, fuel), S.terms_json(g, args.depth, fuel))
    return EXIT_OK


def _compose(args, fuel):
    return _series(args, fuel, S.compose(germ(args.exprs[0], fuel), germ(args.exprs[1], fuel), fuel))


def _invert(args, fuel):
    return _series(args, fuel, S.func_inverse(germ(args.exprs[0], fuel), fuel))


def _derive(args, fuel):
    return _series(args, fuel, S.derive(germ(args.exprs[0], fuel)))


def _taylor(args, fuel):
    from .hfield import taylor_check
    try:
        n = int(args.exprs[3])
    except ValueError:
        raise _Usage(f"order must be an integer, got {args.exprs[3]!r}") from None
    a, b, d = (germ(e, fuel) for e in args.exprs[:3])
    rep = taylor_check(a, b, d, n, depth=args.depth, fuel=fuel)
    text = f"{rep.status} (margin {rep.margin_exponent})"
    if rep.first_bad_term:
        text += f", first bad term {rep.first_bad_term}"
    _out(args, text, rep.to_json())
    return EXIT_OK if rep.passed else EXIT_FAIL


def _conjugate(args, fuel):
    from .hfield import conjugate_to_translation
    h, eps = conjugate_to_translation(germ(args.exprs[0], fuel), depth=args.depth, fuel=fuel)
    _out(args, f"h = {S.render(h, args.depth, fuel)}\neps = {S.render(eps, args.depth, fuel)}",
         {"h": S.terms_json(h, args.depth, fuel), "epsilon": S.terms_json(eps, args.depth, fuel)})
    return EXIT_OK


def _suite(args, fuel):
    import random

    from . import combinators as C
    from .hfield import hf_axiom_check
    from .sampling import random_germ

    if args.group == "hfield":
        rng = random.Random(args.seed)
        reports = [r.to_json() for r in hf_axiom_check([random_germ(rng) for _ in range(args.samples)], fuel)]
        failed = sum(r["status"] == "fail" for r in reports)
        undecided = sum(r["status"] == "undecided" for r in reports)
        payload = [{"group": "hfield", "axiom": ax, "samples": sum(r["axiom"] == ax for r in reports),
                    "passes": sum(r["axiom"] == ax and r["status"] == "pass" for r in reports),
                    "failures": [r["sample"] for r in reports if r["axiom"] == ax and r["status"] == "fail"][:5],
                    "undecided": sum(r["axiom"] == ax and r["status"] == "undecided" for r in reports)}
                   for ax in ("HF1", "HF2")]
    else:
        G = {
            "puiseux": lambda: C.puiseux_group(fuel),
            "aff": C.aff_group,
            "hahn": lambda: C.hahn_group([0, 1, 2]),
            "semidirect-demo": C.semidirect_demo,
        }[args.group]()
        payload = C.gog_axiom_suite(G, samples=args.samples, seed=args.seed)
        failed = sum(len(r["failures"]) for r in payload)
        undecided = sum(r["undecided"] for r in payload)
    lines = [f"{r['group']} {r['axiom']}: {r['passes']} pass, {len(r['failures'])} fail, "
             f"{r['undecided']} undecided" for r in payload]
    _out(args, "\n".join(lines), payload)
    if failed:
        return EXIT_FAIL
    return EXIT_UNDECIDED if undecided else EXIT_OK


VERBS = {
    "cmp": (_cmp, 2, "compare two germs"),
    "rank": (_rank, 1, "growth rank of a germ"),
    "order-eq": (_order_eq, 2, "decide growth-order equivalence"),
    "expand": (_expand, 1, "asymptotic expansion into flows"),
    "compose": (_compose, 2, "composition f @ g"),
    "invert": (_invert, 1, "compositional inverse"),
    "derive": (_derive, 1, "derivative"),
    "taylor-check": (_taylor, 4, "Taylor axiom check: a b delta n"),
    "conjugate": (_conjugate, 1, "conjugate g to x + 1 + eps"),
    "suite": (_suite, 0, "randomized axiom suite"),
}

GROUPS = ("puiseux", "aff", "hahn", "semidirect-demo", "hfield")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _ArgParser(prog="gog", description="Exact computation with Puiseux germs under composition.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_ArgParser)
    for name, (_, arity, help_text) in VERBS.items():
        sp = sub.add_parser(name, help=help_text)
        if arity:
            sp.add_argument("exprs", nargs=arity, metavar="EXPR")
        sp.add_argument("--fuel", type=_positive, default=None, help="term budget per query")
        sp.add_argument("--depth", type=_positive, default=6, help="terms to show or verify")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if name == "suite":
            sp.add_argument("--group", choices=GROUPS, default="puiseux")
            sp.add_argument("--samples", type=_positive, default=500)
            sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.fuel is None:
        env = os.environ.get("GOG_DEFAULT_FUEL")
        if env is not None and (not env.isdigit() or int(env) < 1):
            print(f"gog: error: GOG_DEFAULT_FUEL must be a positive integer, got {env!r}", file=sys.stderr)
            return EXIT_USAGE
    fuel = S._fuel(args.fuel)
    handler = VERBS[args.verb][0]
    try:
        return handler(args, fuel)
    except ParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _Usage as exc:
        print(f"gog: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FuelExhausted, IdentityHasNoRank) as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except GogError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

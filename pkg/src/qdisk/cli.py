"""Command-line surface.

A small expression language over Z_n,

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' nat | "'")*
    atom   := 'z[' nat ']' | 'w[' nat ']' | 'Q[' nat ']' | 'q' | int | '(' expr ')'

with explicit '*' (juxtaposition is not multiplication), postfix ' for the
*-involution, '/' restricted to scalar divisors, and subcommands for
normalization, Haar evaluation, inner products, spherical elements, and the
addition-formula verification suite.  Printing normal forms stays inside the
grammar, so parse(print(x)) always re-evaluates to x.

Exit codes: 0 success / verification pass, 1 verification failure, 2 usage,
parse, or evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from .diskpoly import assoc_spherical, spherical
from .haar import haar, inner
from .qfield import ONE, QRat, poly_neg, poly_str
from .tensor import verify_addition
from .zalgebra import ZElement, q_element, star, w_gen, z_gen


class ExprError(ValueError):
    """Syntax or evaluation error, carrying a byte offset into the source."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _byte_offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8"))


# ----------------------------------------------------------------------
# lexer

_TOKEN_RE = re.compile(r"""
    (?P<WS>\s+)
  | (?P<GEN>[zwQ]\[(?P<IDX>\d+)\])
  | (?P<INT>\d+)
  | (?P<QLIT>q)
  | (?P<OP>[-+*/^'()])
""", re.VERBOSE)


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ExprError(f"unexpected character {src[pos]!r}", _byte_offset(src, pos))
        if m.lastgroup != "WS" and m.lastgroup != "IDX":
            kind = m.lastgroup
            text = m.group()
            if kind == "GEN":
                tokens.append((text[0], int(m.group("IDX")), _byte_offset(src, pos)))
            elif kind == "OP":
                tokens.append((text, None, _byte_offset(src, pos)))
            else:
                tokens.append((kind, text, _byte_offset(src, pos)))
        pos = m.end()
    tokens.append(("END", None, _byte_offset(src, len(src))))
    return tokens


# ----------------------------------------------------------------------
# parser: tuple-shaped AST


class _Parser:
    def __init__(self, src: str, n: int):
        self.tokens = _tokenize(src)
        self.i = 0
        self.n = n

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ExprError(f"expected {kind!r}", tok[2])
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ExprError("trailing input", tok[2])
        return node

    def expr(self):
        if self.peek()[0] == "-":
            offset = self.advance()[2]
            node = ("neg", self.term(), offset)
        else:
            node = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, offset = self.advance()
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs, offset)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, offset = self.advance()
            rhs = self.factor()
            node = ("mul" if op == "*" else "div", node, rhs, offset)
        return node

    def factor(self):
        node = self.atom()
        while True:
            tok = self.peek()
            if tok[0] == "^":
                offset = self.advance()[2]
                exp = self.expect("INT")
                node = ("pow", node, int(exp[1]), offset)
            elif tok[0] == "'":
                offset = self.advance()[2]
                node = ("star", node, offset)
            else:
                return node

    def atom(self):
        tok = self.advance()
        kind, value, offset = tok
        if kind in ("z", "w", "Q"):
            if not 1 <= value <= self.n:
                raise ExprError(f"index {value} out of range for rank {self.n}", offset)
            return ("gen", kind, value, offset)
        if kind == "INT":
            return ("int", int(value), offset)
        if kind == "QLIT":
            return ("q", offset)
        if kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExprError("expected an atom", offset)


def parse(src: str, n: int):
    """Parse source text against rank n, returning the syntax tree."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    return _Parser(src, n).parse()


# ----------------------------------------------------------------------
# evaluation


def _scalar_of(elt: ZElement, offset: int) -> QRat:
    zero_key = ((0,) * elt.rank, (0,) * elt.rank)
    if any(key != zero_key for key in elt.terms):
        raise ExprError("division by a non-scalar element", offset)
    return elt.terms.get(zero_key, QRat.from_int(0))


def eval_expr(node, n: int) -> ZElement:
    """Interpret a syntax tree as an element of Z_n."""
    kind = node[0]
    if kind == "gen":
        _, g, idx, _ = node
        return {"z": z_gen, "w": w_gen, "Q": q_element}[g](idx, n)
    if kind == "int":
        return ZElement(n, {((0,) * n, (0,) * n): QRat.from_int(node[1])})
    if kind == "q":
        return ZElement(n, {((0,) * n, (0,) * n): QRat.q_power(1)})
    if kind == "neg":
        return -eval_expr(node[1], n)
    if kind == "add":
        return eval_expr(node[1], n) + eval_expr(node[2], n)
    if kind == "sub":
        return eval_expr(node[1], n) - eval_expr(node[2], n)
    if kind == "mul":
        return eval_expr(node[1], n) * eval_expr(node[2], n)
    if kind == "div":
        divisor = _scalar_of(eval_expr(node[2], n), node[3])
        if not divisor:
            raise ExprError("division by zero", node[3])
        return eval_expr(node[1], n) * divisor.inverse()
    if kind == "pow":
        return eval_expr(node[1], n) ** node[2]
    if kind == "star":
        return star(eval_expr(node[1], n))
    raise AssertionError(f"unknown node {kind!r}")


def parse_element(src: str, n: int) -> ZElement:
    return eval_expr(parse(src, n), n)


# ----------------------------------------------------------------------
# grammar-compatible printing


def _poly_term_count(coeffs) -> int:
    return sum(1 for c in coeffs if c)


def _first_nonzero(coeffs) -> int:
    return next((c for c in coeffs if c), 0)


def _display_parts(c: QRat):
    """Split a coefficient into (is_negative, num, den) with both polynomial
    parts led (in ascending degree) by a positive coefficient."""
    num, den = c.num, c.den
    if _first_nonzero(den) < 0:
        num, den = poly_neg(num), poly_neg(den)
    negative = _first_nonzero(num) < 0
    if negative:
        num = poly_neg(num)
    return negative, num, den


def format_qrat(c: QRat) -> str:
    """Print a coefficient so it can stand alone as an expression."""
    negative, num, den = _display_parts(c)
    body = _quotient_str(num, den)
    return f"-{body}" if negative else body


def _quotient_str(num, den) -> str:
    """Factor-safe rendering of num/den."""
    num_s = poly_str(num)
    if den == (1,):
        return f"({num_s})" if _poly_term_count(num) > 1 else num_s
    den_s = poly_str(den)
    if _poly_term_count(num) > 1:
        num_s = f"({num_s})"
    if _poly_term_count(den) > 1 or "*" in den_s:
        den_s = f"({den_s})"
    return f"({num_s}/{den_s})"


def _monomial_str(lam, mu) -> str:
    parts = [f"z[{i}]" + (f"^{e}" if e > 1 else "")
             for i, e in enumerate(lam, start=1) if e]
    parts += [f"w[{i}]" + (f"^{e}" if e > 1 else "")
              for i, e in reversed(list(enumerate(mu, start=1))) if e]
    return "*".join(parts)


def format_element(x: ZElement) -> str:
    """Print a normal form inside the expression grammar."""
    if not x.terms:
        return "0"
    pieces = []
    for (lam, mu), c in x.sorted_terms():
        negative, num, den = _display_parts(c)
        mono = _monomial_str(lam, mu)
        if not mono:
            body = _quotient_str(num, den)
        elif (num, den) == ((1,), (1,)):
            body = mono
        else:
            body = f"{_quotient_str(num, den)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


# ----------------------------------------------------------------------
# subcommands


def _default_rank(args) -> int:
    if args.n is not None:
        return args.n
    env = os.environ.get("QDISK_DEFAULT_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ExprError(f"QDISK_DEFAULT_N is not an integer: {env!r}", 0)
    return 2


def _cmd_normalize(args) -> int:
    n = _default_rank(args)
    elt = parse_element(args.expr, n)
    if args.json:
        print(json.dumps(elt.to_json()))
    else:
        print(format_element(elt))
    return 0


def _cmd_haar(args) -> int:
    n = _default_rank(args)
    value = haar(parse_element(args.expr, n))
    if args.json:
        print(json.dumps(value.to_json()))
    else:
        print(value)
    return 0


def _cmd_inner(args) -> int:
    n = _default_rank(args)
    value = inner(parse_element(args.lhs, n), parse_element(args.rhs, n))
    if args.json:
        print(json.dumps(value.to_json()))
    else:
        print(value)
    return 0


def _cmd_spherical(args) -> int:
    n = _default_rank(args)
    if args.assoc is None:
        elt = spherical(args.l, args.m, n)
    else:
        r, s = args.assoc
        elt = assoc_spherical(args.l, args.m, r, s, n)
    if args.json:
        print(json.dumps(elt.to_json()))
    else:
        print(format_element(elt))
    return 0


def _verdict_line(v: dict) -> str:
    status = "pass" if v["pass"] else "FAIL"
    return (f"alpha={v['alpha']} l={v['l']} m={v['m']} variant={v['variant']}: "
            f"{status}  lhs={v['lhs_terms']} rhs={v['rhs_terms']} "
            f"residual={len(v['residual_terms'])} millis={v['millis']}")


def _cmd_verify_addition(args) -> int:
    variant = "precursor" if args.precursor else "final"
    verdict = verify_addition(args.l, args.m, args.alpha, variant).to_json()
    if args.json:
        print(json.dumps(verdict))
    else:
        print(_verdict_line(verdict))
    return 0 if verdict["pass"] else 1


def _run_case(case) -> dict:
    l, m, alpha, variant = case
    return verify_addition(l, m, alpha, variant).to_json()


def _parse_grid(text: str) -> dict:
    """Parse "alpha=1..3;l=0..2;m=0..2" into value lists per variable."""
    grid = {"alpha": [1], "l": [0], "m": [0]}
    for clause in filter(None, (part.strip() for part in text.split(";"))):
        name, _, spec_part = clause.partition("=")
        name = name.strip()
        if name not in grid or not spec_part:
            raise ValueError(f"bad grid clause {clause!r}")
        values = []
        for piece in spec_part.split(","):
            piece = piece.strip()
            if ".." in piece:
                lo, _, hi = piece.partition("..")
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(piece))
        grid[name] = values
    return grid


def _cmd_suite(args) -> int:
    grid = _parse_grid(args.grid)
    variants = ("final", "precursor") if args.variant == "both" else (args.variant,)
    cases = [(l, m, alpha, variant)
             for alpha in grid["alpha"]
             for l in grid["l"]
             for m in grid["m"]
             for variant in variants]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            verdicts = list(pool.map(_run_case, cases))
    else:
        verdicts = [_run_case(case) for case in cases]
    if args.json:
        print(json.dumps(verdicts))
    else:
        for v in verdicts:
            print(_verdict_line(v))
        passed = sum(1 for v in verdicts if v["pass"])
        print(f"suite: {passed}/{len(verdicts)} passed")
    return 0 if all(v["pass"] for v in verdicts) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdisk",
        description="Exact computations in the quantized polynomial algebras Z_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rank(p):
        p.add_argument("--n", type=int, default=None,
                       help="rank (default: $QDISK_DEFAULT_N or 2)")

    p = sub.add_parser("normalize", help="reduce an expression to normal form")
    add_rank(p)
    p.add_argument("--expr", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser("haar", help="evaluate the Haar functional")
    add_rank(p)
    p.add_argument("--expr", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_haar)

    p = sub.add_parser("inner", help="Haar inner product of two expressions")
    add_rank(p)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_inner)

    p = sub.add_parser("spherical", help="spherical or associated spherical element")
    add_rank(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--assoc", type=_assoc_pair, default=None, metavar="R,S")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_spherical)

    p = sub.add_parser("verify-addition", help="verify one addition-formula case")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--precursor", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify_addition)

    p = sub.add_parser("suite", help="verification battery over a parameter grid")
    p.add_argument("--grid", required=True, help='e.g. "alpha=1..3;l=0..2;m=0..2"')
    p.add_argument("--variant", choices=("final", "precursor", "both"), default="both")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_suite)

    return parser


def _assoc_pair(text: str):
    try:
        r, s = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected R,S — got {text!r}")
    return r, s


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ExprError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

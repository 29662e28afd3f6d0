"""Command-line front end: ideal files in, answers out.

An ideal file is line based.  The first content line declares the
coefficient field (`field GF(p)` or `field QQ`), the second the variables
in lex order, last listed greatest (`vars x1, x2`); every further nonempty
line is one generator.  `#` starts a comment anywhere on a line.

Generator expressions use integers, declared variables, `+ - * ^`, unary
minus, and parentheses.  `^` binds tightest and takes a nonnegative integer
exponent, then `*`, then the additive operators; there is no division.
Malformed text raises `ParseError` carrying the 1-based line and column.

Boolean answers are printed as `true`/`false` rather than encoded in the
exit status, which is reserved for failure kinds: 0 success, 2 bad input or
usage (including budget refusals), 3 operation unsupported over the
declared field, 4 broken internal invariant.  `--json` switches every
subcommand to a fixed-key JSON object; identical input and seed give
byte-identical output either way.
"""

import argparse
import json
import math
import re
import sys

from .errors import (
    ImproperIdeal,
    InternalInvariantError,
    NullkitError,
    ParseError,
    UnknownVariable,
    UnsupportedField,
)
from .field import QQ, PrimeField, RationalField
from .groebner import INFINITE, Ideal, groebner_basis, is_proper, member, reduce
from .noether import build_monicizer
from .nullsatz import (
    is_field,
    maximal_ideal_containing,
    points_of_maximal_ideal,
    quotient_dimension,
    radical_member,
)
from .oracle import variety_slice
from .poly import PolyRing
from .resultant import resultant

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


# -- tokenizer and expression grammar ----------------------------------------


def _tokenize(text, line):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        col = pos + 1
        if ch.isdigit():
            end = pos
            while end < len(text) and text[end].isdigit():
                end += 1
            tokens.append(("int", int(text[pos:end]), col))
            pos = end
        elif m := _NAME_RE.match(text, pos):
            tokens.append(("name", m.group(), col))
            pos = m.end()
        elif ch in "+-*^()":
            tokens.append((ch, ch, col))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Tokens:
    def __init__(self, text, line):
        self.items = _tokenize(text, line)
        self.line = line
        self.pos = 0

    def peek(self):
        return self.items[self.pos][0]

    def take(self):
        tok = self.items[self.pos]
        if tok[0] != "end":
            self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {what}", self.line, tok[2])
        return tok


def _expr(toks, ring, index):
    node = _term(toks, ring, index)
    while toks.peek() in "+-":
        op = toks.take()[0]
        rhs = _term(toks, ring, index)
        node = node + rhs if op == "+" else node - rhs
    return node


def _term(toks, ring, index):
    node = _unary(toks, ring, index)
    while toks.peek() == "*":
        toks.take()
        node = node * _unary(toks, ring, index)
    return node


def _unary(toks, ring, index):
    if toks.peek() == "-":
        toks.take()
        return -_unary(toks, ring, index)
    return _power(toks, ring, index)


def _power(toks, ring, index):
    base = _atom(toks, ring, index)
    if toks.peek() == "^":
        toks.take()
        exponent = toks.expect("int", "a nonnegative integer exponent")[1]
        return base**exponent
    return base


def _atom(toks, ring, index):
    kind, value, col = toks.take()
    if kind == "int":
        return ring.constant(value)
    if kind == "name":
        if value not in index:
            raise UnknownVariable(f"unknown variable {value!r}", toks.line, col)
        return ring.gen(index[value])
    if kind == "(":
        node = _expr(toks, ring, index)
        toks.expect(")", "a closing parenthesis")
        return node
    raise ParseError("expected a number, a variable, or a parenthesis", toks.line, col)


def _parse_line(text, line, ring, index):
    toks = _Tokens(text, line)
    node = _expr(toks, ring, index)
    toks.expect("end", "the end of the expression")
    return node


# -- ideal files -------------------------------------------------------------


def _content_lines(text):
    for line, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield line, body


def _parse_field(spec, line):
    spec = spec.strip()
    if spec == "QQ":
        return QQ
    if m := re.fullmatch(r"GF\(\s*(\d+)\s*\)", spec):
        return PrimeField(int(m.group(1)))
    raise ParseError(f"expected GF(p) or QQ, got {spec!r}", line, 1)


def parse_ideal(text):
    """An ideal from the line-based file format described in the module
    docstring."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("an ideal file starts with a field line", 1, 1)
    line, head = lines[0]
    m = re.match(r"\s*field\b(.*)", head)
    if not m:
        raise ParseError("the first content line must be `field ...`", line, 1)
    field = _parse_field(m.group(1), line)
    if len(lines) < 2:
        raise ParseError("a vars line must follow the field line", line, 1)
    line, head = lines[1]
    m = re.match(r"\s*vars\b(.*)", head)
    if not m:
        raise ParseError("the second content line must be `vars ...`", line, 1)
    names = [p.strip() for p in m.group(1).split(",")]
    if names == [""]:
        raise ParseError("at least one variable must be declared", line, 1)
    for name in names:
        if not _NAME_RE.fullmatch(name):
            raise ParseError(f"bad variable name {name!r}", line, 1)
    if len(set(names)) != len(names):
        raise ParseError("variable names must be unique", line, 1)
    ring = PolyRing(field, tuple(names))
    index = {name: i for i, name in enumerate(names)}
    gens = [_parse_line(body, line, ring, index) for line, body in lines[2:]]
    return Ideal(ring, gens)


def parse_poly(text, ring):
    """One generator expression against an existing ring; `ParseError`
    columns are 1-based offsets into `text`."""
    index = {name: i for i, name in enumerate(ring.names)}
    return _parse_line(text, 1, ring, index)


def _integral(g):
    # clear denominators so the rendering stays inside the grammar
    if not isinstance(g.ring.field, RationalField):
        return g
    scale = math.lcm(*(c.value.denominator for c in g.terms.values()))
    return g * g.ring.constant(scale)


def render_ideal(I):
    """The ideal back in file form; parsing the result reproduces the
    generators (rational ones up to denominator clearing)."""
    field = I.ring.field
    head = "field QQ" if isinstance(field, RationalField) else f"field GF({field.p})"
    lines = [head, "vars " + ", ".join(I.ring.names)]
    lines.extend(str(_integral(g)) for g in I.generators)
    return "".join(line + "\n" for line in lines)


# -- subcommands -------------------------------------------------------------


def _bool_text(value):
    return "true" if value else "false"


def _map_lines(mp):
    names = mp.ring.names
    last = names[-1]
    out = []
    for i in range(mp.ring.nvars - 1):
        w = mp.weights[i]
        if w:
            shift = last if w == 1 else f"{last}^{w}"
            out.append(f"{names[i]} -> {names[i]} + {shift}")
    return out


def _point_text(pt):
    return "(" + ", ".join(str(c) for c in pt) + ")"


def _cmd_gb(args, ideal):
    basis = [str(g) for g in groebner_basis(ideal)]
    payload = {"field": repr(ideal.ring.field), "vars": list(ideal.ring.names), "basis": basis}
    return payload, basis


def _cmd_proper(args, ideal):
    value = is_proper(ideal)
    return {"proper": value}, [_bool_text(value)]


def _cmd_member(args, ideal):
    f = parse_poly(args.poly, ideal.ring)
    value = member(f, ideal)
    return {"member": value}, [_bool_text(value)]


def _cmd_radical_member(args, ideal):
    f = parse_poly(args.poly, ideal.ring)
    value = radical_member(f, ideal)
    return {"radical_member": value}, [_bool_text(value)]


def _cmd_dim(args, ideal):
    try:
        d = quotient_dimension(ideal)
    except ImproperIdeal:
        return {"dimension": "improper"}, ["improper"]
    if d is INFINITE:
        return {"dimension": "infinite"}, ["infinite"]
    return {"dimension": d}, [str(d)]


def _cmd_maxideal(args, ideal):
    res = maximal_ideal_containing(ideal, seed=args.seed)
    M = res.ideal()
    checks = {
        "contains_source": all(not reduce(g, res.generators) for g in ideal.generators),
        "proper": is_proper(M),
        "dimension_matches": quotient_dimension(M) == res.residue_degree,
        "is_field": is_field(M),
    }
    maps = [_map_lines(mp) for mp in res.automorphisms]
    payload = {
        "chain": [str(m) for m in res.chain.polys],
        "automorphisms": maps,
        "generators": [str(g) for g in res.generators],
        "residue_degree": res.residue_degree,
        "verification": checks,
    }
    lines = ["chain:"]
    lines.extend(f"  {m}" for m in payload["chain"])
    lines.append("automorphisms:")
    lines.extend(f"  {step}" for mp in maps for step in mp)
    lines.append("generators:")
    lines.extend(f"  {g}" for g in payload["generators"])
    lines.append(f"residue degree: {res.residue_degree}")
    lines.append("verification:")
    lines.append(f"  contains source: {_bool_text(checks['contains_source'])}")
    lines.append(f"  proper: {_bool_text(checks['proper'])}")
    lines.append(f"  dimension matches: {_bool_text(checks['dimension_matches'])}")
    lines.append(f"  quotient is a field: {_bool_text(checks['is_field'])}")
    return payload, lines


def _cmd_normalize(args, ideal):
    f = parse_poly(args.poly, ideal.ring)
    mp = build_monicizer(f)
    image = mp.apply(f)
    steps = _map_lines(mp)
    payload = {
        "base": mp.base,
        "map": steps,
        "image": str(image),
        "degree": mp.predicted_degree(f),
    }
    lines = [f"base: {mp.base}", "map:"]
    lines.extend(f"  {step}" for step in steps)
    lines.append(f"image: {image}")
    lines.append(f"degree: {payload['degree']}")
    return payload, lines


def _cmd_resultant(args, ideal):
    ring = ideal.ring
    f = parse_poly(args.f, ring)
    g = parse_poly(args.g, ring)
    if args.var not in ring.names:
        raise UnknownVariable(f"unknown variable {args.var!r}")
    R = resultant(f, g, ring.names.index(args.var))
    return {"resultant": str(R)}, [str(R)]


def _cmd_points(args, ideal):
    if args.ext is not None:
        piece = variety_slice(ideal, args.ext)
        degree, points = piece.k, piece.points
    else:
        res = maximal_ideal_containing(ideal, seed=args.seed)
        ps = points_of_maximal_ideal(res)
        degree, points = ps.extension_degree, ps.points
    payload = {
        "extension_degree": degree,
        "points": [[str(c) for c in pt] for pt in points],
    }
    lines = [f"extension degree: {degree}", "points:"]
    lines.extend(f"  {_point_text(pt)}" for pt in points)
    return payload, lines


_HANDLERS = {
    "gb": _cmd_gb,
    "proper": _cmd_proper,
    "member": _cmd_member,
    "radical-member": _cmd_radical_member,
    "dim": _cmd_dim,
    "maxideal": _cmd_maxideal,
    "normalize": _cmd_normalize,
    "resultant": _cmd_resultant,
    "points": _cmd_points,
}


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="ideal file; stdin when omitted")
    common.add_argument("--json", action="store_true", help="fixed-key JSON output")
    common.add_argument("--seed", type=int, default=0, help="seed for seeded constructions")
    ap = argparse.ArgumentParser(prog="nullkit", description="exact ideal arithmetic over QQ and finite fields")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("gb", parents=[common], help="reduced lex Groebner basis")
    sub.add_parser("proper", parents=[common], help="whether the ideal is proper")
    p = sub.add_parser("member", parents=[common], help="ideal membership of a polynomial")
    p.add_argument("poly")
    p = sub.add_parser("radical-member", parents=[common], help="radical membership of a polynomial")
    p.add_argument("poly")
    sub.add_parser("dim", parents=[common], help="quotient dimension")
    sub.add_parser("maxideal", parents=[common], help="a maximal ideal containing the input")
    p = sub.add_parser("normalize", parents=[common], help="shear a polynomial monic in the last variable")
    p.add_argument("poly")
    p = sub.add_parser("resultant", parents=[common], help="resultant of two polynomials in one variable")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("var")
    p = sub.add_parser("points", parents=[common], help="common zeros over an extension")
    p.add_argument("--ext", type=int, help="enumerate a slice of this degree instead")
    return ap


def _read_input(path):
    if path is None:
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    try:
        text = _read_input(args.input)
        ideal = parse_ideal(text)
        payload, lines = _HANDLERS[args.command](args, ideal)
        output = json.dumps(payload, indent=2) + "\n" if args.json else "".join(
            line + "\n" for line in lines
        )
    except NullkitError as err:
        if isinstance(err, InternalInvariantError):
            code = 4
        elif isinstance(err, UnsupportedField):
            code = 3
        else:
            code = 2
        print(f"error: {err}", file=sys.stderr)
        return code
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except Exception as err:
        print(f"internal error: {err}", file=sys.stderr)
        return 4
    sys.stdout.write(output)
    return 0

"""A small expression language over forms.

Grammar::

    expr   := sum
    sum    := prod { ("+" | "-") prod }
    prod   := unary { ("<>" | "^" | "/\\" | "_|") unary }
    unary  := "-" unary | call | atom
    call   := ident "(" args ")"
    atom   := rational | blade | frame | "one" | "vol" | "pplus" | "pminus" | "(" expr ")"
    blade  := "e" digits | "e{" int { "," int } "}"
    frame  := "E" int

``<>`` is the Graf product, ``^`` the wedge, ``/\\`` the triangle product and
``E<k> _| x`` the contraction of ``x`` by the k-th frame vector.  All four
infix products share one left-associative precedence tier; chaining two
different ones without parentheses is rejected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError, UsageError
from .forms import Form, Signature, contract, format_coeff, indices_of, involution, reversion, wedge
from .products import contracted_graf, contracted_wedge, graf, triangle, truncated_graf
from .structure import hodge, p_element, project_pm, truncate, volume

PRODUCT_OPS = ("<>", "^", "/\\", "_|")
SUM_OPS = ("+", "-")
CONSTANTS = ("one", "vol", "pplus", "pminus")
UNARY_FUNCS = ("hodge", "rev", "inv", "projp", "projm", "truncL", "truncU")
BINARY_FUNCS = ("tgp", "tgm")
ORDERED_FUNCS = ("cw", "cg")


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Scalar:
    value: Fraction

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("scalar literals are non-negative; wrap in Neg")


@dataclass(frozen=True)
class Blade:
    indices: tuple


@dataclass(frozen=True)
class Frame:
    index: int


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class Ordered:
    """``cw(l, a, b)`` or ``cg(l, a, b)``."""

    name: str
    order: int
    left: "Node"
    right: "Node"


Node = Union[Scalar, Blade, Frame, Const, Neg, BinOp, Call, Ordered]


# -- tokenizer ----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<braced>e\{[^}]*\})
  | (?P<op><>|/\\|_\||\^|\+|-|\(|\)|,)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z][A-Za-z0-9]*)
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str  # op, number, blade, frame, name, end
    text: str
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        col = pos - line_start + 1
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col)
        text = m.group()
        kind = m.lastgroup
        if kind == "ws":
            for k, ch in enumerate(text):
                if ch == "\n":
                    line += 1
                    line_start = pos + k + 1
        elif kind == "braced":
            inner = text[2:-1].split(",")
            if not all(part.strip().isdigit() for part in inner):
                raise ParseError(f"malformed blade literal {text!r}", line, col)
            tokens.append(Token("blade", text, line, col))
        elif kind == "ident":
            if re.fullmatch(r"e\d+", text):
                tokens.append(Token("blade", text, line, col))
            elif re.fullmatch(r"E\d+", text):
                tokens.append(Token("frame", text, line, col))
            else:
                tokens.append(Token("name", text, line, col))
        else:
            tokens.append(Token(kind, text, line, col))
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


def _blade_indices(text: str) -> tuple:
    if text.startswith("e{"):
        return tuple(int(part) for part in text[2:-1].split(","))
    return tuple(int(d) for d in text[1:])


# -- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, text):
        if self.tok.kind != "op" or self.tok.text != text:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def parse(self) -> Node:
        node = self.sum()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def sum(self) -> Node:
        node = self.prod()
        while self.tok.kind == "op" and self.tok.text in SUM_OPS:
            op = self.advance().text
            node = BinOp(op, node, self.prod())
        return node

    def prod(self) -> Node:
        start = self.tok
        node = self.unary(allow_frame=True)
        chain_op = None
        if isinstance(node, Frame) and not (self.tok.kind == "op" and self.tok.text == "_|"):
            raise self.error("a frame vector may only appear as the left operand of _|", start)
        while self.tok.kind == "op" and self.tok.text in PRODUCT_OPS:
            op_tok = self.advance()
            op = op_tok.text
            if chain_op is not None and op != chain_op:
                raise self.error(
                    f"mixing {chain_op!r} and {op!r} without parentheses is ambiguous", op_tok
                )
            chain_op = op
            if op == "_|" and not isinstance(node, Frame):
                raise self.error("left operand of _| must be a frame vector E<k>", op_tok)
            node = BinOp(op, node, self.unary(allow_frame=False))
        return node

    def unary(self, allow_frame=False) -> Node:
        tok = self.tok
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Neg(self.unary())
        if tok.kind == "number":
            self.advance()
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise self.error("zero denominator", tok)
            return Scalar(Fraction(int(num), int(den) if den else 1))
        if tok.kind == "blade":
            self.advance()
            return Blade(_blade_indices(tok.text))
        if tok.kind == "frame":
            if not allow_frame:
                raise self.error("a frame vector may only appear as the left operand of _|", tok)
            self.advance()
            return Frame(int(tok.text[1:]))
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.sum()
            self.expect(")")
            return node
        if tok.kind == "name":
            return self.name()
        found = tok.text or "end of input"
        raise self.error(f"expected an operand, found {found!r}", tok)

    def name(self) -> Node:
        tok = self.advance()
        name = tok.text
        if name in CONSTANTS:
            return Const(name)
        if name not in UNARY_FUNCS + BINARY_FUNCS + ORDERED_FUNCS:
            raise self.error(f"unknown name {name!r}", tok)
        self.expect("(")
        if name in ORDERED_FUNCS:
            order_tok = self.tok
            if order_tok.kind != "number" or "/" in order_tok.text:
                raise self.error(f"{name} needs a non-negative integer order first", order_tok)
            self.advance()
            self.expect(",")
            left = self.sum()
            self.expect(",")
            right = self.sum()
            self.expect(")")
            return Ordered(name, int(order_tok.text), left, right)
        args = [self.sum()]
        while self.tok.kind == "op" and self.tok.text == ",":
            self.advance()
            args.append(self.sum())
        self.expect(")")
        want = 1 if name in UNARY_FUNCS else 2
        if len(args) != want:
            raise self.error(f"{name} takes {want} argument(s), got {len(args)}", tok)
        return Call(name, tuple(args))


def parse(src: str) -> Node:
    return _Parser(src).parse()


# -- printer ------------------------------------------------------------------

def to_source(node: Node) -> str:
    """Canonical text for ``node``; ``parse(to_source(node)) == node``."""
    if isinstance(node, Scalar):
        return format_coeff(node.value)
    if isinstance(node, Blade):
        if node.indices and all(1 <= i <= 9 for i in node.indices):
            return "e" + "".join(map(str, node.indices))
        return "e{" + ",".join(map(str, node.indices)) + "}"
    if isinstance(node, Frame):
        return f"E{node.index}"
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Neg):
        inner = to_source(node.operand)
        return "-" + (f"({inner})" if isinstance(node.operand, BinOp) else inner)
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_source(a) for a in node.args)})"
    if isinstance(node, Ordered):
        return f"{node.name}({node.order}, {to_source(node.left)}, {to_source(node.right)})"
    if isinstance(node, BinOp):
        left, right = to_source(node.left), to_source(node.right)
        if node.op in SUM_OPS:
            if isinstance(node.right, BinOp) and node.right.op in SUM_OPS:
                right = f"({right})"
        else:
            if isinstance(node.left, BinOp) and node.left.op != node.op:
                left = f"({left})"
            if isinstance(node.right, BinOp):
                right = f"({right})"
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ---------------------------------------------------------------

def evaluate(node: Node, sig: Signature) -> Form:
    if isinstance(node, str):
        node = parse(node)
    return _eval(node, sig)


def _eval(node: Node, sig: Signature) -> Form:
    if isinstance(node, Scalar):
        return Form.scalar(sig, node.value)
    if isinstance(node, Blade):
        for i in node.indices:
            if not 1 <= i <= sig.n:
                raise UsageError(f"blade index {i} outside 1..{sig.n} for signature {sig}")
        return Form.blade(sig, node.indices)
    if isinstance(node, Const):
        if node.name == "one":
            return Form.one(sig)
        if node.name == "vol":
            return volume(sig)
        return p_element(1 if node.name == "pplus" else -1, sig)
    if isinstance(node, Neg):
        return -_eval(node.operand, sig)
    if isinstance(node, BinOp):
        if node.op == "_|":
            k = node.left.index
            if not 1 <= k <= sig.n:
                raise UsageError(f"frame index {k} outside 1..{sig.n} for signature {sig}")
            return contract(k, _eval(node.right, sig))
        a, b = _eval(node.left, sig), _eval(node.right, sig)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "<>":
            return graf(a, b)
        if node.op == "^":
            return wedge(a, b)
        return triangle(a, b)
    if isinstance(node, Ordered):
        a, b = _eval(node.left, sig), _eval(node.right, sig)
        fn = contracted_wedge if node.name == "cw" else contracted_graf
        return fn(node.order, a, b)
    if isinstance(node, Call):
        args = [_eval(a, sig) for a in node.args]
        name = node.name
        if name == "hodge":
            return hodge(args[0])
        if name == "rev":
            return reversion(args[0])
        if name == "inv":
            return involution(args[0])
        if name == "projp":
            return project_pm(1, args[0])
        if name == "projm":
            return project_pm(-1, args[0])
        if name == "truncL":
            return truncate("L", args[0])
        if name == "truncU":
            return truncate("U", args[0])
        return truncated_graf(1 if name == "tgp" else -1, *args)
    if isinstance(node, Frame):
        raise UsageError("a frame vector is not a form")
    raise TypeError(f"not an expression node: {node!r}")


def form_to_source(f: Form) -> str:
    """An expression that evaluates back to ``f`` (used for counterexample reports)."""
    if not f:
        return "0"
    parts = []
    for m, c in f:
        blade = to_source(Blade(indices_of(m))) if m else None
        mag = abs(c)
        if blade is None:
            term = format_coeff(mag)
        elif mag == 1:
            term = blade
        else:
            term = f"{format_coeff(mag)} ^ {blade}"
        parts.append(("-" if c < 0 else "+", term))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


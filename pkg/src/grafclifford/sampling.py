"""Seeded random forms and expression trees for the property suites."""
from __future__ import annotations

import random
from fractions import Fraction

from .expr import BINARY_FUNCS, CONSTANTS, UNARY_FUNCS, BinOp, Blade, Call, Const, Frame, Neg, Ordered, Scalar
from .forms import Form, Signature, grade_of


def random_coeff(rng: random.Random) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-6, 6)
    return Fraction(num, rng.choice((1, 1, 2, 3, 4)))


def random_form(sig: Signature, rng: random.Random, max_terms: int = 6, grades=None) -> Form:
    """A nonzero form with 1..max_terms random blades (restricted to ``grades`` if given)."""
    pool = [m for m in range(1 << sig.n) if grades is None or grade_of(m) in grades]
    k = rng.randint(1, min(max_terms, len(pool)))
    return Form(sig, {m: random_coeff(rng) for m in rng.sample(pool, k)})


def random_lower_form(sig: Signature, rng: random.Random, max_terms: int = 6) -> Form:
    """Random element of Γ_L (grades 0..floor(n/2))."""
    return random_form(sig, rng, max_terms, grades=range(sig.n // 2 + 1))


def random_one_form(sig: Signature, rng: random.Random) -> Form:
    return Form(sig, {1 << (i - 1): random_coeff(rng) for i in range(1, sig.n + 1) if rng.random() < 0.8})


def random_ast(rng: random.Random, depth: int = 6, n: int = 4):
    """Random well-formed expression tree of depth <= ``depth`` over indices 1..n."""
    if depth <= 1 or rng.random() < 0.25:
        kind = rng.randrange(3)
        if kind == 0:
            return Scalar(Fraction(rng.randint(0, 9), rng.randint(1, 4)))
        if kind == 1:
            k = rng.randint(1, n)
            return Blade(tuple(sorted(rng.sample(range(1, n + 1), k))))
        return Const(rng.choice(CONSTANTS))
    sub = lambda: random_ast(rng, depth - 1, n)  # noqa: E731
    kind = rng.randrange(6)
    if kind == 0:
        return Neg(sub())
    if kind == 1:
        return BinOp(rng.choice(("+", "-")), sub(), sub())
    if kind == 2:
        op = rng.choice(("<>", "^", "/\\"))
        return BinOp(op, sub(), sub())
    if kind == 3:
        return BinOp("_|", Frame(rng.randint(1, n)), sub())
    if kind == 4:
        name = rng.choice(UNARY_FUNCS + BINARY_FUNCS)
        arity = 1 if name in UNARY_FUNCS else 2
        return Call(name, tuple(sub() for _ in range(arity)))
    return Ordered(rng.choice(("cw", "cg")), rng.randint(0, 3), sub(), sub())


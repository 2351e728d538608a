"""Contracted wedge, Graf product and the products derived from them.

Everything is evaluated on blade pairs and extended bilinearly.  The blade
level follows the recursive definitions literally (metric-paired
contraction of both factors, one order at a time) and is memoised per
metric, so a blade pair is expanded at most once per process.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import UnsupportedInput, UsageError
from .forms import Form, _same_sig, grade_of, wedge, wedge_blades


def _parity(e: int) -> int:
    return -1 if e & 1 else 1


def graf_coefficient(l: int, r: int) -> Fraction:
    """Weight of f1 ∧_l f2 in f1 ⋄ f2 for an r-form f1 (r <= grade f2)."""
    return Fraction(_parity(l * (r - l) + l // 2), factorial(l))


def reversed_coefficient(l: int, r: int) -> Fraction:
    """Weight of f1 ∧_l f2 in f2 ⋄ f1 (before the overall (-1)^(rs)); also the △ weight."""
    return Fraction(_parity(l * (r - l + 1) + l // 2), factorial(l))


# -- blade level --------------------------------------------------------------

def _paired_contractions(a: int, b: int, metric: tuple):
    """Yield (g^{ii} * sign_a * sign_b, e_i⌟a, e_i⌟b) for every i where neither contraction vanishes.

    With a diagonal metric only the i == j terms of the double sum survive, and
    e_i⌟e^B = 0 unless i is in B.
    """
    shared = a & b
    while shared:
        bit = shared & -shared
        shared ^= bit
        below = bit - 1
        s = metric[bit.bit_length() - 1]
        if (a & below).bit_count() & 1:
            s = -s
        if (b & below).bit_count() & 1:
            s = -s
        yield s, a ^ bit, b ^ bit


@lru_cache(maxsize=None)
def _cw_blades(l: int, a: int, b: int, metric: tuple) -> tuple:
    if l == 0:
        s, m = wedge_blades(a, b)
        return ((m, s),) if s else ()
    if l > grade_of(a) or l > grade_of(b):
        return ()
    acc: dict[int, int] = {}
    # inlined _paired_contractions: this is the hot loop
    shared = a & b
    while shared:
        bit = shared & -shared
        shared ^= bit
        below = bit - 1
        w = metric[bit.bit_length() - 1]
        if ((a & below).bit_count() + (b & below).bit_count()) & 1:
            w = -w
        for m, c in _cw_blades(l - 1, a ^ bit, b ^ bit, metric):
            acc[m] = acc.get(m, 0) + w * c
    return tuple((m, c) for m, c in acc.items() if c)


@lru_cache(maxsize=None)
def _graf_blades(a: int, b: int, metric: tuple) -> tuple:
    r, s = grade_of(a), grade_of(b)
    acc: dict[int, Fraction] = {}
    if r <= s:
        for l in range(r + 1):
            w = graf_coefficient(l, r)
            for m, c in _cw_blades(l, a, b, metric):
                acc[m] = acc.get(m, 0) + w * c
    else:
        # b is the lower-grade factor f1, a is f2: a ⋄ b = f2 ⋄ f1
        outer = _parity(r * s)
        for l in range(s + 1):
            w = outer * reversed_coefficient(l, s)
            for m, c in _cw_blades(l, b, a, metric):
                acc[m] = acc.get(m, 0) + w * c
    return tuple((m, c) for m, c in acc.items() if c)


@lru_cache(maxsize=None)
def _cg_blades(l: int, a: int, b: int, metric: tuple) -> tuple:
    if l == 0:
        return _graf_blades(a, b, metric)
    acc: dict[int, Fraction] = {}
    for w, ra, rb in _paired_contractions(a, b, metric):
        for m, c in _cg_blades(l - 1, ra, rb, metric):
            acc[m] = acc.get(m, 0) + w * c
    return tuple((m, c) for m, c in acc.items() if c)


def clear_caches():
    _cw_blades.cache_clear()
    _graf_blades.cache_clear()
    _cg_blades.cache_clear()


def _bilinear(a: Form, b: Form, blade_product) -> Form:
    sig = _same_sig(a, b)
    acc: dict[int, Fraction] = {}
    for ma, ca in a:
        for mb, cb in b:
            cab = ca * cb
            for m, c in blade_product(ma, mb, sig.metric):
                acc[m] = acc.get(m, 0) + cab * c
    return Form(sig, acc)


def _check_order(l):
    if not isinstance(l, int) or l < 0:
        raise UsageError(f"contraction order must be a non-negative integer, got {l!r}")


# -- public products ----------------------------------------------------------

def contracted_wedge(l: int, a: Form, b: Form) -> Form:
    """Contracted wedge product a ∧_l b; ``l = 0`` is the plain wedge."""
    _check_order(l)
    if l == 0:
        return wedge(a, b)
    return _bilinear(a, b, lambda x, y, g: _cw_blades(l, x, y, g))


def graf(a: Form, b: Form) -> Form:
    """Graf product a ⋄ b, extended bilinearly over grade components."""
    return _bilinear(a, b, _graf_blades)


def graf_forward(f1: Form, f2: Form) -> Form:
    """f1 ⋄ f2 by the r <= s expansion, for homogeneous f1 (grade r) and f2 (grade s)."""
    r, s = _homogeneous_grades(f1, f2)
    if r > s:
        raise UnsupportedInput(f"forward expansion needs grade {r} <= grade {s}")
    out = Form.zero(f1.sig)
    for l in range(r + 1):
        out = out + graf_coefficient(l, r) * contracted_wedge(l, f1, f2)
    return out


def graf_reversed(f1: Form, f2: Form) -> Form:
    """f2 ⋄ f1 by the reversed-order expansion, for homogeneous f1 (grade r) <= f2 (grade s)."""
    r, s = _homogeneous_grades(f1, f2)
    if r > s:
        raise UnsupportedInput(f"reversed expansion needs grade {r} <= grade {s}")
    out = Form.zero(f1.sig)
    for l in range(r + 1):
        out = out + reversed_coefficient(l, r) * contracted_wedge(l, f1, f2)
    return _parity(r * s) * out


def _homogeneous_grades(f1: Form, f2: Form) -> tuple[int, int]:
    _same_sig(f1, f2)
    if not f1 or not f2:
        raise UsageError("expansions need nonzero homogeneous forms")
    return f1.grade, f2.grade


def contracted_graf(l: int, a: Form, b: Form) -> Form:
    """Contracted Graf product a ⋄_l b; ``l = 0`` is the Graf product."""
    _check_order(l)
    return _bilinear(a, b, lambda x, y, g: _cg_blades(l, x, y, g))


def triangle(a: Form, b: Form) -> Form:
    """The △ product, defined only when every grade of ``a`` is <= every grade of ``b``."""
    sig = _same_sig(a, b)
    a_parts, b_parts = a.grade_components(), b.grade_components()
    for r, _ in a_parts:
        for s, _ in b_parts:
            if r > s:
                raise UnsupportedInput(
                    f"△ is only defined for grade(left) <= grade(right); got components of grades {r} and {s}"
                )
    out = Form.zero(sig)
    for r, x in a_parts:
        for _, y in b_parts:
            for l in range(r + 1):
                out = out + reversed_coefficient(l, r) * contracted_graf(l, x, y)
    return out


def truncated_graf(sign: int, a: Form, b: Form) -> Form:
    """Truncated Graf product 2 P_L(P±(a) ⋄ P±(b)); ``sign`` is +1 or -1."""
    from .structure import project_pm, truncate

    _same_sig(a, b)
    return 2 * truncate("L", graf(project_pm(sign, a), project_pm(sign, b)))


# -- dispatch -----------------------------------------------------------------

_KINDS = ("wedge", "cw", "graf", "cg", "triangle", "tgp", "tgm")


@dataclass(frozen=True)
class ProductKind:
    """A binary product selectable by name; ``cw`` and ``cg`` carry an order."""

    name: str
    order: int = 0

    def __post_init__(self):
        if self.name not in _KINDS:
            raise UsageError(f"unknown product {self.name!r}; expected one of {', '.join(_KINDS)}")
        _check_order(self.order)
        if self.order and self.name not in ("cw", "cg"):
            raise UsageError(f"product {self.name!r} takes no order")

    @classmethod
    def parse(cls, text: str) -> "ProductKind":
        """Parse ``graf``, ``wedge``, ``triangle``, ``tgp``, ``tgm``, ``cw:2``, ``cg:1``."""
        name, _, order = text.strip().partition(":")
        if name in ("cw", "cg"):
            if not order.isdigit():
                raise UsageError(f"product {name!r} needs an order, e.g. {name}:1")
            return cls(name, int(order))
        if order:
            raise UsageError(f"product {name!r} takes no order")
        return cls(name)

    def __str__(self):
        return f"{self.name}:{self.order}" if self.name in ("cw", "cg") else self.name

    def apply(self, a: Form, b: Form) -> Form:
        if self.name == "wedge":
            return wedge(a, b)
        if self.name == "cw":
            return contracted_wedge(self.order, a, b)
        if self.name == "graf":
            return graf(a, b)
        if self.name == "cg":
            return contracted_graf(self.order, a, b)
        if self.name == "triangle":
            return triangle(a, b)
        return truncated_graf(1 if self.name == "tgp" else -1, a, b)

"""Forms over an orthonormal coframe.

A basis blade e^{i1...ik} (i1 < ... < ik) is encoded as an integer bitmask,
bit ``i - 1`` standing for the coframe index ``i``.  A :class:`Form` is a
sparse map from blades to exact :class:`fractions.Fraction` coefficients and
carries the :class:`Signature` it lives over.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .errors import SignatureMismatch, UsageError

MAX_DIM = 16


@dataclass(frozen=True)
class Signature:
    """Signature (p, q) of an orthonormal coframe.

    By default the first ``p`` coframe directions square to +1 and the
    remaining ``q`` to -1.  :meth:`from_metric` accepts any ordering of the
    diagonal entries.
    """

    p: int
    q: int
    metric: tuple = field(default=None)

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise UsageError("signature entries must be integers")
        if self.p < 0 or self.q < 0:
            raise UsageError(f"negative signature ({self.p},{self.q})")
        n = self.p + self.q
        if not 1 <= n <= MAX_DIM:
            raise UsageError(f"dimension n={n} outside 1..{MAX_DIM}")
        if self.metric is None:
            object.__setattr__(self, "metric", (1,) * self.p + (-1,) * self.q)
        else:
            metric = tuple(int(g) for g in self.metric)
            if len(metric) != n or any(g not in (1, -1) for g in metric):
                raise UsageError(f"metric {self.metric!r} is not a ±1 diagonal of length {n}")
            if metric.count(1) != self.p:
                raise UsageError(f"metric {self.metric!r} does not have signature ({self.p},{self.q})")
            object.__setattr__(self, "metric", metric)

    @classmethod
    def from_metric(cls, metric: Iterable[int]) -> "Signature":
        metric = tuple(metric)
        return cls(metric.count(1), len(metric) - metric.count(1), metric)

    @property
    def n(self) -> int:
        return self.p + self.q

    def g(self, i: int) -> int:
        """Diagonal metric entry g^{ii} for the 1-based coframe index ``i``."""
        if not 1 <= i <= self.n:
            raise UsageError(f"coframe index {i} outside 1..{self.n}")
        return self.metric[i - 1]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def blades(self) -> list[int]:
        """All 2^n basis blades in canonical order."""
        return sorted(range(1 << self.n), key=blade_key)

    def blades_of_grade(self, k: int) -> list[int]:
        return [b for b in self.blades() if grade_of(b) == k]

    def __str__(self):
        return f"({self.p},{self.q})"


def signatures_up_to(max_n: int) -> list[Signature]:
    """Every signature with 1 <= p + q <= max_n, ordered by n then p."""
    return [Signature(p, n - p) for n in range(1, max_n + 1) for p in range(n, -1, -1)]


# -- blades -------------------------------------------------------------------

def grade_of(mask: int) -> int:
    return mask.bit_count()


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if i < 1:
            raise UsageError(f"coframe index {i} must be >= 1")
        bit = 1 << (i - 1)
        if mask & bit:
            raise UsageError(f"repeated index {i} in blade")
        mask |= bit
    return mask


def blade_key(mask: int) -> tuple:
    """Canonical order: by grade, then lexicographic on the index tuple."""
    return (grade_of(mask), indices_of(mask))


def render_blade(mask: int, n: int) -> str:
    if mask == 0:
        return "1"
    idx = indices_of(mask)
    if n > 9:
        return "e{" + ",".join(map(str, idx)) + "}"
    return "e" + "".join(map(str, idx))


def wedge_blades(a: int, b: int) -> tuple[int, int]:
    """Return ``(sign, mask)`` of e^A ∧ e^B; sign is 0 when A and B overlap."""
    if a & b:
        return 0, 0
    swaps = 0
    rest = b
    while rest:
        low = rest & -rest
        # indices of A above this index of B must hop over it
        swaps += (a & ~((low << 1) - 1)).bit_count()
        rest ^= low
    return (-1 if swaps & 1 else 1), a | b


def contract_blade(i: int, mask: int) -> tuple[int, int]:
    """Return ``(sign, mask)`` of e_i ⌟ e^B; sign is 0 when i is not in B."""
    bit = 1 << (i - 1)
    if not mask & bit:
        return 0, 0
    pos = (mask & (bit - 1)).bit_count()
    return (-1 if pos & 1 else 1), mask ^ bit


# -- coefficients -------------------------------------------------------------

def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"coefficient {value!r} is not an exact rational")


def format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# -- forms --------------------------------------------------------------------

class Form:
    """Immutable sparse linear combination of basis blades."""

    __slots__ = ("sig", "_terms", "_hash")

    def __init__(self, sig: Signature, terms: Mapping[int, object] | Iterable = ()):
        self.sig = sig
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        full = sig.full_mask
        for mask, c in items:
            if mask & ~full or mask < 0:
                raise UsageError(f"blade {indices_of(mask)} outside dimension {sig.n}")
            acc[mask] = acc.get(mask, Fraction(0)) + as_fraction(c)
        self._terms = {m: acc[m] for m in sorted(acc, key=blade_key) if acc[m] != 0}
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, sig: Signature) -> "Form":
        return cls(sig)

    @classmethod
    def scalar(cls, sig: Signature, c=1) -> "Form":
        return cls(sig, {0: c})

    one = scalar

    @classmethod
    def blade(cls, sig: Signature, indices: Iterable[int], coeff=1) -> "Form":
        """e^{i1} ∧ ... ∧ e^{ik} in the order given, so ``blade(sig, (2, 1))`` is -e12."""
        indices = tuple(indices)
        sign, mask = 1, 0
        for i in indices:
            if not 1 <= i <= sig.n:
                raise UsageError(f"coframe index {i} outside 1..{sig.n}")
            s, mask = wedge_blades(mask, 1 << (i - 1))
            sign *= s
        return cls(sig, {mask: sign * as_fraction(coeff)}) if sign else cls(sig)

    @classmethod
    def from_mask(cls, sig: Signature, mask: int, coeff=1) -> "Form":
        return cls(sig, {mask: coeff})

    # inspection
    @property
    def terms(self) -> Mapping[int, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    def grades(self) -> list[int]:
        return sorted({grade_of(m) for m in self._terms})

    @property
    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    @property
    def grade(self) -> int:
        """Grade of a nonzero homogeneous form."""
        gs = self.grades()
        if len(gs) != 1:
            raise UsageError(f"form {self} is not homogeneous of a single grade")
        return gs[0]

    def max_grade(self) -> int:
        return max(self.grades(), default=-1)

    def grade_components(self) -> list[tuple[int, "Form"]]:
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(grade_of(m), {})[m] = c
        return [(k, Form(self.sig, parts[k])) for k in sorted(parts)]

    # arithmetic
    def _check(self, other: "Form"):
        if not isinstance(other, Form):
            raise TypeError(f"expected Form, got {type(other).__name__}")
        if other.sig != self.sig:
            raise SignatureMismatch(f"signature {self.sig} vs {other.sig}")

    def __add__(self, other):
        if not isinstance(other, Form):
            other = Form.scalar(self.sig, as_fraction(other))
        self._check(other)
        return Form(self.sig, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Form(self.sig, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Form):
            other = Form.scalar(self.sig, as_fraction(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, scalar):
        if isinstance(scalar, Form):
            return NotImplemented
        c = as_fraction(scalar)
        return Form(self.sig, {m: c * v for m, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / as_fraction(scalar))

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.sig == other.sig and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sig, tuple(self._terms.items())))
        return self._hash

    # rendering
    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            name = render_blade(m, self.sig.n)
            if m == 0:
                body = format_coeff(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{format_coeff(mag)}*{name}"
            if i == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"Form({self.sig}, {self})"

    def term_list(self) -> str:
        """Signed term list such as ``+1*e12 -1/2*e3``; ``0`` for the zero form."""
        if not self._terms:
            return "0"
        return " ".join(
            f"{'-' if c < 0 else '+'}{format_coeff(abs(c))}*{render_blade(m, self.sig.n)}"
            for m, c in self._terms.items()
        )


def _same_sig(a: Form, b: Form) -> Signature:
    if not isinstance(a, Form) or not isinstance(b, Form):
        raise TypeError("operands must be Form instances")
    if a.sig != b.sig:
        raise SignatureMismatch(f"signature {a.sig} vs {b.sig}")
    return a.sig


def wedge(a: Form, b: Form) -> Form:
    sig = _same_sig(a, b)
    acc: dict[int, Fraction] = {}
    for ma, ca in a:
        for mb, cb in b:
            s, m = wedge_blades(ma, mb)
            if s:
                acc[m] = acc.get(m, 0) + s * ca * cb
    return Form(sig, acc)


def contract(i: int, f: Form) -> Form:
    """Left contraction e_i ⌟ f by the frame vector dual to e^i."""
    if not isinstance(i, int) or not 1 <= i <= f.sig.n:
        raise UsageError(f"frame index {i} outside 1..{f.sig.n}")
    acc = {}
    for m, c in f:
        s, r = contract_blade(i, m)
        if s:
            acc[r] = s * c
    return Form(f.sig, acc)


def grade_part(k: int, f: Form) -> Form:
    if not 0 <= k <= f.sig.n:
        raise UsageError(f"grade {k} outside 0..{f.sig.n}")
    return Form(f.sig, {m: c for m, c in f if grade_of(m) == k})


def involution(f: Form) -> Form:
    """Grade involution: the grade-k part picks up (-1)^k."""
    return Form(f.sig, {m: (-c if grade_of(m) & 1 else c) for m, c in f})


def reversion(f: Form) -> Form:
    """Reversion: the grade-k part picks up (-1)^(k(k-1)/2)."""
    return Form(f.sig, {m: (-c if (grade_of(m) * (grade_of(m) - 1) // 2) & 1 else c) for m, c in f})

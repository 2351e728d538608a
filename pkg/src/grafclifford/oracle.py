"""Reference implementations used as ground truth.

These deliberately avoid the bitmask helpers and the recursive definitions
used by the kernel: blades are plain index tuples, signs come from counting
adjacent swaps while sorting, and the contracted wedge is the fully
unfolded l-fold sum.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import UsageError
from .forms import Form, Signature, indices_of, render_blade

SWEEP_MAX_N = 10


def _sort_with_parity(word: list[int]) -> tuple[int, list[int]]:
    """Bubble sort ``word``; return (number of swaps of distinct letters, sorted word)."""
    word = list(word)
    swaps = 0
    for end in range(len(word) - 1, 0, -1):
        for j in range(end):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                swaps += 1
    return swaps, word


def clifford_word(word, metric) -> tuple[int, tuple[int, ...]]:
    """Reduce a product of generators e^{w1} e^{w2} ... to (sign, sorted distinct indices)."""
    swaps, ordered = _sort_with_parity(word)
    sign = -1 if swaps % 2 else 1
    out = []
    k = 0
    while k < len(ordered):
        if k + 1 < len(ordered) and ordered[k] == ordered[k + 1]:
            sign *= metric[ordered[k] - 1]
            k += 2
        else:
            out.append(ordered[k])
            k += 1
    return sign, tuple(out)


def oracle_clifford_blades(a: tuple, b: tuple, sig: Signature) -> tuple[int, tuple]:
    return clifford_word(list(a) + list(b), sig.metric)


def _to_mask(idx: tuple) -> int:
    return sum(1 << (i - 1) for i in idx)


def oracle_clifford(a: Form, b: Form) -> Form:
    """Clifford product on the orthonormal generators, extended bilinearly."""
    if a.sig != b.sig:
        raise UsageError(f"signature {a.sig} vs {b.sig}")
    sig = a.sig
    terms = []
    for ma, ca in a:
        for mb, cb in b:
            s, idx = oracle_clifford_blades(indices_of(ma), indices_of(mb), sig)
            terms.append((_to_mask(idx), s * ca * cb))
    return Form(sig, terms)


def _contract_tuple(i: int, blade: tuple) -> tuple[int, tuple]:
    if i not in blade:
        return 0, ()
    pos = blade.index(i)
    return (-1) ** pos, blade[:pos] + blade[pos + 1:]


def _wedge_tuples(a: tuple, b: tuple) -> tuple[int, tuple]:
    word = list(a) + list(b)
    if len(set(word)) < len(word):
        return 0, ()
    swaps, ordered = _sort_with_parity(word)
    return (-1) ** swaps, tuple(ordered)


def oracle_contracted_wedge(l: int, a: Form, b: Form) -> Form:
    """a ∧_l b as the unfolded sum over ordered l-tuples of metric-paired contractions."""
    if l < 0:
        raise UsageError("order must be non-negative")
    if a.sig != b.sig:
        raise UsageError(f"signature {a.sig} vs {b.sig}")
    sig = a.sig
    metric = sig.metric
    terms = []
    for ma, ca in a:
        ta = indices_of(ma)
        for mb, cb in b:
            tb = indices_of(mb)
            # e_i⌟ kills a blade without i, and a second e_i⌟ kills what is left,
            # so only ordered tuples of distinct shared indices contribute
            shared = [i for i in range(1, sig.n + 1) if i in ta and i in tb]
            for path in itertools.permutations(shared, l):
                coeff = 1
                x, y = ta, tb
                for i in path:
                    sx, x = _contract_tuple(i, x)
                    sy, y = _contract_tuple(i, y)
                    coeff *= metric[i - 1] * sx * sy
                    if not coeff:
                        break
                if not coeff:
                    continue
                sw, w = _wedge_tuples(x, y)
                if sw:
                    terms.append((_to_mask(w), coeff * sw * ca * cb))
    return Form(sig, terms)


@dataclass
class OracleReport:
    signature: Signature
    pairs_checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "signature": {"p": self.signature.p, "q": self.signature.q},
            "pairs_checked": self.pairs_checked,
            "pass": self.passed,
            "mismatches": [
                {"left": l, "right": r, "kernel": k, "oracle": o} for l, r, k, o in self.mismatches
            ],
        }


def full_sweep(sig: Signature, product=None) -> OracleReport:
    """Compare ``product`` (default: the Graf product) with the oracle on every ordered blade pair."""
    if sig.n > SWEEP_MAX_N:
        raise UsageError(f"full sweep limited to n <= {SWEEP_MAX_N}, got n = {sig.n}")
    if product is None:
        from .products import graf as product
    report = OracleReport(sig)
    n = sig.n
    blades = [(m, Form.from_mask(sig, m)) for m in sig.blades()]
    for ma, fa in blades:
        for mb, fb in blades:
            kernel = product(fa, fb)
            expected = oracle_clifford(fa, fb)
            report.pairs_checked += 1
            if kernel != expected:
                report.mismatches.append(
                    (render_blade(ma, n), render_blade(mb, n), str(kernel), str(expected))
                )
    return report


__all__ = [
    "OracleReport",
    "clifford_word",
    "full_sweep",
    "oracle_clifford",
    "oracle_clifford_blades",
    "oracle_contracted_wedge",
]

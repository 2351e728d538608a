"""Volume element, Hodge operator, the projectors P± and P_L/P_U, and the
truncated subalgebra isomorphism."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import UnsupportedSignature, UsageError
from .forms import Form, Signature, grade_of
from .products import contracted_wedge, graf

SPLIT_CLASSES = frozenset({0, 1, 4, 5})


@dataclass(frozen=True)
class Mod8Class:
    """Classification of a signature by (p - q) mod 8."""

    s: int
    v_square_sign: int
    splitting_exists: bool
    v_central: bool

    @classmethod
    def of(cls, sig: Signature) -> "Mod8Class":
        s = (sig.p - sig.q) % 8
        split = s in SPLIT_CLASSES
        return cls(s=s, v_square_sign=1 if split else -1, splitting_exists=split, v_central=sig.n % 2 == 1)


def closed_form_square_sign(sig: Signature) -> int:
    """(-1)^(floor(n/2) + q)."""
    return -1 if (sig.n // 2 + sig.q) & 1 else 1


def subalgebra_conditions(sig: Signature) -> bool:
    """n odd and (p - q) mod 8 in {0, 1, 4, 5}."""
    return sig.n % 2 == 1 and Mod8Class.of(sig).splitting_exists


class SplitMembership(enum.Enum):
    GAMMA_PLUS = "GammaPlus"
    GAMMA_MINUS = "GammaMinus"
    GAMMA_L = "GammaL"
    GAMMA_U = "GammaU"


def _sign(sign) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-"):
        return -1
    raise UsageError(f"sign must be + or -, got {sign!r}")


def volume(sig: Signature) -> Form:
    return Form.from_mask(sig, sig.full_mask)


def volume_square(sig: Signature) -> Form:
    v = volume(sig)
    return graf(v, v)


def hodge(f: Form) -> Form:
    """⋆f = f ⋄ v (no reversion of f)."""
    return graf(f, volume(f.sig))


def hodge_via_contraction(f: Form) -> Form:
    """⋆f evaluated grade by grade as (1/r!)(-1)^(floor(r/2)) f ∧_r v."""
    v = volume(f.sig)
    out = Form.zero(f.sig)
    for r, part in f.grade_components():
        w = Fraction(-1 if (r // 2) & 1 else 1, factorial(r))
        out = out + w * contracted_wedge(r, part, v)
    return out


def p_element(sign, sig: Signature) -> Form:
    """p± = (1 ± v)/2."""
    return (Form.one(sig) + _sign(sign) * volume(sig)) / 2


def project_pm(sign, f: Form) -> Form:
    """P±(f) = (f ± ⋆f)/2, the right ⋄-multiplication by p±."""
    return (f + _sign(sign) * hodge(f)) / 2


def truncate(which: str, f: Form) -> Form:
    """Lower (``"L"``: grades 0..floor(n/2)) or upper (``"U"``) truncation."""
    half = f.sig.n // 2
    if which == "L":
        keep = lambda k: k <= half  # noqa: E731
    elif which == "U":
        keep = lambda k: k > half  # noqa: E731
    else:
        raise UsageError(f"truncation must be 'L' or 'U', got {which!r}")
    return Form(f.sig, {m: c for m, c in f if keep(grade_of(m))})


def in_gamma_L(f: Form) -> bool:
    return f.max_grade() <= f.sig.n // 2


def in_gamma_pm(sign, f: Form) -> bool:
    return project_pm(sign, f) == f


def memberships(f: Form) -> frozenset:
    """Which of the split spaces Γ+, Γ-, Γ_L, Γ_U contain ``f``.

    Γ± are only reported where the splitting Γ = Γ+ ⊕ Γ- exists.
    """
    tags = set()
    if in_gamma_L(f):
        tags.add(SplitMembership.GAMMA_L)
    if truncate("U", f) == f:
        tags.add(SplitMembership.GAMMA_U)
    if Mod8Class.of(f.sig).splitting_exists:
        if in_gamma_pm(1, f):
            tags.add(SplitMembership.GAMMA_PLUS)
        if in_gamma_pm(-1, f):
            tags.add(SplitMembership.GAMMA_MINUS)
    return frozenset(tags)


def split_reconstruct(f: Form) -> tuple[Form, Form]:
    """(P+ f, P- f); only where (p - q) mod 8 is 0, 1, 4 or 5."""
    cls = Mod8Class.of(f.sig)
    if not cls.splitting_exists:
        raise UnsupportedSignature(
            f"Γ = Γ+ ⊕ Γ- need not exist over the reals for {f.sig} ((p-q) mod 8 = {cls.s})"
        )
    return project_pm(1, f), project_pm(-1, f)


def _require_subalgebra(sig: Signature):
    if not subalgebra_conditions(sig):
        raise UnsupportedSignature(
            f"the truncated isomorphism needs n odd and (p-q) mod 8 in {{0,1,4,5}}; got {sig}"
        )


def iso_to_gamma_pm(sign, f: Form) -> Form:
    """Γ_L → Γ±, f ↦ P±(f)."""
    _require_subalgebra(f.sig)
    if not in_gamma_L(f):
        raise UsageError(f"{f} has components above grade {f.sig.n // 2}; not in Γ_L")
    return project_pm(sign, f)


def iso_to_gamma_L(sign, f: Form) -> Form:
    """Γ± → Γ_L, f ↦ 2 P_L(f)."""
    _require_subalgebra(f.sig)
    if not in_gamma_pm(sign, f):
        raise UsageError(f"{f} is not fixed by P{'+' if _sign(sign) > 0 else '-'}")
    return 2 * truncate("L", f)


def centrality_check(f: Form) -> bool:
    v = volume(f.sig)
    return graf(f, v) == graf(v, f)


def find_non_central_witness(sig: Signature) -> Form | None:
    """First basis blade that does not commute with v, or None."""
    for m in sig.blades():
        f = Form.from_mask(sig, m)
        if not centrality_check(f):
            return f
    return None


def find_endomorphism_counterexample(sig: Signature, sign=1):
    """First blade pair (a, b) with P±(a ⋄ b) != P±(a) ⋄ P±(b), or None."""
    blades = [Form.from_mask(sig, m) for m in sig.blades()]
    for a in blades:
        pa = project_pm(sign, a)
        for b in blades:
            if project_pm(sign, graf(a, b)) != graf(pa, project_pm(sign, b)):
                return a, b
    return None

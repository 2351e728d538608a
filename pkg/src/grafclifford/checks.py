"""Identity suites run by ``grafclifford check`` and ``grafclifford sweep``.

Every suite returns a :class:`SuiteResult`; failures are report content,
never exceptions.  Counterexamples are recorded as expression strings that
can be pasted back into ``grafclifford eval``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .expr import form_to_source
from .forms import Form, Signature, grade_of, wedge
from .oracle import full_sweep, oracle_clifford, oracle_contracted_wedge
from .products import contracted_wedge, graf, triangle, truncated_graf
from .sampling import random_form, random_lower_form, random_one_form
from .structure import (
    Mod8Class,
    closed_form_square_sign,
    find_endomorphism_counterexample,
    find_non_central_witness,
    hodge,
    hodge_via_contraction,
    in_gamma_L,
    iso_to_gamma_L,
    iso_to_gamma_pm,
    p_element,
    project_pm,
    subalgebra_conditions,
    truncate,
    volume,
)

SUITES = ("volume", "hodge", "projectors", "truncated", "oracle", "centrality")
MAX_REPORTED = 5
TWO_PATH_EXHAUSTIVE_N = 4


def _src(f: Form) -> str:
    return f"({form_to_source(f)})"


@dataclass
class SuiteResult:
    suite: str
    passed: bool = True
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def expect(self, ok: bool, expression: str, got=None, expected=None):
        self.checked += 1
        if ok:
            return
        self.passed = False
        if len(self.counterexamples) < MAX_REPORTED:
            entry = {"expression": expression}
            if got is not None:
                entry["got"] = str(got)
            if expected is not None:
                entry["expected"] = str(expected)
            self.counterexamples.append(entry)

    def equal(self, got: Form, expected: Form, expression: str):
        self.expect(got == expected, expression, got, expected)

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }


def _rng(seed, sig: Signature, suite: str) -> random.Random:
    return random.Random(f"{seed}:{sig.p}:{sig.q}:{suite}")


# -- suites -------------------------------------------------------------------

def check_volume(sig: Signature, samples: int = 50, seed: int = 0) -> SuiteResult:
    res = SuiteResult("volume")
    v = volume(sig)
    square = graf(v, v)
    sign = closed_form_square_sign(sig)
    res.equal(square, Form.scalar(sig, sign), "vol <> vol")
    cls = Mod8Class.of(sig)
    res.expect(
        (sign == 1) == cls.splitting_exists and cls.v_square_sign == sign,
        f"(-1)^(floor(n/2)+q) = {sign} vs (p-q) mod 8 = {cls.s}",
    )
    return res


def check_hodge(sig: Signature, samples: int = 50, seed: int = 0) -> SuiteResult:
    res = SuiteResult("hodge")
    rng = _rng(seed, sig, "hodge")
    one, v = Form.one(sig), volume(sig)
    res.equal(hodge(one), v, "hodge(one)")
    res.equal(hodge(v), graf(v, v), "hodge(vol)")
    sign = Mod8Class.of(sig).v_square_sign
    for _ in range(samples):
        f = random_form(sig, rng)
        res.equal(hodge(hodge(f)), sign * f, f"hodge(hodge({form_to_source(f)}))")
        res.equal(hodge(f), hodge_via_contraction(f), f"hodge({form_to_source(f)}) two-path")
        k = rng.randint(0, sig.n)
        h = random_form(sig, rng, grades=(k,))
        res.expect(hodge(h).grades() == [sig.n - k], f"grade of hodge({form_to_source(h)})")
    return res


def check_projectors(sig: Signature, samples: int = 50, seed: int = 0) -> SuiteResult:
    """Projector identities in the form that holds in every signature.

    P±∘P± and P±∘P∓ are right multiplication by p±⋄p± and p±⋄p∓, which the
    case tables reduce to P±, 0 when (p-q) mod 8 is 0, 1, 4 or 5.
    """
    res = SuiteResult("projectors")
    rng = _rng(seed, sig, "projectors")
    cls = Mod8Class.of(sig)
    one, v = Form.one(sig), volume(sig)
    pp, pm = p_element(1, sig), p_element(-1, sig)
    res.equal(pp + pm, one, "pplus + pminus")
    if cls.splitting_exists:
        table = {(1, 1): pp, (-1, -1): pm, (1, -1): Form.zero(sig), (-1, 1): Form.zero(sig)}
    else:
        table = {(1, 1): v / 2, (-1, -1): -v / 2, (1, -1): one / 2, (-1, 1): one / 2}
    names = {1: "pplus", -1: "pminus"}
    for (s1, s2), expected in table.items():
        res.equal(graf(p_element(s1, sig), p_element(s2, sig)), expected, f"{names[s1]} <> {names[s2]}")
    for _ in range(samples):
        f = random_form(sig, rng)
        src = form_to_source(f)
        P = {s: project_pm(s, f) for s in (1, -1)}
        res.equal(P[1] + P[-1], f, f"projp({src}) + projm({src})")
        for s in (1, -1):
            res.equal(P[s], graf(f, p_element(s, sig)), f"proj({src}) vs ({src}) <> p")
            for t in (1, -1):
                res.equal(project_pm(t, P[s]), graf(f, table[s, t]), f"proj{t:+d}(proj{s:+d}({src}))")
            if cls.splitting_exists:
                res.equal(hodge(P[s]), s * P[s], f"hodge(proj{s:+d}({src}))")
    if cls.splitting_exists:
        res.notes.append("P± are complementary idempotents; Γ = Γ+ ⊕ Γ-")
    else:
        res.notes.append("p±⋄p± = ±v/2: P± are not idempotent in this class")
    return res


def check_truncated(sig: Signature, samples: int = 50, seed: int = 0) -> SuiteResult:
    res = SuiteResult("truncated")
    rng = _rng(seed, sig, "truncated")
    half = sig.n // 2
    for _ in range(samples):
        a, b = random_form(sig, rng), random_form(sig, rng)
        for s in (1, -1):
            t = truncated_graf(s, a, b)
            res.expect(t.max_grade() <= half, f"tg{'p' if s > 0 else 'm'}({_src(a)}, {_src(b)}) in Γ_L", t)
    if not subalgebra_conditions(sig):
        witness = find_endomorphism_counterexample(sig, 1) if sig.n <= 4 else None
        if witness:
            a, b = witness
            res.notes.append(f"P+ is not multiplicative here: projp({_src(a)} <> {_src(b)}) != projp{_src(a)} <> projp{_src(b)}")
        return res
    v = volume(sig)
    one = Form.one(sig)
    for s in (1, -1):
        tag = "p" if s > 0 else "m"
        res.equal(iso_to_gamma_pm(s, one), p_element(s, sig), f"proj{tag}(one)")
    for _ in range(samples):
        a, b = random_form(sig, rng), random_form(sig, rng)
        la, lb = random_lower_form(sig, rng), random_lower_form(sig, rng)
        res.equal(truncate("L", graf(la, v)), Form.zero(sig), f"truncL({_src(la)} <> vol)")
        for s in (1, -1):
            tag = "p" if s > 0 else "m"
            ab = graf(a, b)
            res.equal(project_pm(s, ab), graf(project_pm(s, a), project_pm(s, b)), f"proj{tag}({_src(a)} <> {_src(b)})")
            res.equal(truncated_graf(s, a, b), 2 * truncate("L", project_pm(s, ab)), f"tg{tag}({_src(a)}, {_src(b)}) refinement")
            res.equal(truncated_graf(s, la, one), la, f"tg{tag}({_src(la)}, one)")
            res.equal(truncated_graf(s, one, la), la, f"tg{tag}(one, {_src(la)})")
            ga, gb = iso_to_gamma_pm(s, la), iso_to_gamma_pm(s, lb)
            res.equal(iso_to_gamma_L(s, ga), la, f"2 truncL(proj{tag}({_src(la)}))")
            res.equal(iso_to_gamma_pm(s, iso_to_gamma_L(s, ga)), ga, f"proj{tag}(2 truncL({_src(ga)}))")
            res.equal(iso_to_gamma_pm(s, truncated_graf(s, la, lb)), graf(ga, gb), f"proj{tag}(tg{tag}({_src(la)}, {_src(lb)}))")
            res.equal(iso_to_gamma_L(s, graf(ga, gb)), truncated_graf(s, iso_to_gamma_L(s, ga), iso_to_gamma_L(s, gb)),
                      f"2 truncL({_src(ga)} <> {_src(gb)})")
    return res


def check_oracle(sig: Signature, samples: int = 50, seed: int = 0) -> SuiteResult:
    res = SuiteResult("oracle")
    rng = _rng(seed, sig, "oracle")
    report = full_sweep(sig)
    res.checked += report.pairs_checked
    for left, right, got, expected in report.mismatches:
        res.expect(False, f"{left} <> {right}", got, expected)
    n = sig.n
    blades = sig.blades()
    # contracted wedge: recursion vs unfolded sum
    if n <= TWO_PATH_EXHAUSTIVE_N:
        pairs = [(a, b) for a in blades for b in blades]
    else:
        pairs = [(rng.choice(blades), rng.choice(blades)) for _ in range(samples)]
    for a, b in pairs:
        fa, fb = Form.from_mask(sig, a), Form.from_mask(sig, b)
        for l in range(min(grade_of(a), grade_of(b)) + 1):
            res.equal(contracted_wedge(l, fa, fb), oracle_contracted_wedge(l, fa, fb), f"cw({l}, {_src(fa)}, {_src(fb)})")
    # disjoint blades: every contracted wedge vanishes and ⋄ is ∧
    for a in blades:
        for b in blades:
            if a & b:
                continue
            fa, fb = Form.from_mask(sig, a), Form.from_mask(sig, b)
            res.equal(graf(fa, fb), wedge(fa, fb), f"{_src(fa)} <> {_src(fb)}")
            for l in range(1, n + 1):
                res.equal(contracted_wedge(l, fa, fb), Form.zero(sig), f"cw({l}, {_src(fa)}, {_src(fb)})")
    # generators and △ on 1-forms
    e = [Form.blade(sig, (i,)) for i in range(1, n + 1)]
    for i in range(n):
        res.equal(graf(e[i], e[i]), Form.scalar(sig, sig.metric[i]), f"e{i + 1} <> e{i + 1}")
        res.equal(triangle(e[i], e[i]), Form.zero(sig), f"{_src(e[i])} /\\ {_src(e[i])}")
    for i, j in combinations(range(n), 2):
        res.equal(graf(e[i], e[j]), -graf(e[j], e[i]), f"{_src(e[i])} <> {_src(e[j])} anticommutes")
        res.equal(triangle(e[i], e[j]), wedge(e[i], e[j]), f"{_src(e[i])} /\\ {_src(e[j])}")
    for _ in range(samples):
        x, y = random_one_form(sig, rng), random_one_form(sig, rng)
        q = sum((c * c * sig.metric[m.bit_length() - 1] for m, c in x), start=0)
        res.equal(graf(x, x), Form.scalar(sig, q), f"{_src(x)} <> {_src(x)}")
        res.equal(triangle(x, y), wedge(x, y), f"{_src(x)} /\\ {_src(y)}")
        a, b, c = (random_form(sig, rng) for _ in range(3))
        res.equal(graf(graf(a, b), c), graf(a, graf(b, c)), f"({_src(a)} <> {_src(b)}) <> {_src(c)}")
        res.equal(graf(a, b), oracle_clifford(a, b), f"{_src(a)} <> {_src(b)} vs reference")
    return res


def check_centrality(sig: Signature, samples: int = 50, seed: int = 0) -> SuiteResult:
    res = SuiteResult("centrality")
    rng = _rng(seed, sig, "centrality")
    v = volume(sig)
    if sig.n % 2 == 1:
        forms = [Form.from_mask(sig, m) for m in sig.blades()]
        forms += [random_form(sig, rng) for _ in range(samples)]
        for f in forms:
            res.equal(graf(f, v), graf(v, f), f"{_src(f)} <> vol == vol <> {_src(f)}")
        return res
    witness = find_non_central_witness(sig)
    res.expect(witness is not None, "search for a form not commuting with vol")
    if witness is not None:
        res.notes.append(
            f"non-central witness: {_src(witness)} <> vol = {graf(witness, v)}, vol <> {_src(witness)} = {graf(v, witness)}"
        )
    return res


_SUITE_FUNCS = {
    "volume": check_volume,
    "hodge": check_hodge,
    "projectors": check_projectors,
    "truncated": check_truncated,
    "oracle": check_oracle,
    "centrality": check_centrality,
}


def run_checks(signatures, suite: str = "all", samples: int = 50, seed: int = 0) -> dict:
    """Run one suite (or ``"all"``) on each signature; the report is JSON-serialisable."""
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in _SUITE_FUNCS:
            raise ValueError(f"unknown suite {name!r}; expected all or one of {', '.join(SUITES)}")
    per_sig = []
    ok = True
    for sig in signatures:
        results = {name: _SUITE_FUNCS[name](sig, samples, seed).to_dict() for name in names}
        sig_ok = all(r["pass"] for r in results.values())
        ok &= sig_ok
        per_sig.append({"signature": {"p": sig.p, "q": sig.q}, "pass": sig_ok, "suites": results})
    return {"suite": suite, "samples": samples, "seed": seed, "pass": ok, "signatures": per_sig}


def summarize(report: dict) -> str:
    lines = []
    for entry in report["signatures"]:
        sig = entry["signature"]
        for name, r in entry["suites"].items():
            status = "PASS" if r["pass"] else "FAIL"
            lines.append(f"({sig['p']},{sig['q']}) {name:<11} {status} ({r['checked']} checks)")
            for ce in r["counterexamples"]:
                lines.append(f"    counterexample: {ce['expression']}")
            for note in r["notes"]:
                lines.append(f"    note: {note}")
    total = len(report["signatures"])
    lines.append(f"{'PASS' if report['pass'] else 'FAIL'}: {total} signature(s), suite {report['suite']}")
    return "\n".join(lines)

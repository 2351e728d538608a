from fractions import Fraction

import pytest
from hypothesis import given, settings

from grafclifford import (
    Form,
    ProductKind,
    Signature,
    UnsupportedInput,
    UsageError,
    contracted_graf,
    contracted_wedge,
    graf,
    triangle,
    truncated_graf,
    volume,
    wedge,
)
from grafclifford.forms import signatures_up_to
from grafclifford.oracle import oracle_clifford
from grafclifford.products import graf_forward, graf_reversed
from grafclifford.structure import project_pm, truncate

from conftest import forms, sig_and_forms, signatures


# -- contracted wedge ---------------------------------------------------------

def test_contracted_wedge_examples(e):
    assert contracted_wedge(1, e(Signature(1, 0), 1), e(Signature(1, 0), 1)) == 1
    assert contracted_wedge(1, e(Signature(2, 0), 1), e(Signature(2, 0), 2)) == 0
    s3 = Signature(3, 0)
    assert contracted_wedge(3, volume(s3), volume(s3)) == 6
    # oracle_contracted_wedge(2, e12, e12) in (2,0) gives 2
    s2 = Signature(2, 0)
    assert contracted_wedge(2, e(s2, 1, 2), e(s2, 1, 2)) == 2


@pytest.mark.parametrize("sig", signatures_up_to(5), ids=str)
def test_contracted_wedge_of_volume(sig):
    v = volume(sig)
    g = 1
    for x in sig.metric:
        g *= x
    n_fact = 1
    for k in range(2, sig.n + 1):
        n_fact *= k
    assert contracted_wedge(sig.n, v, v) == n_fact * g


def test_contracted_wedge_order_zero_is_wedge(e):
    s = Signature(2, 1)
    assert contracted_wedge(0, e(s, 1), e(s, 2, 3)) == wedge(e(s, 1), e(s, 2, 3))
    with pytest.raises(UsageError):
        contracted_wedge(-1, e(s, 1), e(s, 1))


@settings(max_examples=150, deadline=None)
@given(sig_and_forms(count=0))
def test_contracted_wedge_grade_law(data):
    (sig,) = data
    for a in sig.blades():
        for b in sig.blades():
            r, s = a.bit_count(), b.bit_count()
            fa, fb = Form.from_mask(sig, a), Form.from_mask(sig, b)
            for l in range(0, sig.n + 2):
                out = contracted_wedge(l, fa, fb)
                if l > r or l > s or l > sig.n:
                    assert out == 0
                elif out:
                    assert out.grades() == [r + s - 2 * l]


# -- Graf product -------------------------------------------------------------

@pytest.mark.parametrize("sig", signatures_up_to(4), ids=str)
def test_graf_generators(sig):
    for i in range(1, sig.n + 1):
        ei = Form.blade(sig, (i,))
        assert graf(ei, ei) == sig.g(i)
        for j in range(1, sig.n + 1):
            if i != j:
                ej = Form.blade(sig, (j,))
                assert graf(ei, ej) == wedge(ei, ej) == -graf(ej, ei)


@pytest.mark.parametrize("pq,expected", [((2, 0), -1), ((0, 2), -1), ((1, 1), 1)])
def test_graf_dim_two_remark(pq, expected, e):
    s = Signature(*pq)
    assert graf(e(s, 1, 2), e(s, 1, 2)) == expected


def test_graf_shared_index(e):
    s = Signature(3, 0)
    # reference product: e1 e2 e2 e3 = g22 e1 e3
    assert graf(e(s, 1, 2), e(s, 2, 3)) == e(s, 1, 3)
    assert oracle_clifford(e(s, 1, 2), e(s, 2, 3)) == e(s, 1, 3)


@pytest.mark.parametrize("sig", signatures_up_to(4), ids=str)
def test_graf_is_wedge_on_disjoint_blades(sig):
    for a in sig.blades():
        for b in sig.blades():
            if a & b == 0:
                fa, fb = Form.from_mask(sig, a), Form.from_mask(sig, b)
                assert graf(fa, fb) == wedge(fa, fb)
                for l in range(1, sig.n + 1):
                    assert contracted_wedge(l, fa, fb) == 0


@pytest.mark.parametrize("sig", signatures_up_to(5), ids=str)
def test_forward_and_reversed_expansions_agree(sig):
    for a in sig.blades():
        for b in sig.blades():
            fa, fb = Form.from_mask(sig, a), Form.from_mask(sig, b)
            r, s = a.bit_count(), b.bit_count()
            if r <= s:
                assert graf_forward(fa, fb) == graf(fa, fb)
                assert graf_reversed(fa, fb) == graf(fb, fa)
            if r == s:
                # x ⋄ y by the forward formula vs by the reversed one read with f1 = y, f2 = x
                assert graf_forward(fa, fb) == graf_reversed(fb, fa)


@settings(max_examples=150, deadline=None)
@given(sig_and_forms(count=3, max_n=5, max_terms=4))
def test_graf_associative(data):
    _, a, b, c = data
    assert graf(graf(a, b), c) == graf(a, graf(b, c))


@settings(max_examples=100, deadline=None)
@given(sig_and_forms(count=1, max_n=5))
def test_graf_unit(data):
    sig, f = data
    one = Form.one(sig)
    assert graf(one, f) == f == graf(f, one)


@settings(max_examples=100, deadline=None)
@given(signatures(max_n=6).flatmap(lambda s: forms(s, max_terms=6, grades=(1,)).map(lambda f: (s, f))))
def test_clifford_relation_on_one_forms(data):
    sig, x = data
    q = sum((c * c * sig.g(m.bit_length()) for m, c in x), Fraction(0))
    assert graf(x, x) == q


# -- contracted Graf, triangle ------------------------------------------------

def test_contracted_graf_examples(e):
    s = Signature(2, 1)
    assert contracted_graf(0, e(s, 1), e(s, 2)) == e(s, 1, 2)
    for k in (1, 2, 3):
        for m in (1, 2, 3):
            expected = s.g(k) if k == m else 0
            assert contracted_graf(1, e(s, k), e(s, m)) == expected


def test_triangle_examples(e):
    s = Signature(1, 2)
    assert triangle(e(s, 1), e(s, 3)) == e(s, 1, 3)
    assert triangle(e(s, 2), e(s, 2)) == 0
    assert triangle(Form.one(s), e(s, 1, 2)) == e(s, 1, 2)


def test_triangle_rejects_descending_grades(e):
    s = Signature(3, 0)
    with pytest.raises(UnsupportedInput, match="grades 2 and 1"):
        triangle(e(s, 1, 2), e(s, 3))
    with pytest.raises(UnsupportedInput):
        triangle(e(s, 1) + e(s, 1, 2), e(s, 3) + e(s, 1, 2, 3))


@settings(max_examples=100, deadline=None)
@given(signatures(max_n=6).flatmap(lambda s: forms(s, grades=(1,)).flatmap(
    lambda x: forms(s, grades=(1,)).map(lambda y: (x, y)))))
def test_triangle_is_wedge_on_one_forms(pair):
    x, y = pair
    assert triangle(x, y) == wedge(x, y)
    assert triangle(x, x) == 0


# -- truncated Graf -----------------------------------------------------------

def test_truncated_examples(e):
    s = Signature(5, 0)
    one = Form.one(s)
    f = e(s, 1) + Fraction(2, 3) * e(s, 2, 4) - 5 * one
    assert truncated_graf(1, f, one) == f
    assert truncated_graf(1, e(s, 1), e(s, 1)) == one
    assert truncated_graf(1, e(s, 1), e(s, 1)) == 2 * truncate("L", project_pm(1, graf(e(s, 1), e(s, 1))))
    assert truncated_graf(-1, one, one) == one


@settings(max_examples=100, deadline=None)
@given(sig_and_forms(count=2, max_n=6))
def test_truncated_output_in_lower_half(data):
    sig, a, b = data
    for sign in (1, -1):
        assert truncated_graf(sign, a, b).max_grade() <= sig.n // 2


def test_product_kind_parsing(e):
    assert ProductKind.parse("cw:2") == ProductKind("cw", 2)
    assert str(ProductKind.parse("graf")) == "graf"
    for bad in ("cw", "graf:1", "nope", "cg:x"):
        with pytest.raises(UsageError):
            ProductKind.parse(bad)
    s = Signature(2, 0)
    assert ProductKind.parse("tgm").apply(Form.one(s), Form.one(s)) == truncated_graf(-1, Form.one(s), Form.one(s))

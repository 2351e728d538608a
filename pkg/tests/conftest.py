from fractions import Fraction

import pytest
from hypothesis import strategies as st

from grafclifford import Form, Signature, signatures_up_to

SMALL_SIGS = signatures_up_to(4)


def sig_id(sig):
    return f"{sig.p}_{sig.q}"


coefficients = st.fractions(min_value=-8, max_value=8, max_denominator=6).filter(lambda c: c != 0)


@st.composite
def signatures(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    p = draw(st.integers(0, n))
    return Signature(p, n - p)


@st.composite
def forms(draw, sig, max_terms=5, grades=None):
    masks = [m for m in range(1 << sig.n) if grades is None or m.bit_count() in grades]
    chosen = draw(st.lists(st.sampled_from(masks), min_size=0, max_size=max_terms, unique=True))
    return Form(sig, {m: draw(coefficients) for m in chosen})


@st.composite
def sig_and_forms(draw, count=2, max_n=4, max_terms=5):
    sig = draw(signatures(max_n))
    return (sig,) + tuple(draw(forms(sig, max_terms)) for _ in range(count))


@pytest.fixture
def e():
    """e(sig, *indices) -> blade form."""
    def make(sig, *indices, coeff=1):
        return Form.blade(sig, indices, Fraction(coeff))
    return make


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from __future__ import annotations

from hypothesis import strategies as st

from qdt.exactmath import LaurentPoly

small_int = st.integers(min_value=-9, max_value=9)


@st.composite
def laurent(draw, lo: int = -4, hi: int = 4, max_terms: int = 5, nonzero: bool = False):
    terms = draw(
        st.dictionaries(st.integers(min_value=lo, max_value=hi), small_int, max_size=max_terms)
    )
    f = LaurentPoly(terms)
    if nonzero and not f:
        f = LaurentPoly.monomial(draw(st.integers(min_value=lo, max_value=hi)), draw(st.integers(1, 9)))
    return f


@st.composite
def polynomial(draw, deg: int = 4, nonzero: bool = False):
    return draw(laurent(0, deg, deg + 1, nonzero))

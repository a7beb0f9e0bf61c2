"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from theta_adhm.algebra import Element
from theta_adhm.phase import Degree, GaussianRational, PhaseScalar
from theta_adhm.twistor import C4

small_ints = st.integers(-4, 4)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussians = st.builds(GaussianRational, rationals, rationals)
degrees = st.builds(Degree, st.integers(-4, 4), st.integers(-4, 4))
scalars = st.builds(
    PhaseScalar,
    st.lists(st.tuples(st.integers(-3, 3), gaussians), max_size=3),
)
monomials = st.lists(st.integers(0, 2), min_size=len(C4), max_size=len(C4)).map(tuple)
elements = st.builds(
    lambda terms: Element(C4, terms),
    st.lists(st.tuples(monomials, scalars), max_size=3),
)
words = st.lists(st.sampled_from(C4.names), max_size=12)


@st.composite
def homogeneous_elements(draw, nonzero=True):
    a = draw(elements)
    m = draw(monomials)
    d = C4.mono_degree(m)
    terms = [(mm, c) for mm, c in a.terms() if C4.mono_degree(mm) == d]
    c = draw(scalars.filter(bool)) if nonzero else PhaseScalar()
    return Element(C4, terms + [(m, c)])

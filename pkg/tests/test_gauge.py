import pytest
from hypothesis import given, settings, strategies as st

from theta_adhm.algebra import spectral_decompose
from theta_adhm.gauge import (
    CrossedElement,
    WindingNumber,
    box_pairs,
    closed_form_exponent,
    commutation_exponent_landstad,
    convolve,
    dual_gauge,
    formal_value,
    gauge_monad_family,
    landstad_element,
    relation_phases,
    verify_theorem_final,
    winding_grading_degree,
)
from theta_adhm.monad import bpst, deformed_family_relations, evaluate_family
from theta_adhm.phase import Degree, lam, wedge
from theta_adhm.twistor import C4

from strategies import degrees, elements, homogeneous_elements

z1 = C4.gen("z1")
small = st.builds(Degree, st.integers(-2, 2), st.integers(-2, 2))
windings = st.builds(WindingNumber, st.integers(-3, 3), st.integers(-3, 3))


@st.composite
def crossed(draw):
    terms = []
    for _ in range(draw(st.integers(1, 2))):
        v = draw(homogeneous_elements())
        terms.append((draw(small), v.degree(), v))
    return CrossedElement(C4, terms)


def test_dual_gauge_examples():
    assert dual_gauge(z1, (0, 1)) == lam(-2) * z1
    assert dual_gauge(z1, (1, 0)) == z1


@given(elements, degrees, degrees)
def test_dual_gauge_is_a_group_action(a, xi, eta):
    assert dual_gauge(a, (0, 0)) == a
    assert dual_gauge(dual_gauge(a, xi), eta) == dual_gauge(a, xi + eta)


@given(elements, elements, degrees)
def test_dual_gauge_is_an_automorphism(a, b, xi):
    assert dual_gauge(a * b, xi) == dual_gauge(a, xi) * dual_gauge(b, xi)


@given(elements, degrees)
def test_dual_gauge_scales_components(a, xi):
    for d, part in spectral_decompose(a).items():
        assert dual_gauge(part, xi) == lam(-2 * wedge(d, xi)) * part


def test_crossed_element_validation():
    with pytest.raises(ValueError, match="declared degree"):
        CrossedElement(C4, [((0, 0), (0, 1), z1)])
    assert not CrossedElement(C4, [((0, 0), (1, 0), z1), ((0, 0), (1, 0), -z1)])


def test_convolution_examples():
    f = CrossedElement.term((0, 0), (1, 0), z1)
    g = CrossedElement.term((0, 0), (0, 1), C4.gen("z3"))
    (j, d, v), = convolve(f, g).terms()
    assert j == Degree(0, 0) and d == Degree(1, 1) and v == z1 * C4.gen("z3")
    # a scalar value has degree (0, 0), so no twist
    h = CrossedElement.term((3, -1), (1, 0), z1)
    s = CrossedElement.term((2, 2), (0, 0), C4.scalar(5))
    (j, d, v), = convolve(h, s).terms()
    assert j == Degree(5, 1) and v == 5 * z1


def test_convolution_twist_phase():
    f = CrossedElement.term((0, 1), (0, 0), C4.one())
    g = CrossedElement.term((0, 0), (1, 0), z1)
    (_, _, v), = convolve(f, g).terms()
    assert v == lam(-2 * wedge((1, 0), (0, 1))) * z1


@settings(max_examples=40)
@given(crossed(), crossed(), crossed())
def test_convolution_is_associative(f, g, h):
    assert convolve(convolve(f, g), h) == convolve(f, convolve(g, h))


@settings(max_examples=40)
@given(crossed(), crossed(), crossed())
def test_convolution_distributes(f, g, h):
    assert convolve(f, g + h) == convolve(f, g) + convolve(f, h)


def test_landstad_element_examples():
    v = formal_value((2, 3))
    (j, d, _), = landstad_element((1, 0), (2, 3), v).terms()
    assert j == Degree(-2, 0) and d == Degree(2, 3)
    (j, _, _), = landstad_element((0, 0), (2, 3), v).terms()
    assert j == Degree(0, 0)
    with pytest.raises(ValueError):
        landstad_element((1, 0), (1, 0), z1 + C4.gen("z3"))


@given(windings, degrees)
def test_landstad_elements_grade_to_zero(m, zeta):
    (j, d, _), = landstad_element(m, zeta, formal_value(zeta)).terms()
    assert winding_grading_degree(m, (j, d)) == Degree(0, 0)


def test_grading_examples():
    assert winding_grading_degree((1, 0), ((-2, 0), (2, 3))) == Degree(0, 0)
    assert winding_grading_degree((0, 0), ((4, -1), (2, 3))) == Degree(4, -1)


@settings(max_examples=40)
@given(windings, crossed(), crossed())
def test_grading_is_additive(m, f, g):
    for j, d, _ in convolve(f, g).terms():
        # every product term comes from a pair of factor terms
        sums = {
            winding_grading_degree(m, (j1, d1)) + winding_grading_degree(m, (j2, d2))
            for j1, d1, _ in f.terms()
            for j2, d2, _ in g.terms()
            if j1 + j2 == j and d1 + d2 == d
        }
        assert sums == {winding_grading_degree(m, (j, d))}


def test_commutation_exponent_examples():
    assert commutation_exponent_landstad((0, 0), (1, 0), (0, 1)) == 2
    assert commutation_exponent_landstad((1, 1), (1, 0), (0, 1)) == -2
    for zeta, xi in box_pairs(2):
        assert commutation_exponent_landstad((1, 0), zeta, xi) == 0
    with pytest.raises(ValueError):
        commutation_exponent_landstad((0, 0), (1, 0), (0, 1), method="guess")


@given(windings, degrees, degrees)
def test_symbolic_matches_closed_form(m, zeta, xi):
    sym = commutation_exponent_landstad(m, zeta, xi, "symbolic")
    assert sym == closed_form_exponent(m, zeta, xi)
    assert commutation_exponent_landstad(m, zeta, zeta, "symbolic") == 0


def test_theorem_examples():
    assert verify_theorem_final((1, 0), 4)
    assert verify_theorem_final((0, 1), 4)
    rep = verify_theorem_final((1, 1), 4)
    assert not rep
    assert rep.witness == (Degree(1, 0), Degree(0, 1)) and rep.exponent == -2
    assert verify_theorem_final((2, -1), 2, method="both")
    with pytest.raises(ValueError):
        verify_theorem_final((1, 0), 0)


def test_box_pairs_size_and_order():
    pairs = box_pairs(1)
    assert len(pairs) == 81
    assert pairs[0] == (Degree(0, 0), Degree(0, 0))


def test_gauge_family_identity_and_phases():
    p = deformed_family_relations(1, 2)
    assert gauge_monad_family(p, (0, 0)).relations == p.relations
    q = gauge_monad_family(p, (1, 2))
    phases = relation_phases(p, q)
    assert all(t is not None for t in phases.values())
    # relation (j, l) has degree deg z_j + deg z_l
    assert phases[1, 3, 0, 0] == -2 * wedge((1, 1), (1, 2))
    assert not any(evaluate_family(q, bpst()).values())


@given(degrees, degrees)
def test_gauge_family_composes(xi, eta):
    p = deformed_family_relations(1, 1)
    twice = gauge_monad_family(gauge_monad_family(p, xi), eta)
    assert twice.relations == gauge_monad_family(p, xi + eta).relations

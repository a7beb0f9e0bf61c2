import cmath
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from theta_adhm.algebra import mul, star
from theta_adhm.numrep import (
    build_rep,
    check_rep,
    equal_pairs,
    evaluate_element,
    relation_residuals,
    sphere_matrix_residual,
)
from theta_adhm.phase import lam
from theta_adhm.twistor import C4, make_context

from strategies import elements

qs = st.sampled_from([3, 5, 7])


def test_build_rep_errors():
    with pytest.raises(ValueError):
        build_rep(1)
    with pytest.raises(ValueError):
        build_rep(3, (1, 1, 1))
    with pytest.raises(ValueError):
        build_rep(3, (1, 0, 1, 1))


@pytest.mark.parametrize("q", [3, 5, 7])
def test_generator_examples(q):
    rep = build_rep(q, (1, 2, "3/2", "1/2"))
    th = math.pi / q
    A, B = rep["z1"], rep["z3"]
    assert np.max(np.abs(A @ B - cmath.exp(2j * th) * B @ A)) < 1e-12
    assert np.max(np.abs(rep["z1"] @ rep["z2"] - rep["z2"] @ rep["z1"])) < 1e-12
    assert np.allclose(rep["z1"] @ rep["z1*"], np.eye(q), atol=1e-12)
    assert np.allclose(rep["z2*"], rep["z2"].conj().T)
    assert max(relation_residuals(rep).values()) < 1e-12
    assert len(relation_residuals(rep)) == 28


def test_unit_and_phases():
    rep = build_rep(5)
    assert np.allclose(evaluate_element(rep, C4.one()), np.eye(5))
    for t in range(-4, 5):
        got = evaluate_element(rep, C4.scalar(lam(t)))
        assert np.allclose(got, lam(t).evaluate(math.pi / 5) * np.eye(5), atol=1e-15)


@settings(max_examples=60)
@given(qs, elements, elements)
def test_evaluation_is_multiplicative(q, a, b):
    rep = build_rep(q, (1, "1/2", 2, 1))
    lhs = evaluate_element(rep, mul(a, b))
    rhs = evaluate_element(rep, a) @ evaluate_element(rep, b)
    assert np.max(np.abs(lhs - rhs), initial=0) < 1e-10


@settings(max_examples=60)
@given(qs, elements)
def test_evaluation_respects_star(q, a):
    rep = build_rep(q)
    assert np.max(np.abs(evaluate_element(rep, star(a)) - evaluate_element(rep, a).conj().T), initial=0) < 1e-10


def test_equal_pairs_evaluate_equal():
    rep = build_rep(7)
    for a, b in equal_pairs(random.Random(2), 60):
        assert a == b
        assert np.max(np.abs(evaluate_element(rep, a) - evaluate_element(rep, b))) < 1e-10


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_sphere_combination_vanishes(q):
    assert sphere_matrix_residual(build_rep(q, (1, 2, 3, 4))) < 1e-10


def test_representation_is_not_faithful():
    # z1* z1 and 1 are different elements with the same image
    rep = build_rep(3)
    a = star(C4.gen("z1")) * C4.gen("z1")
    assert a != C4.one()
    assert np.allclose(evaluate_element(rep, a), evaluate_element(rep, C4.one()))


def test_check_rep_report():
    rep = check_rep(5, pairs=30, seed=1)
    assert rep["ok"]
    assert set(rep["residuals"]) >= {"generator_relations", "equal_pairs", "product_rule", "sphere"}


def test_table_mismatch():
    from theta_adhm.monad import deformed_family_relations

    other = deformed_family_relations(1, 1).table
    with pytest.raises(ValueError):
        evaluate_element(build_rep(3), other.one())


def test_ordered_sphere_residual_is_in_the_kernel():
    # the formal residual is a difference of two monomials with equal images,
    # so matrices cannot tell the ordered coordinates apart
    from theta_adhm.twistor import ordered_sphere_coordinates, sphere_residual

    ctx = make_context()
    res = sphere_residual(ctx, *ordered_sphere_coordinates(ctx))
    assert res
    for q in (3, 5):
        assert np.max(np.abs(evaluate_element(build_rep(q, (1, 2, 3, 4)), res))) < 1e-10

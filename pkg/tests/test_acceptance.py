"""Acceptance criteria, one test each.

The terminal summary prints a PASS/FAIL line per criterion.
"""

import random
import time

import numpy as np

from theta_adhm.algebra import folded_word_phase, untwist_phase_oracle
from theta_adhm.fuzz import random_element, random_homogeneous, random_word
from theta_adhm.gauge import (
    CrossedElement,
    box_pairs,
    closed_form_exponent,
    commutation_exponent_landstad,
    convolve,
    dual_gauge,
    gauge_monad_family,
    verify_theorem_final,
)
from theta_adhm.monad import (
    bpst,
    check_monad_condition,
    check_nondegeneracy,
    check_self_conjugacy,
    classical_adhm_relations,
    conjugate_monad,
    deformed_family_relations,
    evaluate_family,
    find_equivalence,
    group_act,
    random_group_triple,
    random_monad,
    specialize_at_one,
)
from theta_adhm.numrep import build_rep, equal_pairs, evaluate_element, relation_residuals, sphere_matrix_residual
from theta_adhm.phase import Degree
from theta_adhm.twistor import (
    C4,
    make_context,
    printed_x2_variant,
    sphere_residual,
    verify_j,
    verify_projection_relations,
)

SEED = 20240611
GEN_TOL = 1e-12
COMPOSITE_TOL = 1e-10
M_BOX = range(-3, 4)


def test_theorem_final_sweep(criterion):
    criterion(1, "winding-number algebra commutative iff m1 + m2 = 1 (m in [-3,3]^2, radius 4, < 1 s)")
    start = time.perf_counter()
    outcome = {(m1, m2): bool(verify_theorem_final((m1, m2), 4)) for m1 in M_BOX for m2 in M_BOX}
    elapsed = time.perf_counter() - start
    assert outcome == {m: m[0] + m[1] == 1 for m in outcome}
    assert elapsed < 1.0


def test_sphere_relation(criterion):
    criterion(2, "sphere relation exact for formal lam; printed x2 variant rejected")
    ctx = make_context()
    start = time.perf_counter()
    assert not sphere_residual(ctx)
    assert sphere_residual(ctx, x2=printed_x2_variant(ctx))
    assert time.perf_counter() - start < 0.1


def test_projection_relations(criterion):
    criterion(3, "16 projection identities and the trace identity, exact")
    start = time.perf_counter()
    assert verify_projection_relations(make_context())
    assert time.perf_counter() - start < 0.5


def test_j_suite(criterion):
    criterion(4, "J: product law on 500 pairs, q-table, fixes sphere coordinates, J^2 = id on q")
    res = verify_j(make_context(), pairs=500, seed=SEED)
    assert res == {"products": True, "table": True, "fixes_sphere": True, "square_on_q": True}


def test_bpst_monad(criterion):
    criterion(5, "basic datum: classical and deformed monad, self-conjugate, nondegenerate at 100 points")
    d = bpst()
    assert check_monad_condition(d)
    assert check_monad_condition(d, deformed=True)
    assert check_self_conjugacy(d)
    assert check_nondegeneracy(d, samples=100, seed=SEED)


def test_family_reduction(criterion):
    criterion(6, "family relations reduce to the classical set; basic datum annihilates them before and after 10 gauges")
    p = deformed_family_relations(1, 2)
    assert specialize_at_one(p) == classical_adhm_relations(1, 2)
    d = bpst()
    assert not any(evaluate_family(p, d).values())
    rng = random.Random(SEED)
    for _ in range(10):
        xi = Degree(rng.randint(-5, 5), rng.randint(-5, 5))
        assert not any(evaluate_family(gauge_monad_family(p, xi), d).values())


def test_oracle_equivalence(criterion):
    criterion(7, "1000 random words: folded product phase equals the untwisting oracle")
    rng = random.Random(SEED)
    for _ in range(1000):
        w = random_word(C4, rng, max_len=12)
        assert folded_word_phase(C4, w) == untwist_phase_oracle(C4, w)


def test_matrix_representation(criterion):
    criterion(8, "clock-and-shift q = 3, 5, 7: relations 1e-12, 200 equal pairs 1e-10, sphere 1e-10")
    for q in (3, 5, 7):
        rep = build_rep(q)
        assert max(relation_residuals(rep).values()) < GEN_TOL
        rng = random.Random(SEED + q)
        pairs = equal_pairs(rng, 200)
        assert len(pairs) == 200
        for a, b in pairs:
            diff = evaluate_element(rep, a) - evaluate_element(rep, b)
            assert np.max(np.abs(diff)) < COMPOSITE_TOL
        assert sphere_matrix_residual(rep) < COMPOSITE_TOL


def _crossed(rng):
    terms = []
    for _ in range(rng.randint(1, 2)):
        v = random_homogeneous(C4, rng, max_len=2)
        terms.append((Degree(rng.randint(-2, 2), rng.randint(-2, 2)), v.degree(), v))
    return CrossedElement(C4, terms)


def test_gauge_action_laws(criterion):
    criterion(9, "dual gauge group law, convolution associativity, symbolic exponent equals closed form on the sweep")
    rng = random.Random(SEED)
    for _ in range(50):
        a = random_element(C4, rng)
        xi, eta = (Degree(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(2))
        assert dual_gauge(dual_gauge(a, xi), eta) == dual_gauge(a, xi + eta)
    for _ in range(50):
        f, g, h = _crossed(rng), _crossed(rng), _crossed(rng)
        assert convolve(convolve(f, g), h) == convolve(f, convolve(g, h))
    for m1 in M_BOX:
        for m2 in M_BOX:
            for zeta, xi in box_pairs(4):
                sym = commutation_exponent_landstad((m1, m2), zeta, xi, "symbolic")
                assert sym == closed_form_exponent((m1, m2), zeta, xi)


def test_equivalence_witnesses(criterion):
    criterion(10, "equivalence witnesses on 50 fuzzed pairs and for the basic datum versus its conjugate")
    rng = random.Random(SEED)
    for i in range(50):
        k, n = ((1, 1), (1, 2), (2, 1))[i % 3]
        d = random_monad(k, n, rng, self_conjugate=i % 2 == 0)
        target = group_act(d, random_group_triple(k, n, rng))
        w = find_equivalence(d, target)
        assert w is not None and w.is_invertible()
        assert group_act(d, w) == target
    b = bpst()
    w = find_equivalence(b, conjugate_monad(b))
    assert w is not None and group_act(b, w) == conjugate_monad(b)

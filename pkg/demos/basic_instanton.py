"""
The basic instanton as a monad
==============================

Checks the charge-one datum, moves it around with the torus and the
equivalence group, and recovers an explicit equivalence to its conjugate.
"""

import random

from theta_adhm.monad import (
    bpst,
    check_monad_condition,
    check_nondegeneracy,
    check_self_conjugacy,
    conjugate_monad,
    deformed_family_relations,
    evaluate_family,
    find_equivalence,
    group_act,
    random_group_triple,
    torus_act,
)

d = bpst()
print("M1 =", [str(x) for x in d.M[0][:, 0]])
print("monad (classical):", check_monad_condition(d))
print("monad (deformed): ", check_monad_condition(d, deformed=True))
print("self-conjugate:   ", check_self_conjugacy(d))
print("nondegenerate:    ", bool(check_nondegeneracy(d, samples=50)))

# the torus rescales entries by powers of lam and keeps every property
t = torus_act(d, 1, -2)
print("torus image still a deformed monad:", check_monad_condition(t, deformed=True))

# a random group element and the witness recovered by linear algebra
g = random_group_triple(1, 2, random.Random(3))
w = find_equivalence(d, group_act(d, g))
print("witness reproduces the target:", group_act(d, w) == group_act(d, g))
w = find_equivalence(d, conjugate_monad(d))
print("equivalent to its conjugate:", w is not None)

# the relations of the deformed family vanish at this datum
p = deformed_family_relations(1, 2)
print("family relations:", len(p.relations))
print("all vanish at the datum:", not any(evaluate_family(p, d).values()))

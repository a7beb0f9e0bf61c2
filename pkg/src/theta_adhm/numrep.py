"""Clock-and-shift matrices as a numerical check on the symbolic engine.

At ``theta = pi/q`` the generators of ``C4`` act on ``C^q`` by

    z1 -> r1 C,  z2 -> r2 C^-1,  z3 -> r3 S,  z4 -> r4 S^-1,

with ``C S = exp(2i theta) S C``, and conjugates go to adjoints.  The
representation is not faithful (``z_j* z_j`` is a scalar), so it is used only
to confirm relations and the product rule, never to decide equality.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import Element, commutator_exponent, mul, star, untwist_phase_oracle, folded_word_phase
from .fuzz import random_element, random_homogeneous, random_word
from .phase import PhaseScalar, lam
from .twistor import C4, TwistorContext, make_context

__all__ = ["MatrixRep", "build_rep", "evaluate_element", "relation_residuals", "equal_pairs", "check_rep"]

GEN_TOL = 1e-12
COMPOSITE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class MatrixRep:
    q: int
    theta: float
    moduli: tuple
    matrices: dict

    def __getitem__(self, name: str) -> np.ndarray:
        return self.matrices[name]


def clock_shift(q: int) -> tuple[np.ndarray, np.ndarray]:
    omega = cmath.exp(2j * math.pi / q)
    C = np.diag([omega**k for k in range(q)])
    S = np.roll(np.eye(q, dtype=complex), 1, axis=0)
    return C, S


def build_rep(q: int, moduli=(1, 1, 1, 1)) -> MatrixRep:
    if q < 2:
        raise ValueError("q must be at least 2")
    moduli = tuple(Fraction(r) for r in moduli)
    if len(moduli) != 4 or any(r <= 0 for r in moduli):
        raise ValueError("need four positive moduli")
    C, S = clock_shift(q)
    base = {"z1": C, "z2": C.conj().T, "z3": S, "z4": S.conj().T}
    mats = {}
    for (name, m), r in zip(base.items(), moduli):
        mats[name] = float(r) * m
        mats[name + "*"] = mats[name].conj().T
    return MatrixRep(q, math.pi / q, moduli, mats)


def evaluate_element(rep: MatrixRep, a: Element) -> np.ndarray:
    """Substitute matrices for generators; ``e_m`` is ``lam**-p(m)`` times the ordered word."""
    if a.table != C4:
        raise ValueError("representation is defined on the C4 table only")
    table = a.table
    out = np.zeros((rep.q, rep.q), dtype=complex)
    for m, c in a.terms():
        mat = np.eye(rep.q, dtype=complex)
        for i, e in enumerate(m):
            if e:
                mat = mat @ np.linalg.matrix_power(rep[table.names[i]], e)
        coeff = c.evaluate(rep.theta) * cmath.exp(-1j * rep.theta * table.sorted_phase(m))
        out += coeff * mat
    return out


def _max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def relation_residuals(rep: MatrixRep) -> dict:
    """``rep(a) rep(b) - exp(i theta t) rep(b) rep(a)`` for all 28 generator pairs."""
    names = C4.names
    out = {}
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            t = commutator_exponent(C4.gen(a), C4.gen(b))
            A, B = rep[a], rep[b]
            out[a, b] = _max_abs(A @ B - cmath.exp(1j * rep.theta * t) * (B @ A))
    return out


def equal_pairs(rng: random.Random, count: int) -> list[tuple[Element, Element]]:
    """Pairs equal by construction: swapped products and reordered words."""
    pairs = []
    while len(pairs) < count:
        kind = len(pairs) % 3
        if kind == 0:
            x = random_homogeneous(C4, rng)
            y = random_homogeneous(C4, rng)
            pairs.append((mul(x, y), lam(commutator_exponent(x, y)) * mul(y, x)))
        elif kind == 1:
            word = random_word(C4, rng)
            folded = C4.one()
            for g in word:
                folded = mul(folded, C4.gen(g))
            shuffled = list(word)
            rng.shuffle(shuffled)
            other = C4.one()
            for g in shuffled:
                other = mul(other, C4.gen(g))
            t = untwist_phase_oracle(C4, word) - untwist_phase_oracle(C4, shuffled)
            pairs.append((folded, lam(t) * other))
        else:
            x, y, z = (random_element(C4, rng, max_len=2) for _ in range(3))
            pairs.append((mul(mul(x, y), z), mul(x, mul(y, z))))
    return pairs


def sphere_matrix_residual(rep: MatrixRep, ctx: TwistorContext | None = None) -> float:
    ctx = ctx or make_context()
    X0, X1, X2, R2 = (evaluate_element(rep, e) for e in (ctx.x0, ctx.x1, ctx.x2, ctx.r2))
    total = X1.conj().T @ X1 + X2.conj().T @ X2 + X0 @ X0 - R2 @ R2
    return _max_abs(total)


def check_rep(q: int, moduli=(1, 1, 1, 1), pairs: int = 200, seed: int = 0) -> dict:
    """Generator relations, equal pairs, the product rule and the sphere relation."""
    rep = build_rep(q, moduli)
    rng = random.Random(seed)
    rel = max(relation_residuals(rep).values())
    adj = max(_max_abs(evaluate_element(rep, star(g)) - evaluate_element(rep, g).conj().T) for g in C4.gens())
    eq = 0.0
    hom = 0.0
    for a, b in equal_pairs(rng, pairs):
        eq = max(eq, _max_abs(evaluate_element(rep, a) - evaluate_element(rep, b)))
    for _ in range(pairs):
        a, b = random_element(C4, rng), random_element(C4, rng)
        hom = max(hom, _max_abs(evaluate_element(rep, mul(a, b)) - evaluate_element(rep, a) @ evaluate_element(rep, b)))
    phase = max(
        float(abs(evaluate_element(rep, C4.scalar(PhaseScalar.monomial(t)))[0, 0] - cmath.exp(1j * math.pi * t / q)))
        for t in range(-6, 7)
    )
    oracle = all(
        folded_word_phase(C4, w) == untwist_phase_oracle(C4, w) for w in (random_word(C4, rng) for _ in range(20))
    )
    sphere = sphere_matrix_residual(rep)
    residuals = {
        "generator_relations": rel,
        "adjoints": adj,
        "equal_pairs": eq,
        "product_rule": hom,
        "scalar_phases": phase,
        "sphere": sphere,
    }
    tol = {"generator_relations": GEN_TOL, "adjoints": GEN_TOL, "scalar_phases": GEN_TOL}
    ok = oracle and all(v <= tol.get(k, COMPOSITE_TOL) for k, v in residuals.items())
    return {"q": q, "moduli": [str(r) for r in rep.moduli], "ok": ok, "residuals": residuals}

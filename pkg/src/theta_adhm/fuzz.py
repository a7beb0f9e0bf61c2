"""Seeded random elements for property checks."""

from __future__ import annotations

import random

from .algebra import Element, GeneratorTable
from .phase import GaussianRational, PhaseScalar


def random_scalar(rng: random.Random, max_t: int = 2, n_terms: int = 2) -> PhaseScalar:
    terms = []
    for _ in range(rng.randint(1, n_terms)):
        c = GaussianRational(rng.randint(-3, 3), rng.randint(-2, 2))
        terms.append((rng.randint(-max_t, max_t), c))
    s = PhaseScalar(terms)
    return s if s else PhaseScalar.coerce(1)


def random_monomial(table: GeneratorTable, rng: random.Random, max_len: int = 3) -> tuple:
    m = [0] * len(table)
    for _ in range(rng.randint(0, max_len)):
        m[rng.randrange(len(table))] += 1
    return tuple(m)


def random_element(
    table: GeneratorTable, rng: random.Random, n_terms: int = 3, max_len: int = 3, max_t: int = 2
) -> Element:
    return Element(
        table,
        [(random_monomial(table, rng, max_len), random_scalar(rng, max_t)) for _ in range(rng.randint(1, n_terms))],
    )


def random_homogeneous(table: GeneratorTable, rng: random.Random, n_terms: int = 3, max_len: int = 3) -> Element:
    """Random element, projected onto the degree of its first term."""
    a = random_element(table, rng, n_terms, max_len)
    while not a:
        a = random_element(table, rng, n_terms, max_len)
    d = table.mono_degree(next(iter(a.monomials())))
    return Element(table, [(m, c) for m, c in a.terms() if table.mono_degree(m) == d])


def random_word(table: GeneratorTable, rng: random.Random, max_len: int = 12) -> list[str]:
    return [rng.choice(table.names) for _ in range(rng.randint(0, max_len))]

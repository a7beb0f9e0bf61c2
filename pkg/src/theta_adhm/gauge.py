"""Internal gauge symmetry, crossed products and winding-number factorizations.

The dual group ``Z^2`` acts on a twisted algebra by

    gauge_xi(a) = lam**(-2*wedge(zeta, xi)) * a      for a of degree zeta.

The crossed product by this action is modelled discretely: a
:class:`CrossedElement` is a finite sum of terms ``f_{j, zeta}`` supported at a
lattice point ``j`` with a homogeneous value of degree ``zeta``.  For a winding
number ``m`` the Landstad elements sit at ``j = -zeta^m`` where
``zeta^m = (m1*zeta1, m2*zeta2)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import Element, GeneratorTable, StarMap, mul, phase_ratio
from .monad import MonadFamilyPresentation
from .phase import Degree, PhaseScalar, lam, wedge
from .twistor import C4

__all__ = [
    "WindingNumber",
    "CrossedElement",
    "dual_gauge",
    "gauge_monad_family",
    "relation_phases",
    "convolve",
    "landstad_element",
    "commutation_exponent_landstad",
    "closed_form_exponent",
    "verify_theorem_final",
    "TheoremReport",
    "winding_grading_degree",
    "formal_value",
    "box_pairs",
]


@dataclass(frozen=True)
class WindingNumber:
    m: Degree

    def __init__(self, m1, m2=None):
        m = Degree.of(m1) if m2 is None else Degree(int(m1), int(m2))
        object.__setattr__(self, "m", m)

    @classmethod
    def of(cls, x) -> "WindingNumber":
        return x if isinstance(x, WindingNumber) else cls(x)

    def twist(self, zeta) -> Degree:
        """``zeta^m = (m1*zeta1, m2*zeta2)``."""
        return Degree.of(zeta).scale(self.m)

    def __iter__(self):
        return iter(self.m)

    def __str__(self):
        return str(self.m)


def dual_gauge(a: Element, xi) -> Element:
    """Scale each homogeneous component of degree ``zeta`` by ``lam**(-2 wedge(zeta, xi))``."""
    xi = Degree.of(xi)
    t = a.table
    return Element._raw(
        t, {m: c.shift(-2 * wedge(t.mono_degree(m), xi)) for m, c in a._terms.items()}
    )


def gauge_monad_family(p: MonadFamilyPresentation, xi) -> MonadFamilyPresentation:
    """Rescale every symbol ``M_j^{ab}`` by ``lam**(-2 wedge(deg, xi))``."""
    xi = Degree.of(xi)
    table = p.table
    images = {g.name: lam(-2 * wedge(g.degree, xi)) * table.gen(g.name) for g in table.generators}
    phi = StarMap(table, table, images, kind="hom", name=f"gauge{xi}")
    rels = {key: phi(r) for key, r in p.relations.items()}
    phases = dict(p.symbol_phases)
    for j in range(1, 5):
        g = table.generators[table.index(f"M{j}[0,0]")]
        phases[j] = phases.get(j, PhaseScalar.coerce(1)) * lam(-2 * wedge(g.degree, xi))
    return MonadFamilyPresentation(p.k, p.n, table, rels, p.degree_sign, phases)


def relation_phases(source: MonadFamilyPresentation, image: MonadFamilyPresentation) -> dict:
    """``key -> t`` with ``image[key] == lam**t * source[key]`` (``None`` if not a unit phase)."""
    return {key: phase_ratio(image.relations[key], r) for key, r in source.relations.items()}


class CrossedElement:
    """Finitely supported ``Z^2``-indexed sums of homogeneous algebra elements."""

    __slots__ = ("table", "_terms")

    def __init__(self, table: GeneratorTable, terms=()):
        self.table = table
        acc: dict = {}
        if isinstance(terms, dict):
            terms = [(j, zeta, v) for (j, zeta), v in terms.items()]
        for j, zeta, value in terms:
            j, zeta = Degree.of(j), Degree.of(zeta)
            if value.table != table:
                raise ValueError("value lives in a different algebra")
            if value and (not value.is_homogeneous() or value.degree() != zeta):
                raise ValueError(f"value is not homogeneous of declared degree {zeta}")
            acc[j, zeta] = acc.get((j, zeta), table.zero()) + value
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, table: GeneratorTable, terms: dict) -> "CrossedElement":
        # caller guarantees validated, nonzero values
        obj = cls.__new__(cls)
        obj.table = table
        obj._terms = terms
        return obj

    @classmethod
    def term(cls, j, zeta, value: Element) -> "CrossedElement":
        return cls(value.table, [(j, zeta, value)])

    def terms(self) -> list:
        return sorted(((j, z, v) for (j, z), v in self._terms.items()), key=lambda t: (tuple(t[0]), tuple(t[1])))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other: "CrossedElement") -> "CrossedElement":
        return CrossedElement(self.table, self.terms() + other.terms())

    def __neg__(self):
        return CrossedElement(self.table, [(j, z, -v) for j, z, v in self.terms()])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "CrossedElement":
        return CrossedElement(self.table, [(j, z, v.scale(c)) for j, z, v in self.terms()])

    def __mul__(self, other):
        if isinstance(other, CrossedElement):
            return convolve(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, CrossedElement):
            return NotImplemented
        return self.table == other.table and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms))

    def __repr__(self):
        body = " + ".join(f"[{j}|{z}]({v})" for j, z, v in self.terms())
        return f"CrossedElement({body or '0'})"


def convolve(f: CrossedElement, g: CrossedElement) -> CrossedElement:
    """``f_{j,zeta} * g_{l,xi} = lam**(-2 wedge(xi, j)) f g`` at ``(j + l, zeta + xi)``."""
    if f.table != g.table:
        raise ValueError("crossed elements over different algebras")
    out: dict = {}
    for (j, zeta), v in f._terms.items():
        for (l, xi), w in g._terms.items():
            key = (j + l, zeta + xi)
            prod = mul(v, w).scale(lam(-2 * wedge(xi, j)))
            out[key] = out[key] + prod if key in out else prod
    return CrossedElement._raw(f.table, {k: v for k, v in out.items() if v})


def landstad_element(m, zeta, v: Element) -> CrossedElement:
    """The generator of the winding-number ``m`` Landstad algebra with value ``v``."""
    m = WindingNumber.of(m)
    zeta = Degree.of(zeta)
    if not v.is_homogeneous() or (v and v.degree() != zeta):
        raise ValueError(f"value must be homogeneous of degree {zeta}")
    return CrossedElement.term(-m.twist(zeta), zeta, v)


def winding_grading_degree(m, term) -> Degree:
    """Grade of a term ``(j, xi)`` under the winding-``m`` action: ``j + xi^m``."""
    m = WindingNumber.of(m)
    j, xi = term[0], term[1]
    return Degree.of(j) + m.twist(xi)


@lru_cache(maxsize=None)
def formal_value(zeta) -> Element:
    """A fixed nonzero monomial of ``C4`` with degree ``zeta``."""
    z1, z2 = Degree.of(zeta)
    t = C4
    exps = [0] * len(t)
    exps[t.index("z1" if z1 >= 0 else "z2")] = abs(z1)
    exps[t.index("z3" if z2 >= 0 else "z4")] = abs(z2)
    return Element._raw(t, {tuple(exps): PhaseScalar.coerce(1)})


def closed_form_exponent(m, zeta, xi) -> int:
    m = WindingNumber.of(m)
    return 2 * (1 - m.m.d1 - m.m.d2) * wedge(zeta, xi)


@lru_cache(maxsize=4096)
def _formal_landstad(m: WindingNumber, zeta: Degree) -> CrossedElement:
    return landstad_element(m, zeta, formal_value(zeta))


def _symbolic_exponent(m: WindingNumber, zeta: Degree, xi: Degree) -> int:
    f = _formal_landstad(m, zeta)
    g = _formal_landstad(m, xi)
    fg, gf = convolve(f, g), convolve(g, f)
    (p1, d1, v1), = fg.terms()
    (p2, d2, v2), = gf.terms()
    if (p1, d1) != (p2, d2):
        raise ArithmeticError("products are supported at different points")
    t = phase_ratio(v1, v2)
    if t is None:
        raise ArithmeticError("products are not phase multiples")
    return t


def commutation_exponent_landstad(m, zeta, xi, method: str = "both") -> int:
    """``t`` with ``L(zeta) * L(xi) = lam**t * L(xi) * L(zeta)`` in the winding-``m`` algebra.

    ``method`` is ``symbolic`` (convolution of formal values), ``closed`` or
    ``both``, which computes the two and raises if they differ.
    """
    m, zeta, xi = WindingNumber.of(m), Degree.of(zeta), Degree.of(xi)
    if method == "closed":
        return closed_form_exponent(m, zeta, xi)
    sym = _symbolic_exponent(m, zeta, xi)
    if method == "symbolic":
        return sym
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    closed = closed_form_exponent(m, zeta, xi)
    if sym != closed:
        raise ArithmeticError(f"symbolic exponent {sym} differs from closed form {closed}")
    return sym


@dataclass(frozen=True)
class TheoremReport:
    m: Degree
    radius: int
    ok: bool
    witness: tuple | None = None
    exponent: int | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"m": list(self.m), "radius": self.radius, "commutative": self.ok}
        if self.witness is not None:
            out["witness"] = {"zeta": list(self.witness[0]), "xi": list(self.witness[1])}
            out["exponent"] = self.exponent
        return out


@lru_cache(maxsize=None)
def box_pairs(radius: int) -> tuple:
    """All ``(zeta, xi)`` in the box, smallest total size first."""
    pts = [Degree(a, b) for a in range(-radius, radius + 1) for b in range(-radius, radius + 1)]
    pairs = itertools.product(pts, repeat=2)
    return tuple(
        sorted(
            pairs,
            key=lambda p: (abs(p[0].d1) + abs(p[0].d2) + abs(p[1].d1) + abs(p[1].d2),
                           -p[0].d1, -p[0].d2, -p[1].d1, -p[1].d2),
        )
    )


def verify_theorem_final(m, radius: int = 4, method: str = "closed") -> TheoremReport:
    """Is the winding-``m`` Landstad algebra commutative on the degree box?"""
    if radius < 1:
        raise ValueError("radius must be at least 1")
    m = WindingNumber.of(m)
    for zeta, xi in box_pairs(radius):
        t = commutation_exponent_landstad(m, zeta, xi, method)
        if t:
            return TheoremReport(m.m, radius, False, (zeta, xi), t)
    return TheoremReport(m.m, radius, True)

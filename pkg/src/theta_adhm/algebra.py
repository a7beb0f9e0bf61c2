"""Twisted Z^2-graded *-polynomial algebras.

An algebra is fixed by a :class:`GeneratorTable`: a finite list of generators,
each carrying a degree in Z^2 and a conjugate partner.  Elements are stored on
the basis ``e_m`` indexed by commutative exponent vectors ``m``, with product

    e_a * e_b = lam**wedge(deg a, deg b) * e_(a+b).

Because ``wedge`` is bilinear this product is associative, and two homogeneous
elements of degrees ``zeta`` and ``xi`` satisfy
``a*b = lam**(2*wedge(zeta, xi)) * b*a``.  The involution acts on the basis by
``e_m -> e_(conj m)`` with conjugated coefficients, so the canonical form of
an element is simply its coefficient map; equality needs no rewriting.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .phase import Degree, PhaseScalar, wedge

__all__ = [
    "Generator",
    "GeneratorTable",
    "Element",
    "StarMap",
    "mul",
    "star",
    "spectral_decompose",
    "apply_map",
    "untwist_phase_oracle",
    "folded_word_phase",
    "commutator_exponent",
    "phase_ratio",
    "classical_limit",
    "evaluate_at",
    "monomial_key",
]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: Degree
    conj: str


class GeneratorTable:
    """Generators with degrees and a conjugate pairing.

    The list order is the canonical order used for normal-ordered words.

    Parameters
    ----------
    name : str
        Label used in serialization.
    generators : sequence of (name, degree, conjugate_name)
        ``conjugate_name`` may equal ``name`` for a self-adjoint generator,
        which then must have degree zero.
    """

    def __init__(self, name: str, generators: Sequence[tuple[str, object, str]]):
        self.name = name
        gens = tuple(Generator(n, Degree.of(d), c) for n, d, c in generators)
        self.generators = gens
        self.names = tuple(g.name for g in gens)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self._index = {n: i for i, n in enumerate(self.names)}
        try:
            self.conj = tuple(self._index[g.conj] for g in gens)
        except KeyError as exc:
            raise ValueError(f"unknown conjugate partner {exc.args[0]!r}") from None
        for i, j in enumerate(self.conj):
            if self.conj[j] != i:
                raise ValueError(f"conjugate pairing is not an involution at {self.names[i]}")
            if gens[j].degree != -gens[i].degree:
                raise ValueError(f"degree of {self.names[j]} is not minus that of {self.names[i]}")
        self.degrees = tuple(g.degree for g in gens)
        self._deg = tuple((d.d1, d.d2) for d in self.degrees)
        n = len(gens)
        self._w = tuple(tuple(wedge(self._deg[i], self._deg[j]) for j in range(n)) for i in range(n))
        self._mono_deg: dict = {}
        self._mono_phase: dict = {}

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"GeneratorTable({self.name!r}, {len(self)} generators)"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GeneratorTable):
            return NotImplemented
        return self.name == other.name and self.generators == other.generators

    def __hash__(self):
        return hash((self.name, self.generators))

    def index(self, g) -> int:
        if isinstance(g, int):
            if not 0 <= g < len(self.generators):
                raise IndexError(g)
            return g
        try:
            return self._index[g]
        except KeyError:
            raise KeyError(f"{g!r} is not a generator of {self.name}") from None

    def degree(self, g) -> Degree:
        return self.degrees[self.index(g)]

    def wedge_index(self, i: int, j: int) -> int:
        return self._w[i][j]

    def mono_degree(self, m: tuple) -> tuple[int, int]:
        d = self._mono_deg.get(m)
        if d is None:
            d1 = d2 = 0
            for e, (a, b) in zip(m, self._deg):
                if e:
                    d1 += e * a
                    d2 += e * b
            d = (d1, d2)
            self._mono_deg[m] = d
        return d

    def sorted_phase(self, m: tuple) -> int:
        """Exponent ``p`` with (sorted word of ``m``) = lam**p * e_m."""
        p = self._mono_phase.get(m)
        if p is None:
            p = 0
            idx = [i for i, e in enumerate(m) if e]
            for a, i in enumerate(idx):
                for j in idx[a + 1:]:
                    p += m[i] * m[j] * self._w[i][j]
            self._mono_phase[m] = p
        return p

    def conj_mono(self, m: tuple) -> tuple:
        out = [0] * len(m)
        for i, e in enumerate(m):
            if e:
                out[self.conj[i]] = e
        return tuple(out)

    def unit_mono(self, g) -> tuple:
        m = [0] * len(self.generators)
        m[self.index(g)] = 1
        return tuple(m)

    def gen(self, g) -> "Element":
        return Element._raw(self, {self.unit_mono(g): _ONE})

    def gens(self) -> tuple["Element", ...]:
        return tuple(self.gen(i) for i in range(len(self)))

    def one(self) -> "Element":
        return Element._raw(self, {(0,) * len(self.generators): _ONE})

    def zero(self) -> "Element":
        return Element._raw(self, {})

    def scalar(self, c) -> "Element":
        c = PhaseScalar.coerce(c)
        return Element._raw(self, {(0,) * len(self.generators): c} if c else {})

    def mono_str(self, m: tuple) -> str:
        parts = []
        for n, e in zip(self.names, m):
            if e == 1:
                parts.append(n)
            elif e:
                parts.append(f"{n}^{e}")
        return "*".join(parts) if parts else "1"


def monomial_key(m: tuple):
    """Graded order: total degree first, then lexicographically descending."""
    return (sum(m), tuple(-e for e in m))


_ONE = PhaseScalar.monomial(0, 1)


class Element:
    """A finite linear combination of basis monomials ``e_m``."""

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: GeneratorTable, terms: Mapping | Iterable = ()):
        self.table = table
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        n = len(table)
        for m, c in items:
            m = tuple(int(e) for e in m)
            if len(m) != n or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {table.name}")
            c = PhaseScalar.coerce(c)
            if m in clean:
                c = clean[m] + c
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, table, terms: dict) -> "Element":
        obj = cls.__new__(cls)
        obj.table = table
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection -----------------------------------------------------
    def terms(self) -> list[tuple[tuple, PhaseScalar]]:
        return sorted(self._terms.items(), key=lambda kv: monomial_key(kv[0]))

    def coefficient(self, m) -> PhaseScalar:
        return self._terms.get(tuple(m), PhaseScalar())

    def monomials(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degrees(self) -> set[Degree]:
        return {Degree(*self.table.mono_degree(m)) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Degree:
        """Degree of a nonzero homogeneous element."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(map(tuple, ds))})")
        return next(iter(ds))

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "Element"):
        if other.table is not self.table and other.table != self.table:
            raise ValueError(f"table mismatch: {self.table.name} vs {other.table.name}")

    def _lift(self, other) -> "Element":
        if isinstance(other, Element):
            self._check(other)
            return other
        return self.table.scalar(other)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Element._raw(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.table, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        c = PhaseScalar.coerce(c)
        if not c:
            return self.table.zero()
        return Element._raw(self.table, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative powers are not available")
        out = self.table.one()
        for _ in range(n):
            out = mul(out, self)
        return out

    def star(self) -> "Element":
        return star(self)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Element):
            return (other.table is self.table or other.table == self.table) and self._terms == other._terms
        try:
            other = self.table.scalar(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table.name, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Element[{self.table.name}]({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            ms = self.table.mono_str(m)
            if c == 1:
                parts.append(ms)
            elif c == -1:
                parts.append("-" + ms)
            else:
                cs = str(c)
                if len(c) > 1:
                    cs = f"({cs})"
                parts.append(cs if ms == "1" else f"{cs}*{ms}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        names = self.table.names
        return {
            "table": self.table.name,
            "terms": [
                {"mono": {names[i]: e for i, e in enumerate(m) if e}, "coef": c.to_json()}
                for m, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict, table: GeneratorTable) -> "Element":
        if obj.get("table") != table.name:
            raise ValueError(f"element belongs to {obj.get('table')!r}, not {table.name!r}")
        terms = []
        for t in obj["terms"]:
            m = [0] * len(table)
            for name, e in t["mono"].items():
                m[table.index(name)] = int(e)
            terms.append((tuple(m), PhaseScalar.from_json(t["coef"])))
        return cls(table, terms)


def mul(a: Element, b: Element) -> Element:
    """Twisted product."""
    a._check(b)
    table = a.table
    md = table.mono_degree
    out: dict = {}
    bt = [(m2, c2, md(m2)) for m2, c2 in b._terms.items()]
    for m1, c1 in a._terms.items():
        d1a, d1b = md(m1)
        for m2, c2, (d2a, d2b) in bt:
            m = tuple(x + y for x, y in zip(m1, m2))
            c = (c1 * c2).shift(d1a * d2b - d1b * d2a)
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
    return Element._raw(table, {m: c for m, c in out.items() if c})


def star(a: Element) -> Element:
    """Anti-linear, anti-multiplicative involution."""
    cm = a.table.conj_mono
    return Element._raw(a.table, {cm(m): c.conj() for m, c in a._terms.items()})


def spectral_decompose(a: Element) -> dict[Degree, Element]:
    """Split ``a`` into its homogeneous components."""
    parts: dict = {}
    for m, c in a._terms.items():
        parts.setdefault(Degree(*a.table.mono_degree(m)), {})[m] = c
    return {d: Element._raw(a.table, t) for d, t in parts.items()}


def classical_limit(a: Element) -> Element:
    """Set ``lam = 1`` in every coefficient."""
    return Element(a.table, ((m, c.at_one()) for m, c in a._terms.items()))


def evaluate_at(a: Element, values: Mapping) -> PhaseScalar:
    """Substitute scalars for the generators, monomial by monomial.

    ``values`` maps generator names or indices to scalars.  Each basis
    monomial ``e_m`` is sent to the commutative product of the values, which
    is the evaluation at a classical point of the undeformed algebra.
    """
    table = a.table
    vals = [None] * len(table)
    for k, v in values.items():
        vals[table.index(k)] = PhaseScalar.coerce(v)
    total = PhaseScalar()
    for m, c in a._terms.items():
        term = c
        for i, e in enumerate(m):
            if e:
                if vals[i] is None:
                    raise KeyError(f"no value for generator {table.names[i]}")
                for _ in range(e):
                    term = term * vals[i]
        total = total + term
    return total


def phase_ratio(a: Element, b: Element):
    """Return ``t`` with ``a == lam**t * b``, or ``None`` when no such ``t``."""
    a._check(b)
    if not b:
        return 0 if not a else None
    if len(a) != len(b):
        return None
    m, cb = next(iter(b._terms.items()))
    ca = a._terms.get(m)
    if ca is None:
        return None
    t = min(ca._terms) - min(cb._terms)
    return t if b.scale(PhaseScalar.monomial(t)) == a else None


def commutator_exponent(a: Element, b: Element) -> int:
    """Exponent ``t`` with ``a*b = lam**t * b*a`` for homogeneous ``a``, ``b``."""
    return 2 * wedge(a.degree(), b.degree())


def _word_indices(table: GeneratorTable, word) -> list[int]:
    return [table.index(g) for g in word]


def untwist_phase_oracle(table: GeneratorTable, word) -> int:
    """Phase exponent relating a word to its normal ordering, by bubble sort.

    Each adjacent swap ``g h -> h g`` of an out-of-order pair contributes
    ``2*wedge(deg g, deg h)``, read directly off the commutation relation.
    """
    w = _word_indices(table, word)
    deg = table._deg
    t = 0
    n = len(w)
    for i in range(n):
        for j in range(n - 1 - i):
            g, h = w[j], w[j + 1]
            if g > h:
                t += 2 * wedge(deg[g], deg[h])
                w[j], w[j + 1] = h, g
    return t


def folded_word_phase(table: GeneratorTable, word) -> int:
    """Same quantity as :func:`untwist_phase_oracle`, computed with :func:`mul`."""
    w = _word_indices(table, word)
    lhs = reduce(mul, (table.gen(i) for i in w), table.one())
    rhs = reduce(mul, (table.gen(i) for i in sorted(w)), table.one())
    t = phase_ratio(lhs, rhs)
    if t is None:
        raise AssertionError("word and its sorting differ by more than a phase")
    return t


class StarMap:
    """A *-map given by generator images, extended to the whole algebra.

    ``kind="hom"`` extends linearly and multiplicatively.  ``kind="antihom"``
    reverses products and inverts ``lam`` while keeping Gaussian coefficients;
    for degree-preserving images both are compatible with the twisted product.
    Images of conjugate partners not supplied are filled in by ``star``.
    """

    KINDS = ("hom", "antihom")

    def __init__(
        self,
        source: GeneratorTable,
        target: GeneratorTable,
        images: Mapping,
        kind: str = "hom",
        name: str | None = None,
    ):
        if kind not in self.KINDS:
            raise ValueError(f"kind must be one of {self.KINDS}")
        self.source, self.target, self.kind, self.name = source, target, kind, name
        img: list = [None] * len(source)
        for g, e in images.items():
            i = source.index(g)
            if not isinstance(e, Element):
                e = target.scalar(e)
            if e.table != target:
                raise ValueError(f"image of {source.names[i]} is not in {target.name}")
            img[i] = e
        for i in range(len(source)):
            j = source.conj[i]
            if img[i] is None and img[j] is not None:
                img[i] = star(img[j])
        for i, e in enumerate(img):
            if e is None:
                raise ValueError(f"no image for generator {source.names[i]}")
            ds = e.degrees()
            want = source.degrees[i]
            if ds and ds != {want}:
                raise ValueError(
                    f"image of {source.names[i]} has degrees {sorted(map(tuple, ds))}, "
                    f"expected {tuple(want)}: not an algebra map of the twisted product"
                )
        self.images = tuple(img)
        self._cache: dict = {}

    @classmethod
    def identity(cls, table: GeneratorTable) -> "StarMap":
        return cls(table, table, {i: table.gen(i) for i in range(len(table))}, name="id")

    def _word_image(self, m: tuple) -> Element:
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        word = [i for i, e in enumerate(m) for _ in range(e)]
        if self.kind == "antihom":
            word.reverse()
        out = self.target.one()
        for i in word:
            out = mul(out, self.images[i])
        p = self.source.sorted_phase(m)
        out = out.scale(PhaseScalar.monomial(p if self.kind == "antihom" else -p))
        self._cache[m] = out
        return out

    def __call__(self, a: Element) -> Element:
        return apply_map(self, a)

    def __repr__(self):
        return f"StarMap({self.name or '?'}: {self.source.name} -> {self.target.name}, {self.kind})"


def apply_map(phi: StarMap, a: Element) -> Element:
    if a.table != phi.source:
        raise ValueError(f"map is defined on {phi.source.name}, element lives in {a.table.name}")
    out = phi.target.zero()
    for m, c in a._terms.items():
        if phi.kind == "antihom":
            c = c.reflect()
        out = out + phi._word_image(m).scale(c)
    return out

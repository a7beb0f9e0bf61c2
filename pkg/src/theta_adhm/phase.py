"""Exact coefficients for the twisted algebras.

Every scalar in the package is a Laurent polynomial ``sum_t c_t * lam**t`` in a
single formal unit-modulus symbol ``lam = exp(i*theta)`` with Gaussian rational
coefficients ``c_t``.  Keeping ``theta`` formal means that an identity checked
here holds for every deformation parameter at once.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = [
    "GaussianRational",
    "Degree",
    "PhaseScalar",
    "wedge",
    "sigma",
    "evaluate",
    "lam",
]


def _rational(x) -> Rational:
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return _rational(Fraction(x))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _rat_str(x: Rational) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """An element ``re + i*im`` of Q(i).

    Components are kept as ``int`` whenever possible; mixing with
    :class:`fractions.Fraction` is transparent.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _rational(re)
        self.im = _rational(im)

    @classmethod
    def _make(cls, re, im) -> "GaussianRational":
        # arithmetic results are already exact; skip validation
        obj = object.__new__(cls)
        obj.re = re.numerator if type(re) is Fraction and re.denominator == 1 else re
        obj.im = im.numerator if type(im) is Fraction and im.denominator == 1 else im
        return obj

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        return cls(x, 0)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._make(a * c, 0)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm2(self) -> Rational:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(Fraction(self.re) / n, Fraction(-self.im) / n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def conj(self) -> "GaussianRational":
        return GaussianRational._make(self.re, -self.im)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "i" if self.im == 1 else ("-i" if self.im == -1 else f"{self.im}i")
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        return f"({self.re}{sign}{'' if mag == 1 else mag}i)"

    def to_json(self) -> dict:
        return {"re": _rat_str(self.re), "im": _rat_str(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        return cls(Fraction(obj["re"]), Fraction(obj["im"]))


_ZERO = GaussianRational(0, 0)
_ONE = GaussianRational(1, 0)


@dataclass(frozen=True, slots=True)
class Degree:
    """A character of the two-torus, i.e. an element of Z^2."""

    d1: int
    d2: int

    def __add__(self, other: "Degree") -> "Degree":
        return Degree(self.d1 + other.d1, self.d2 + other.d2)

    def __sub__(self, other: "Degree") -> "Degree":
        return Degree(self.d1 - other.d1, self.d2 - other.d2)

    def __neg__(self) -> "Degree":
        return Degree(-self.d1, -self.d2)

    def __mul__(self, k: int) -> "Degree":
        return Degree(k * self.d1, k * self.d2)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.d1
        yield self.d2

    def scale(self, m: "Degree") -> "Degree":
        """Componentwise product ``(m1*d1, m2*d2)``."""
        return Degree(m.d1 * self.d1, m.d2 * self.d2)

    @classmethod
    def of(cls, x) -> "Degree":
        if isinstance(x, Degree):
            return x
        d1, d2 = x
        return cls(int(d1), int(d2))

    def __str__(self):
        return f"({self.d1},{self.d2})"


ZERO_DEGREE = Degree(0, 0)


def wedge(zeta, xi) -> int:
    """Antisymmetric pairing ``zeta1*xi2 - zeta2*xi1``."""
    z1, z2 = zeta
    x1, x2 = xi
    return z1 * x2 - z2 * x1


class PhaseScalar:
    """Laurent polynomial in ``lam`` with Gaussian rational coefficients.

    The zero scalar has no stored terms.  Instances are treated as
    immutable; the internal dict is never handed out.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for t, c in items:
                c = GaussianRational.coerce(c)
                if c:
                    t = int(t)
                    prev = clean.get(t)
                    c = c if prev is None else prev + c
                    if c:
                        clean[t] = c
                    else:
                        clean.pop(t, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "PhaseScalar":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x) -> "PhaseScalar":
        if isinstance(x, PhaseScalar):
            return x
        c = GaussianRational.coerce(x)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, t: int, c=1) -> "PhaseScalar":
        c = GaussianRational.coerce(c)
        return cls._raw({int(t): c} if c else {})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def single_power(self):
        """Return ``(t, c)`` when the scalar is ``c*lam**t``, else ``None``."""
        if len(self._terms) != 1:
            return None
        (t, c), = self._terms.items()
        return t, c

    def __add__(self, other):
        if not isinstance(other, PhaseScalar):
            try:
                other = PhaseScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for t, c in other._terms.items():
            prev = out.get(t)
            if prev is None:
                out[t] = c
            else:
                s = prev + c
                if s:
                    out[t] = s
                else:
                    del out[t]
        return PhaseScalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PhaseScalar._raw({t: -c for t, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PhaseScalar):
            try:
                other = PhaseScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PhaseScalar):
            try:
                other = PhaseScalar.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return PhaseScalar._raw({})
        if len(a) == 1 and len(b) == 1:
            (s, c), = a.items()
            (t, d), = b.items()
            return PhaseScalar._raw({s + t: c * d})
        out = {}
        for s, c in a.items():
            for t, d in b.items():
                k = s + t
                prev = out.get(k)
                out[k] = c * d if prev is None else prev + c * d
        return PhaseScalar._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def shift(self, t: int) -> "PhaseScalar":
        """Multiply by ``lam**t``."""
        if t == 0:
            return self
        return PhaseScalar._raw({s + t: c for s, c in self._terms.items()})

    def conj(self) -> "PhaseScalar":
        """Complex conjugation: ``lam -> 1/lam`` and ``c -> conj(c)``."""
        return PhaseScalar._raw({-t: c.conj() for t, c in self._terms.items()})

    def reflect(self) -> "PhaseScalar":
        """Invert ``lam`` while keeping the Gaussian coefficients."""
        return PhaseScalar._raw({-t: c for t, c in self._terms.items()})

    def at_one(self) -> GaussianRational:
        """Value at ``lam = 1`` (the undeformed limit)."""
        total = _ZERO
        for c in self._terms.values():
            total = total + c
        return total

    def is_lambda_free(self) -> bool:
        return all(t == 0 for t in self._terms)

    def constant(self) -> GaussianRational:
        if not self.is_lambda_free():
            raise ValueError(f"{self} depends on lambda")
        return self._terms.get(0, _ZERO)

    def inverse(self) -> "PhaseScalar":
        """Inverse of a unit ``c*lam**t``."""
        sp = self.single_power()
        if sp is None:
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        t, c = sp
        return PhaseScalar._raw({-t: c.inverse()})

    def evaluate(self, theta: float) -> complex:
        return sum(
            (complex(c) * cmath.exp(1j * theta * t) for t, c in self._terms.items()),
            0j,
        )

    def __eq__(self, other):
        if isinstance(other, PhaseScalar):
            return self._terms == other._terms
        try:
            other = PhaseScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"PhaseScalar({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for t, c in sorted(self._terms.items()):
            if t == 0:
                parts.append(str(c))
            else:
                p = "lam" if t == 1 else f"lam^{t}"
                if c == 1:
                    parts.append(p)
                elif c == -1:
                    parts.append("-" + p)
                else:
                    parts.append(f"{c}*{p}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [{"t": t, **c.to_json()} for t, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, obj) -> "PhaseScalar":
        if isinstance(obj, dict):
            return cls.coerce(GaussianRational.from_json(obj))
        return cls((int(e["t"]), GaussianRational.from_json(e)) for e in obj)


ONE = PhaseScalar.monomial(0, 1)
ZERO = PhaseScalar()


def lam(t: int = 1) -> PhaseScalar:
    return PhaseScalar.monomial(t, 1)


def sigma(zeta, xi) -> PhaseScalar:
    """The bicharacter ``exp(i*theta*wedge(zeta, xi))`` as ``lam**wedge``."""
    return PhaseScalar.monomial(wedge(zeta, xi), 1)


def evaluate(s: PhaseScalar, theta: float) -> complex:
    return PhaseScalar.coerce(s).evaluate(theta)

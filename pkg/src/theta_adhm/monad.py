"""ADHM monads over classical and deformed twistor space.

A monad is a pair of linear families ``rho_z = sum_j M_j z_j`` and
``tau_z = sum_l N_l z_l`` with ``tau_z o rho_z = 0``.  Here ``M_j`` has shape
``(2k+n, k)`` and ``N_l`` has shape ``(k, 2k+n)``.  Matrix entries are
:class:`PhaseScalar` so that torus-rotated data stays exact; rank and
equivalence computations need lambda-free entries.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from . import linalg
from .algebra import Element, GeneratorTable, classical_limit, evaluate_at, mul, star
from .phase import Degree, GaussianRational, PhaseScalar, lam, wedge
from .twistor import Z_DEGREES

__all__ = [
    "MonadData",
    "GroupTriple",
    "MonadFamilyPresentation",
    "bpst",
    "zero_monad",
    "check_monad_condition",
    "monad_violations",
    "check_self_conjugacy",
    "check_nondegeneracy",
    "NondegeneracyReport",
    "torus_act",
    "group_act",
    "find_equivalence",
    "conjugate_monad",
    "deformed_family_relations",
    "classical_adhm_relations",
    "evaluate_family",
    "random_monad",
    "random_group_triple",
]

# self-conjugacy: N_l = sign * (M_partner)^dagger
SELF_CONJ = {1: (2, -1), 2: (1, 1), 3: (4, -1), 4: (3, 1)}


def _matrix(rows, cols, entries=None) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = PhaseScalar.coerce(0 if entries is None else entries[i][j])
    return out


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {a.shape}")
    return _matrix(a.shape[0], a.shape[1], a.tolist())


def dagger(a) -> np.ndarray:
    """Conjugate transpose (``lam -> 1/lam`` on phase entries)."""
    return np.vectorize(lambda x: x.conj(), otypes=[object])(_as_matrix(a)).T


def _scale(a: np.ndarray, c) -> np.ndarray:
    c = PhaseScalar.coerce(c)
    return np.vectorize(lambda x: c * x, otypes=[object])(a)


def _is_zero(a: np.ndarray) -> bool:
    return not any(bool(x) for x in a.flat)


def _mat_eq(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


@dataclass(frozen=True, eq=False)
class MonadData:
    k: int
    n: int
    M: tuple
    N: tuple

    def __post_init__(self):
        if self.k < 1 or self.n < 1:
            raise ValueError("k and n must be positive")
        M = tuple(_as_matrix(m) for m in self.M)
        N = tuple(_as_matrix(m) for m in self.N)
        if len(M) != 4 or len(N) != 4:
            raise ValueError("a monad needs four M and four N matrices")
        big = 2 * self.k + self.n
        for j, m in enumerate(M, 1):
            if m.shape != (big, self.k):
                raise ValueError(f"M{j} has shape {m.shape}, expected {(big, self.k)}")
        for j, m in enumerate(N, 1):
            if m.shape != (self.k, big):
                raise ValueError(f"N{j} has shape {m.shape}, expected {(self.k, big)}")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "N", N)

    @property
    def size(self) -> int:
        return 2 * self.k + self.n

    def __eq__(self, other):
        if not isinstance(other, MonadData):
            return NotImplemented
        return (
            (self.k, self.n) == (other.k, other.n)
            and all(_mat_eq(a, b) for a, b in zip(self.M, other.M))
            and all(_mat_eq(a, b) for a, b in zip(self.N, other.N))
        )

    def __hash__(self):
        return hash((self.k, self.n))

    def is_lambda_free(self) -> bool:
        return all(x.is_lambda_free() for m in self.M + self.N for x in m.flat)

    def to_json(self) -> dict:
        def enc(m):
            return [[x.constant().to_json() if x.is_lambda_free() else x.to_json() for x in row] for row in m]

        return {"k": self.k, "n": self.n, "M": [enc(m) for m in self.M], "N": [enc(m) for m in self.N]}

    @classmethod
    def from_json(cls, obj) -> "MonadData":
        """Parse the JSON form; errors carry the path of the offending value."""
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict):
            raise MonadJSONError("$", "expected an object")
        for key in ("k", "n", "M", "N"):
            if key not in obj:
                raise MonadJSONError(f"$.{key}", "missing")
        k, n = obj["k"], obj["n"]
        for key, v in (("k", k), ("n", n)):
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise MonadJSONError(f"$.{key}", "expected a positive integer")
        mats = {}
        for key, shape in (("M", (2 * k + n, k)), ("N", (k, 2 * k + n))):
            seq = obj[key]
            if not isinstance(seq, list) or len(seq) != 4:
                raise MonadJSONError(f"$.{key}", "expected a list of four matrices")
            out = []
            for j, m in enumerate(seq):
                path = f"$.{key}[{j}]"
                if not isinstance(m, list) or len(m) != shape[0]:
                    raise MonadJSONError(path, f"expected {shape[0]} rows")
                rows = []
                for a, row in enumerate(m):
                    if not isinstance(row, list) or len(row) != shape[1]:
                        raise MonadJSONError(f"{path}[{a}]", f"expected {shape[1]} entries")
                    rows.append([_parse_entry(x, f"{path}[{a}][{b}]") for b, x in enumerate(row)])
                out.append(rows)
            mats[key] = out
        return cls(k, n, mats["M"], mats["N"])


class MonadJSONError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _parse_entry(x, path: str) -> PhaseScalar:
    try:
        if isinstance(x, (dict, list)):
            return PhaseScalar.from_json(x)
        if isinstance(x, (int, str)) and not isinstance(x, bool):
            return PhaseScalar.coerce(GaussianRational.from_json({"re": str(x), "im": "0"}))
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise MonadJSONError(path, f"bad complex entry ({exc})") from None
    raise MonadJSONError(path, "bad complex entry")


def _unit(size: int, i: int, column: bool = True) -> list:
    v = [[0] for _ in range(size)]
    v[i][0] = 1
    return v if column else [[r[0] for r in v]]


def bpst() -> MonadData:
    """The basic charge-one datum with ``k = 1``, ``n = 2``."""
    M = [_unit(4, 2), _unit(4, 3), _unit(4, 0), _unit(4, 1)]
    N = [_scale(_matrix(1, 4, _unit(4, 3, False)), -1), _unit(4, 2, False),
         _scale(_matrix(1, 4, _unit(4, 1, False)), -1), _unit(4, 0, False)]
    return MonadData(1, 2, M, N)


def zero_monad(k: int, n: int) -> MonadData:
    big = 2 * k + n
    return MonadData(k, n, [_matrix(big, k)] * 4, [_matrix(k, big)] * 4)


def _bracket_phase(a: int, b: int) -> PhaseScalar:
    return lam(2 * wedge(Z_DEGREES[b], Z_DEGREES[a]))


def monad_violations(d: MonadData, deformed: bool = False) -> list[tuple]:
    """Every violated entry as ``(j, l, c, d)`` with ``j <= l`` (1-based z indices)."""
    bad = []
    for a in range(1, 5):
        for b in range(a, 5):
            if a == b:
                lhs = d.N[a - 1].dot(d.M[a - 1])
            else:
                phase = _bracket_phase(a, b) if deformed else PhaseScalar.coerce(1)
                lhs = d.N[a - 1].dot(d.M[b - 1]) + _scale(d.N[b - 1].dot(d.M[a - 1]), phase)
            for (c, e), x in np.ndenumerate(lhs):
                if x:
                    bad.append((a, b, c, e))
    return bad


def check_monad_condition(d: MonadData, deformed: bool = False) -> bool:
    """Classical or deformed ADHM equations, exactly."""
    return not monad_violations(d, deformed)


def check_self_conjugacy(d: MonadData) -> bool:
    return all(
        _mat_eq(d.N[l - 1], _scale(dagger(d.M[p - 1]), s)) for l, (p, s) in SELF_CONJ.items()
    )


@dataclass(frozen=True)
class NondegeneracyReport:
    ok: bool
    samples: int
    failing_point: tuple | None = None
    ranks: tuple | None = None

    def __bool__(self):
        return self.ok


def _random_point(rng: random.Random) -> list[GaussianRational]:
    while True:
        z = [GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(4)]
        if any(z):
            return z


def check_nondegeneracy(d: MonadData, samples: int = 100, seed: int = 0) -> NondegeneracyReport:
    """Pointwise injectivity of rho_z and surjectivity of tau_z at random rational z."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = random.Random(seed)
    for _ in range(samples):
        z = _random_point(rng)
        rho = reduce(lambda x, y: x + y, (_scale(m, c) for m, c in zip(d.M, z)))
        tau = reduce(lambda x, y: x + y, (_scale(m, c) for m, c in zip(d.N, z)))
        ranks = (linalg.rank(rho), linalg.rank(tau))
        if ranks != (d.k, d.k):
            return NondegeneracyReport(False, samples, tuple(z), ranks)
    return NondegeneracyReport(True, samples)


def torus_act(d: MonadData, r1_exponent: int, r2_exponent: int) -> MonadData:
    """Rotate by the torus element with formal phases ``lam**r``.

    Both ``M_j`` and ``N_j`` pick up ``mu_j = lam**(deg z_j . r)``.
    """
    mu = {j: lam(d1 * r1_exponent + d2 * r2_exponent) for j, (d1, d2) in Z_DEGREES.items()}
    return MonadData(
        d.k, d.n,
        [_scale(m, mu[j]) for j, m in enumerate(d.M, 1)],
        [_scale(m, mu[j]) for j, m in enumerate(d.N, 1)],
    )


@dataclass(frozen=True, eq=False)
class GroupTriple:
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        for name in ("u", "v", "w"):
            m = _as_matrix(getattr(self, name))
            if m.shape[0] != m.shape[1]:
                raise ValueError(f"{name} must be square")
            object.__setattr__(self, name, m)

    def is_invertible(self) -> bool:
        return all(linalg.det(m) for m in (self.u, self.v, self.w))

    def to_json(self) -> dict:
        return {n: [[x.constant().to_json() for x in row] for row in getattr(self, n)] for n in ("u", "v", "w")}

    @classmethod
    def identity(cls, k: int, n: int) -> "GroupTriple":
        return cls(linalg.identity(k), linalg.identity(2 * k + n), linalg.identity(k))


def _lift(m) -> np.ndarray:
    return _as_matrix(m)


def group_act(d: MonadData, g: GroupTriple) -> MonadData:
    """``M_j -> v M_j u^-1`` and ``N_l -> w N_l v^-1``; raises on a singular triple."""
    if g.u.shape != (d.k, d.k) or g.w.shape != (d.k, d.k) or g.v.shape != (d.size, d.size):
        raise ValueError("group element does not match the monad shape")
    u_inv = _lift(linalg.inverse(g.u))
    v_inv = _lift(linalg.inverse(g.v))
    linalg.inverse(g.w)
    return MonadData(
        d.k, d.n,
        [g.v.dot(m).dot(u_inv) for m in d.M],
        [g.w.dot(m).dot(v_inv) for m in d.N],
    )


def _equivalence_system(d1: MonadData, d2: MonadData):
    """Linear equations in the entries of (u, v, w) for ``g . d1 = d2``."""
    k, s = d1.k, d1.size
    nu, nv = k * k, s * s
    n_unknowns = nu + nv + k * k

    def u_idx(i, j):
        return i * k + j

    def v_idx(i, j):
        return nu + i * s + j

    def w_idx(i, j):
        return nu + nv + i * k + j

    M1 = [linalg.as_field_matrix(m) for m in d1.M]
    M2 = [linalg.as_field_matrix(m) for m in d2.M]
    N1 = [linalg.as_field_matrix(m) for m in d1.N]
    N2 = [linalg.as_field_matrix(m) for m in d2.N]
    zero = GaussianRational(0)
    rows = []
    for j in range(4):
        # (v M1)[a,b] - (M2 u)[a,b] = 0
        for a in range(s):
            for b in range(k):
                row = [zero] * n_unknowns
                for c in range(s):
                    row[v_idx(a, c)] = row[v_idx(a, c)] + M1[j][c][b]
                for c in range(k):
                    row[u_idx(c, b)] = row[u_idx(c, b)] - M2[j][a][c]
                rows.append(row)
        # (w N1)[a,b] - (N2 v)[a,b] = 0
        for a in range(k):
            for b in range(s):
                row = [zero] * n_unknowns
                for c in range(k):
                    row[w_idx(a, c)] = row[w_idx(a, c)] + N1[j][c][b]
                for c in range(s):
                    row[v_idx(c, b)] = row[v_idx(c, b)] - N2[j][a][c]
                rows.append(row)

    def unpack(x):
        u = [[x[u_idx(i, j)] for j in range(k)] for i in range(k)]
        v = [[x[v_idx(i, j)] for j in range(s)] for i in range(s)]
        w = [[x[w_idx(i, j)] for j in range(k)] for i in range(k)]
        return GroupTriple(u, v, w)

    return rows, n_unknowns, unpack


def _combinations(dim: int, bound: int, limit: int, seed: int):
    """All-ones first, then a seeded shuffle of the small-integer lattice."""
    yield (1,) * dim
    if dim <= 6:
        lattice = [c for c in itertools.product(range(-bound, bound + 1), repeat=dim) if any(c)]
        random.Random(seed).shuffle(lattice)
        yield from lattice[:limit]
    else:
        rng = random.Random(seed)
        for _ in range(limit):
            yield tuple(rng.randint(-bound, bound) for _ in range(dim))


def find_equivalence(
    d1: MonadData, d2: MonadData, bound: int = 2, limit: int = 500, seed: int = 0
) -> GroupTriple | None:
    """Search for ``g`` with ``group_act(d1, g) == d2``; ``None`` if the bounded search fails."""
    if (d1.k, d1.n) != (d2.k, d2.n):
        raise ValueError("monads of different shape cannot be equivalent")
    if not (d1.is_lambda_free() and d2.is_lambda_free()):
        raise ValueError("equivalence search needs lambda-free data")
    rows, n_unknowns, unpack = _equivalence_system(d1, d2)
    basis = linalg.nullspace(rows) if rows else [
        [GaussianRational(int(i == j)) for i in range(n_unknowns)] for j in range(n_unknowns)
    ]
    if not basis:
        return None
    for coeffs in _combinations(len(basis), bound, limit, seed):
        x = [GaussianRational(0)] * n_unknowns
        for c, vec in zip(coeffs, basis):
            if c:
                x = [xi + c * vi for xi, vi in zip(x, vec)]
        g = unpack(x)
        if g.is_invertible() and group_act(d1, g) == d2:
            return g
    return None


def conjugate_monad(d: MonadData) -> MonadData:
    """The monad of ``rho'_{J(z)}, tau'_{J(z)}`` built from adjoints.

    ``M'_1 = N_2^+``, ``M'_2 = -N_1^+``, ``M'_3 = N_4^+``, ``M'_4 = -N_3^+``
    and ``N'_1 = M_2^+``, ``N'_2 = -M_1^+``, ``N'_3 = M_4^+``, ``N'_4 = -M_3^+``.
    """
    M, N = d.M, d.N
    new_M = [dagger(N[1]), _scale(dagger(N[0]), -1), dagger(N[3]), _scale(dagger(N[2]), -1)]
    new_N = [dagger(M[1]), _scale(dagger(M[0]), -1), dagger(M[3]), _scale(dagger(M[2]), -1)]
    return MonadData(d.k, d.n, new_M, new_N)


# --- the deformed family algebra --------------------------------------------


def _m_name(j: int, a: int, b: int) -> str:
    return f"M{j}[{a},{b}]"


@dataclass(frozen=True)
class MonadFamilyPresentation:
    k: int
    n: int
    table: GeneratorTable
    relations: dict
    degree_sign: int = 1
    symbol_phases: dict = field(default_factory=dict)

    def m(self, j: int, a: int, b: int) -> Element:
        return self.table.gen(_m_name(j, a, b))

    def commutation_exponent(self, g1: str, g2: str) -> int:
        return 2 * wedge(self.table.degree(g1), self.table.degree(g2))

    def relation_list(self) -> list[Element]:
        return [self.relations[key] for key in sorted(self.relations)]


def family_table(k: int, n: int, degree_sign: int = 1) -> GeneratorTable:
    if degree_sign not in (1, -1):
        raise ValueError("degree_sign must be +1 or -1")
    gens = []
    for j in range(1, 5):
        d = Degree.of(Z_DEGREES[j]) * degree_sign
        for a in range(2 * k + n):
            for b in range(k):
                name = _m_name(j, a, b)
                gens.append((name, d, name + "*"))
                gens.append((name + "*", -d, name))
    return GeneratorTable(f"family({k},{n})", gens)


def _n_symbol(table: GeneratorTable, l: int, c: int, b: int) -> Element:
    """``N_l^{cb}`` eliminated through self-conjugacy."""
    p, s = SELF_CONJ[l]
    return s * star(table.gen(_m_name(p, b, c)))


def deformed_family_relations(k: int, n: int, degree_sign: int = 1) -> MonadFamilyPresentation:
    """Normal-ordered entries of ``tau o rho`` with ``N`` eliminated.

    Keys are ``(j, l, c, d)`` with ``j <= l``.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    table = family_table(k, n, degree_sign)
    big = 2 * k + n

    def block(x: int, y: int, c: int, e: int) -> Element:
        return reduce(
            lambda acc, b: acc + mul(_n_symbol(table, x, c, b), table.gen(_m_name(y, b, e))),
            range(big),
            table.zero(),
        )

    rels = {}
    for a in range(1, 5):
        for b in range(a, 5):
            for c in range(k):
                for e in range(k):
                    if a == b:
                        rels[a, b, c, e] = block(a, a, c, e)
                    else:
                        rels[a, b, c, e] = block(a, b, c, e) + _bracket_phase(a, b) * block(b, a, c, e)
    return MonadFamilyPresentation(k, n, table, rels, degree_sign)


def classical_adhm_relations(k: int, n: int, degree_sign: int = 1) -> dict:
    """The ADHM brackets as commutative polynomials, written monomial by monomial.

    The diagonal bracket ``N_j M_j + N_j M_j`` is normalized to ``N_j M_j``.
    """
    table = family_table(k, n, degree_sign)
    big = 2 * k + n

    def commutative(x: Element, y: Element) -> Element:
        (mx, cx), = x.terms()
        (my, cy), = y.terms()
        return Element(table, [(tuple(p + q for p, q in zip(mx, my)), cx * cy)])

    def bracket(x, y, c, e):
        out = table.zero()
        for b in range(big):
            out = out + commutative(_n_symbol(table, x, c, b), table.gen(_m_name(y, b, e)))
        return out

    rels = {}
    for a in range(1, 5):
        for b in range(a, 5):
            for c in range(k):
                for e in range(k):
                    rels[a, b, c, e] = bracket(a, a, c, e) if a == b else bracket(a, b, c, e) + bracket(b, a, c, e)
    return rels


def specialize_at_one(p: MonadFamilyPresentation) -> dict:
    return {key: classical_limit(r) for key, r in p.relations.items()}


def family_values(p: MonadFamilyPresentation, d: MonadData) -> dict:
    if (d.k, d.n) != (p.k, p.n):
        raise ValueError("monad shape does not match the family")
    vals = {}
    for j in range(1, 5):
        for (a, b), x in np.ndenumerate(d.M[j - 1]):
            vals[_m_name(j, a, b)] = x
            vals[_m_name(j, a, b) + "*"] = x.conj()
    return vals


def evaluate_family(p: MonadFamilyPresentation, d: MonadData) -> dict:
    """Value of every relation at the point ``d`` (its ``M`` matrices).

    Each monomial of a relation is sent to the product of the point's
    coordinates.
    """
    vals = family_values(p, d)
    return {key: evaluate_at(r, vals) for key, r in p.relations.items()}



def random_monad(k: int, n: int, rng: random.Random, self_conjugate: bool = False, spread: int = 3) -> MonadData:
    """Random datum with small Gaussian integer entries (not a monad in general)."""
    big = 2 * k + n

    def rand(rows, cols):
        return [[GaussianRational(rng.randint(-spread, spread), rng.randint(-spread, spread)) for _ in range(cols)]
                for _ in range(rows)]

    M = [_matrix(big, k, rand(big, k)) for _ in range(4)]
    if self_conjugate:
        N = [_scale(dagger(M[p - 1]), s) for l, (p, s) in sorted(SELF_CONJ.items())]
    else:
        N = [_matrix(k, big, rand(k, big)) for _ in range(4)]
    return MonadData(k, n, M, N)


def random_invertible(size: int, rng: random.Random, spread: int = 2) -> np.ndarray:
    while True:
        m = [[GaussianRational(rng.randint(-spread, spread), rng.randint(-1, 1)) for _ in range(size)]
             for _ in range(size)]
        if linalg.det(m):
            return _matrix(size, size, m)


def random_group_triple(k: int, n: int, rng: random.Random) -> GroupTriple:
    return GroupTriple(random_invertible(k, rng), random_invertible(2 * k + n, rng), random_invertible(k, rng))

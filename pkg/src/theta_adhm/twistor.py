"""The deformed twistor fibration inside the twisted algebra of C^4.

Projective twistor space and the four-sphere are handled as subalgebras of
the twisted polynomial algebra on ``z1..z4`` and their conjugates.  The
radius ``r^2 = sum z_i* z_i`` is never inverted; every identity is checked in
homogeneous form.

Two generating conventions appear:

* ``q[j, l] = z_j * z_l*`` (ordered product).  These satisfy the projection
  relations with no phases.
* ``weyl(...)``: the spectral conjugate of a classical monomial, i.e. the
  basis element ``e_m``.  The sphere coordinates are spectral conjugates of
  the classical ones, which makes the sphere relation hold without phases:
  ``x1 = 2(lam*q13 + lam^-1*q24*)`` and ``x2 = 2(lam^-1*q23 - lam*q14*)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import Element, GeneratorTable, StarMap, commutator_exponent, mul, star
from .fuzz import random_element
from .phase import PhaseScalar

Z_DEGREES = {1: (1, 0), 2: (-1, 0), 3: (0, 1), 4: (0, -1)}

# entries of the projection matrix, named as in the classical presentation
Q_NAMES = {
    (1, 1): "a1", (2, 2): "a2", (3, 3): "a3", (4, 4): "a4",
    (1, 2): "u1", (1, 3): "u2", (1, 4): "u3",
    (2, 3): "v3", (2, 4): "v2", (3, 4): "v1",
}


def c4_table() -> GeneratorTable:
    gens = []
    for j, (d1, d2) in Z_DEGREES.items():
        gens.append((f"z{j}", (d1, d2), f"z{j}*"))
        gens.append((f"z{j}*", (-d1, -d2), f"z{j}"))
    return GeneratorTable("c4", gens)


C4 = c4_table()


def weyl(table: GeneratorTable, *factors) -> Element:
    """Basis element ``e_m`` for the commutative product of ``factors``."""
    m = [0] * len(table)
    for g in factors:
        m[table.index(g)] += 1
    return Element._raw(table, {tuple(m): PhaseScalar.monomial(0, 1)})


@dataclass(frozen=True)
class TwistorContext:
    table: GeneratorTable
    z: dict
    zs: dict
    q: dict
    x0: Element
    x1: Element
    x2: Element
    r2: Element
    named: dict = field(default_factory=dict)

    def qname(self, name: str) -> Element:
        """Entry of the projection matrix by its classical name (``u2``, ``v3*``, ...)."""
        return self.named[name]


def make_context() -> TwistorContext:
    t = C4
    z = {j: t.gen(f"z{j}") for j in Z_DEGREES}
    zs = {j: t.gen(f"z{j}*") for j in Z_DEGREES}
    q = {(j, l): mul(z[j], zs[l]) for j in z for l in z}
    x0 = q[1, 1] + q[2, 2] - q[3, 3] - q[4, 4]
    x1 = 2 * (weyl(t, "z1", "z3*") + weyl(t, "z4", "z2*"))
    x2 = 2 * (weyl(t, "z2", "z3*") - weyl(t, "z4", "z1*"))
    r2 = zs[1] * z[1] + zs[2] * z[2] + zs[3] * z[3] + zs[4] * z[4]
    named = {}
    for (j, l), n in Q_NAMES.items():
        named[n] = q[j, l]
        if j != l:
            named[n + "*"] = q[l, j]
    return TwistorContext(t, z, zs, q, x0, x1, x2, r2, named)


def ordered_sphere_coordinates(ctx: TwistorContext) -> tuple[Element, Element]:
    """``x1 = 2(q13 + q24*)`` and ``x2 = 2(q23 - q14*)`` in ordered products.

    They agree with ``ctx.x1``, ``ctx.x2`` at ``lam = 1`` only.
    """
    q = ctx.q
    return 2 * (q[1, 3] + star(q[2, 4])), 2 * (q[2, 3] - star(q[1, 4]))


def printed_x2_variant(ctx: TwistorContext) -> Element:
    """``2(z2* z3 - z1* z4)``; not homogeneous, kept as a negative control."""
    return 2 * (mul(ctx.zs[2], ctx.z[3]) - mul(ctx.zs[1], ctx.z[4]))


def sphere_residual(ctx: TwistorContext, x1: Element | None = None, x2: Element | None = None) -> Element:
    x1 = ctx.x1 if x1 is None else x1
    x2 = ctx.x2 if x2 is None else x2
    return star(x1) * x1 + star(x2) * x2 + ctx.x0 * ctx.x0 - ctx.r2 * ctx.r2


def verify_sphere_relation(ctx: TwistorContext, x1: Element | None = None, x2: Element | None = None) -> bool:
    """``x1* x1 + x2* x2 + x0^2 == (r^2)^2`` exactly."""
    return not sphere_residual(ctx, x1, x2)


def projection_residuals(ctx: TwistorContext) -> dict:
    q, r2 = ctx.q, ctx.r2
    out = {}
    for j in range(1, 5):
        for l in range(1, 5):
            lhs = q[j, 1] * q[1, l] + q[j, 2] * q[2, l] + q[j, 3] * q[3, l] + q[j, 4] * q[4, l]
            out[("square", j, l)] = lhs - r2 * q[j, l]
            out[("adjoint", j, l)] = star(q[j, l]) - q[l, j]
    out[("trace",)] = q[1, 1] + q[2, 2] + q[3, 3] + q[4, 4] - r2
    return out


def verify_projection_relations(ctx: TwistorContext) -> bool:
    return not any(projection_residuals(ctx).values())


# J on C^4: (z1, z2, z3, z4) -> (-z2*, z1*, -z4*, z3*)
J_IMAGES = {"z1": ("z2*", -1), "z2": ("z1*", 1), "z3": ("z4*", -1), "z4": ("z3*", 1)}

# J on the projection matrix; conjugate entries follow by applying *
J_TABLE = {
    "a1": ("a2", 1), "a2": ("a1", 1), "a3": ("a4", 1), "a4": ("a3", 1),
    "u1": ("u1", -1), "v1": ("v1", -1),
    "u2": ("v2*", 1), "u3": ("v3*", -1), "v2": ("u2*", 1), "v3": ("u3*", -1),
}


def _conj_name(n: str) -> str:
    return n[:-1] if n.endswith("*") else n + "*"


def j_table_full() -> dict:
    table = dict(J_TABLE)
    for src, (dst, sign) in J_TABLE.items():
        if not src.startswith("a"):
            table[src + "*"] = (_conj_name(dst), sign)
    return table


def j_map(ctx: TwistorContext, kind: str = "antihom") -> StarMap:
    """The quaternionic structure as a *-map of the twisted algebra.

    The default ``antihom`` reverses products and sends ``lam`` to its
    inverse.  It reproduces the classical table on the ordered products
    ``q[j, l]``.  ``kind="hom"`` gives the map obtained by deforming the
    classical automorphism functorially; it agrees with the table only on
    spectrally conjugated generators (see :func:`weyl`).
    """
    t = ctx.table
    images = {src: sign * t.gen(dst) for src, (dst, sign) in J_IMAGES.items()}
    return StarMap(t, t, images, kind=kind, name="J")


def j_table_mismatches(ctx: TwistorContext, J: StarMap) -> list[str]:
    bad = []
    for src, (dst, sign) in j_table_full().items():
        if J(ctx.qname(src)) != sign * ctx.qname(dst):
            bad.append(src)
    return bad


def verify_j(ctx: TwistorContext, pairs: int = 500, seed: int = 0, kind: str = "antihom") -> dict[str, bool]:
    """Checks for J: product law, table, fixed sphere coordinates, J^2 on q."""
    J = j_map(ctx, kind)
    rng = random.Random(seed)
    products = True
    for _ in range(pairs):
        a = random_element(ctx.table, rng)
        b = random_element(ctx.table, rng)
        lhs = J(a * b)
        rhs = J(b) * J(a) if kind == "antihom" else J(a) * J(b)
        if lhs != rhs:
            products = False
            break
    stars = all(J(star(g)) == star(J(g)) for g in ctx.table.gens())
    fixed = all(J(e) == e for e in (ctx.x0, ctx.x1, ctx.x2, ctx.r2))
    involutive = all(J(J(v)) == v for v in ctx.q.values())
    return {
        "products": products and stars,
        "table": not j_table_mismatches(ctx, J),
        "fixes_sphere": fixed,
        "square_on_q": involutive,
    }


def relations_summary(algebra: str) -> dict:
    """Generator degrees and pairwise commutation exponents, JSON-ready."""
    ctx = make_context()
    if algebra == "c4":
        items = [(n, ctx.table.gen(n)) for n in ctx.table.names]
    elif algebra == "cp3":
        items = sorted(ctx.named.items(), key=lambda kv: (len(kv[0]), kv[0]))
    elif algebra == "s4":
        items = [("x0", ctx.x0), ("x1", ctx.x1), ("x1*", star(ctx.x1)), ("x2", ctx.x2), ("x2*", star(ctx.x2))]
    else:
        raise ValueError(f"unknown algebra {algebra!r}; expected c4, cp3 or s4")
    gens = [{"name": n, "degree": list(e.degree())} for n, e in items]
    pairs = []
    for i, (n1, e1) in enumerate(items):
        for n2, e2 in items[i + 1:]:
            pairs.append({"a": n1, "b": n2, "exponent": commutator_exponent(e1, e2)})
    return {"algebra": algebra, "generators": gens, "commutation": pairs}

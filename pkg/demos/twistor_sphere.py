"""
Deformed twistor coordinates and the four-sphere
================================================

Builds the q-commuting coordinates on C^4, forms the sphere coordinates
and checks the quadratic sphere relation with a formal deformation unit.
"""

from theta_adhm.algebra import commutator_exponent, star
from theta_adhm.twistor import (
    make_context,
    ordered_sphere_coordinates,
    sphere_residual,
    verify_j,
    verify_projection_relations,
)

ctx = make_context()

# z1 and z3 carry degrees (1,0) and (0,1), so they commute up to lam^2
z1, z3 = ctx.z[1], ctx.z[3]
print("z1 z3 =", z1 * z3)
print("z3 z1 =", z3 * z1)

# sphere coordinates and their mutual phase
print("x1 =", ctx.x1)
print("x2 =", ctx.x2)
print("x1 x2 = lam^%d x2 x1" % commutator_exponent(ctx.x1, ctx.x2))

# the residual normalizes to zero with lam left symbolic
print("sphere residual:", sphere_residual(ctx) or 0)

# the naive product order leaves a phase-dependent remainder
o1, o2 = ordered_sphere_coordinates(ctx)
print("residual with naive ordering:", sphere_residual(ctx, o1, o2))

print("projection relations hold:", verify_projection_relations(ctx))
print("J checks:", verify_j(ctx, pairs=100))
print("x0 is self-adjoint:", star(ctx.x0) == ctx.x0)

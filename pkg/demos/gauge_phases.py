"""
Winding numbers and commutativity
=================================

For each winding number the Landstad generators commute up to a power of
lam. The power vanishes identically only on the line m1 + m2 = 1.
"""

from theta_adhm.gauge import commutation_exponent_landstad, verify_theorem_final

zeta, xi = (1, 0), (0, 1)
print("exponent for zeta=(1,0), xi=(0,1):")
for m in [(0, 0), (1, 0), (0, 1), (1, 1), (2, -1), (-1, 0)]:
    t = commutation_exponent_landstad(m, zeta, xi, "both")
    print(f"  m = {m}: {t}")

print()
print("commutative on the radius-4 box:")
for m1 in range(-2, 3):
    row = "".join(" C" if verify_theorem_final((m1, m2), 4) else " ." for m2 in range(-2, 3))
    print(f"  m1 = {m1:+d}:{row}")

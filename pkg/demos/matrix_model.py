"""
A finite matrix model
=====================

Clock and shift matrices at lam = exp(i pi / q) give a q-dimensional
representation. Symbolic identities become matrix identities.
"""

import numpy as np

from theta_adhm.numrep import build_rep, check_rep, evaluate_element
from theta_adhm.twistor import make_context

q = 5
rep = build_rep(q, moduli=(1, 2, "1/2", 3))
A, B = rep["z1"], rep["z3"]
omega = np.exp(2j * np.pi / q)
print("|z1 z3 - omega z3 z1| =", np.abs(A @ B - omega * B @ A).max())

ctx = make_context()
X1 = evaluate_element(rep, ctx.x1)
print("x1 as a matrix (rounded):")
print(np.round(X1, 3))

for q in (3, 5, 7):
    report = check_rep(q, pairs=50)
    worst = max(report["residuals"].values())
    print(f"q = {q}: ok = {report['ok']}, worst residual {worst:.1e}")

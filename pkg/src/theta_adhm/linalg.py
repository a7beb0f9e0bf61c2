"""Exact Gaussian elimination over Q(i).

Matrices are plain nested sequences (or 2-d object arrays) whose entries
coerce to :class:`~theta_adhm.phase.GaussianRational`.
"""

from __future__ import annotations

import numpy as np

from .phase import GaussianRational, PhaseScalar

__all__ = ["as_field_matrix", "rref", "rank", "nullspace", "det", "inverse", "identity"]


def _entry(x) -> GaussianRational:
    if isinstance(x, PhaseScalar):
        return x.constant()
    return GaussianRational.coerce(x)


def as_field_matrix(a) -> list[list[GaussianRational]]:
    a = np.asarray(a, dtype=object)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return [[_entry(x) for x in row] for row in a]


def rref(a):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    m = as_field_matrix(a)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        # the systems met here are sparse, so only touch nonzero pivot-row entries
        support = [(j, x * inv) for j, x in enumerate(m[r]) if x]
        pivot_row = m[r]
        for j, x in support:
            pivot_row[j] = x
        for i in range(nrows):
            row = m[i]
            if i != r and row[c]:
                f = row[c]
                for j, y in support:
                    row[j] = row[j] - f * y
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a) -> int:
    return len(rref(a)[1])


def nullspace(a) -> list[list[GaussianRational]]:
    """Basis of ``{x : a @ x = 0}``, one basis vector per free column."""
    m, pivots = rref(a)
    ncols = len(m[0]) if m else np.asarray(a, dtype=object).shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [GaussianRational(0)] * ncols
        v[f] = GaussianRational(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def det(a) -> GaussianRational:
    m = as_field_matrix(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    d = GaussianRational(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return GaussianRational(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d = d * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def identity(n: int) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = GaussianRational(1 if i == j else 0)
    return out


def inverse(a) -> np.ndarray:
    m = as_field_matrix(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse of a non-square matrix")
    aug = [row + [GaussianRational(1 if i == j else 0) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = red[i][n + j]
    return out

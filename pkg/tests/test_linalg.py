import random

import pytest
import sympy
from hypothesis import given, strategies as st

from theta_adhm import linalg
from theta_adhm.phase import GaussianRational, lam


def to_sympy(m):
    return sympy.Matrix([[sympy.Rational(str(x.re)) + sympy.I * sympy.Rational(str(x.im)) for x in row] for row in m])


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    entry = st.builds(GaussianRational, st.integers(-2, 2), st.integers(-1, 1))
    # many zeros so that rank deficiency is common
    entry = st.one_of(st.just(GaussianRational(0)), entry)
    return [[draw(entry) for _ in range(c)] for _ in range(r)]


@given(matrices())
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == to_sympy(m).rank()


@given(matrices())
def test_nullspace_is_a_basis(m):
    basis = linalg.nullspace(m)
    assert len(basis) == len(m[0]) - to_sympy(m).rank()
    for v in basis:
        for row in m:
            assert sum((a * b for a, b in zip(row, v)), GaussianRational(0)) == 0


@given(matrices(4, 4).filter(lambda m: len(m) == len(m[0])))
def test_det_matches_sympy(m):
    d = linalg.det(m)
    ref = sympy.nsimplify(to_sympy(m).det())
    assert sympy.simplify(sympy.Rational(str(d.re)) + sympy.I * sympy.Rational(str(d.im)) - ref) == 0


def test_inverse_round_trip():
    rng = random.Random(1)
    for _ in range(20):
        m = [[GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        if not linalg.det(m):
            continue
        inv = linalg.inverse(m)
        prod = [[sum((m[i][k] * inv[k][j] for k in range(3)), GaussianRational(0)) for j in range(3)] for i in range(3)]
        assert prod == [[GaussianRational(int(i == j)) for j in range(3)] for i in range(3)]


def test_singular_and_shape_errors():
    with pytest.raises(ZeroDivisionError):
        linalg.inverse([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        linalg.det([[1, 2]])
    with pytest.raises(ValueError):
        linalg.rank([1, 2, 3])
    with pytest.raises(ValueError, match="depends on lambda"):
        linalg.rank([[lam(1)]])

"""Properties of the exact integer/rational linear algebra."""

from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from thetacover import exactla as xla

small_int = st.integers(min_value=-6, max_value=6)


def square(n):
    return st.lists(st.lists(small_int, min_size=n, max_size=n),
                    min_size=n, max_size=n)


@given(st.one_of(square(2), square(3), square(4)))
@settings(max_examples=60, deadline=None)
def test_det_matches_float(mat):
    exact = xla.det(mat)
    approx = np.linalg.det(np.array(mat, dtype=float))
    assert abs(float(exact) - approx) < 1e-6


@given(square(3), square(3))
@settings(max_examples=60, deadline=None)
def test_det_multiplicative(a, b):
    assert xla.det(xla.mat_mul(a, b)) == xla.det(a) * xla.det(b)


@given(square(3))
@settings(max_examples=60, deadline=None)
def test_inverse_roundtrip(mat):
    if xla.det(mat) == 0:
        return
    assert xla.mat_eq(xla.mat_mul(mat, xla.inv(mat)),
                      xla.identity(3, one=Fraction(1)))


@given(st.one_of(square(2), square(3)))
@settings(max_examples=80, deadline=None)
def test_hnf_transform_exact(mat):
    h, u = xla.hnf_with_transform(mat)
    assert xla.mat_eq(xla.mat_mul(u, mat), h)
    assert abs(xla.det(u)) == 1
    # pivots positive, zero rows at the bottom
    nonzero = [row for row in h if any(row)]
    assert h[:len(nonzero)] == nonzero
    pivots = [next(j for j, x in enumerate(row) if x) for row in nonzero]
    assert pivots == sorted(pivots)
    assert all(row[p] > 0 for row, p in zip(nonzero, pivots))


@given(square(3))
@settings(max_examples=60, deadline=None)
def test_rank_agrees_with_float(mat):
    assert xla.rank(mat) == np.linalg.matrix_rank(np.array(mat, dtype=float))


@given(square(2))
@settings(max_examples=60, deadline=None)
def test_residue_box_size(mat):
    d = xla.det(mat)
    if d == 0:
        return
    reps = xla.box_representatives(mat)
    assert len(reps) == abs(int(d))


@given(square(3))
@settings(max_examples=60, deadline=None)
def test_kernel_annihilates(mat):
    for row in xla.int_row_kernel(mat):
        assert all(x == 0 for x in xla.mat_mul([row], mat)[0])


@given(square(3))
@settings(max_examples=40, deadline=None)
def test_saturation_contains_rows(mat):
    if all(x == 0 for row in mat for x in row):
        return
    sat = xla.saturation(mat)
    # every original row must have integer coordinates in the saturation
    coords = xla.lattice_coordinates(sat, [row for row in mat if any(row)])
    rebuilt = xla.mat_mul(coords, sat)
    assert xla.mat_eq(rebuilt, [row for row in mat if any(row)])


def test_solve_left_consistency():
    a = [[1, 2, 0], [0, 1, 1]]
    x = xla.solve_left(a, [1, 3, 1])
    assert x is not None
    assert xla.mat_mul([x], a)[0] == [1, 3, 1]
    assert xla.solve_left([[1, 0, 0]], [0, 1, 0]) is None


def test_signature_of_diagonal():
    assert xla.congruence_signature([[2, 0], [0, -3]]) == (1, 1)
    assert xla.congruence_signature([[0, 1], [1, 0]]) == (1, 1)
    assert xla.congruence_signature([[0, 0], [0, 0]]) == (0, 0)


@given(square(3))
@settings(max_examples=60, deadline=None)
def test_signature_matches_eigenvalues(mat):
    sym = xla.mat_add(mat, xla.transpose(mat))
    pos, neg = xla.congruence_signature(sym)
    eig = np.linalg.eigvalsh(np.array(sym, dtype=float))
    assert pos == int(np.sum(eig > 1e-9))
    assert neg == int(np.sum(eig < -1e-9))

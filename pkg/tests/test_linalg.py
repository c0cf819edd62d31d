import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from vkminor.linalg import (Gf2Matrix, IntMatrix, determinant, gf2_rank, gf2_solve,
                            smith_normal_form, z_rank, z_solve, z_solve_sparse)


def random_int_matrix(rng, r, c, lo=-9, hi=9, density=1.0):
    return IntMatrix([[rng.randint(lo, hi) if rng.random() < density else 0
                       for _ in range(c)] for _ in range(r)], c)


def check_snf(A):
    D = smith_normal_form(A)
    assert D.U @ A @ D.V == D.S
    assert abs(determinant(D.U)) == 1 and abs(determinant(D.V)) == 1
    diag = D.diagonal
    for a, b in zip(diag, diag[1:]):
        assert b % a == 0
    for i in range(D.S.nrows):
        for j in range(D.S.ncols):
            if i != j:
                assert D.S[i, j] == 0
    return D


def test_gf2_examples():
    I = Gf2Matrix.identity(5)
    b = [1, 0, 1, 1, 0]
    assert gf2_solve(I, b) == b
    Z = Gf2Matrix(3, 4)
    assert gf2_solve(Z, [0, 1, 0]) is None
    assert gf2_solve(Z, [0, 0, 0]) == [0, 0, 0, 0]
    with pytest.raises(ValueError):
        gf2_solve(Z, [1, 0])


def test_gf2_planted(rng):
    for _ in range(50):
        A = Gf2Matrix.from_dense([[rng.randint(0, 1) for _ in range(30)] for _ in range(20)])
        x = [rng.randint(0, 1) for _ in range(30)]
        b = A.mul_vec(x)
        y = gf2_solve(A, b)
        assert y is not None and A.mul_vec(y) == b


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.randoms(use_true_random=False))
def test_gf2_unsolvable_means_rank_jump(r, c, rnd):
    rows = [[rnd.randint(0, 1) for _ in range(c)] for _ in range(r)]
    b = [rnd.randint(0, 1) for _ in range(r)]
    A = Gf2Matrix.from_dense(rows, c)
    aug = Gf2Matrix.from_dense([row + [bi] for row, bi in zip(rows, b)], c + 1)
    x = gf2_solve(A, b)
    if x is None:
        assert gf2_rank(A) < gf2_rank(aug)
    else:
        assert A.mul_vec(x) == b


def test_gf2_rank_matches_sympy_mod2(rng):
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF
    for _ in range(30):
        rows = [[rng.randint(0, 1) for _ in range(9)] for _ in range(7)]
        dm = DomainMatrix([[GF(2)(a) for a in row] for row in rows], (7, 9), GF(2))
        assert gf2_rank(Gf2Matrix.from_dense(rows)) == dm.rank()


def test_snf_examples():
    assert check_snf(IntMatrix.identity(4)).S == IntMatrix.identity(4)
    assert check_snf(IntMatrix([[2, 4], [6, 8]])).diagonal == [2, 4]
    check_snf(random_int_matrix(random.Random(1), 10, 12))
    check_snf(IntMatrix.zeros(3, 2))
    check_snf(IntMatrix([], 0))


def test_snf_matches_sympy(rng):
    from sympy.matrices.normalforms import invariant_factors
    for _ in range(40):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        A = random_int_matrix(rng, r, c, -6, 6, 0.7)
        ours = check_snf(A).diagonal
        theirs = [abs(int(x)) for x in invariant_factors(sympy.Matrix(A.rows)) if x != 0]
        assert ours == theirs


def test_z_solve_examples():
    assert z_solve(IntMatrix([[2]]), [4]) == [2]
    assert z_solve(IntMatrix([[2]]), [3]) is None
    with pytest.raises(ValueError):
        z_solve(IntMatrix([[1, 2]]), [1, 2])


def test_z_solve_planted(rng):
    for _ in range(20):
        A = random_int_matrix(rng, 30, 40, -3, 3, 0.3)
        x = [rng.randint(-5, 5) for _ in range(40)]
        b = A.mul_vec(x)
        y = z_solve(A, b)
        assert y is not None and A.mul_vec(y) == b
        rows = [{j: a for j, a in enumerate(row) if a} for row in A.rows]
        y2 = z_solve_sparse(rows, b, 40)
        assert y2 is not None and A.mul_vec(y2) == b


def test_z_solve_detects_torsion_obstruction():
    # 2x = 1 has a rational solution but no integer one
    A = IntMatrix([[2, 0], [0, 3]])
    assert z_solve(A, [1, 3]) is None
    assert z_solve(A, [2, 3]) == [1, 1]
    assert z_solve_sparse([{0: 2}, {1: 3}], [1, 3], 2) is None


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_z_solve_agrees_with_gf2_when_solvable(r, c, rnd):
    A = IntMatrix([[rnd.randint(-3, 3) for _ in range(c)] for _ in range(r)], c)
    b = [rnd.randint(-3, 3) for _ in range(r)]
    x = z_solve(A, b)
    if x is not None:
        assert A.mul_vec(x) == b
        assert gf2_solve(A.mod2(), [v % 2 for v in b]) is not None
    assert z_rank(A) == sympy.Matrix(A.rows).rank()


def test_determinant_matches_sympy(rng):
    for _ in range(20):
        n = rng.randint(1, 6)
        A = random_int_matrix(rng, n, n)
        assert determinant(A) == sympy.Matrix(A.rows).det()

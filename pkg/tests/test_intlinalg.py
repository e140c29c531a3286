from fractions import Fraction

import pytest

from tlg.intlinalg import (det_bareiss, identity, inverse_rational,
                           kernel_lattice_basis, mat_mul, mat_vec,
                           snf_with_transforms, solve_rational, transpose)


def test_det_bareiss_small_cases():
    assert det_bareiss([[5]]) == 5
    assert det_bareiss([[1, 2], [3, 4]]) == -2
    assert det_bareiss([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert det_bareiss([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0
    # row swap flips the sign
    assert det_bareiss([[3, 4], [1, 2]]) == 2


def test_matrix_helpers():
    a = [[1, 2], [3, 4]]
    b = [[0, 1], [1, 0]]
    assert mat_mul(a, b) == [[2, 1], [4, 3]]
    assert mat_vec(a, [1, 1]) == [3, 7]
    assert transpose(a) == [[1, 3], [2, 4]]
    assert identity(3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_snf_diagonal_and_transforms():
    m = [[12, 6, 4, 8],
         [3, 9, 6, 12],
         [2, 16, 14, 28],
         [20, 10, 10, 20]]
    s, u, v = snf_with_transforms(m)
    assert mat_mul(mat_mul(u, m), v) == s
    diag = [s[i][i] for i in range(4)]
    assert diag == [1, 10, 30, 0]
    for i in range(4):
        for j in range(4):
            if i != j:
                assert s[i][j] == 0
    assert abs(det_bareiss(u)) == 1
    assert abs(det_bareiss(v)) == 1
    # successive divisibility of the nonzero invariant factors
    nz = [d for d in diag if d]
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0


def test_snf_rank_deficient():
    m = [[2, 4], [1, 2]]
    s, u, v = snf_with_transforms(m)
    assert mat_mul(mat_mul(u, m), v) == s
    assert [s[0][0], s[1][1]] == [1, 0]


def test_snf_rectangular():
    m = [[2, 0, 0], [0, 6, 0]]
    s, u, v = snf_with_transforms(m)
    assert mat_mul(mat_mul(u, m), v) == s
    assert s[0][0] == 2 and s[1][1] == 6


def test_solve_rational():
    sol = solve_rational([[2, 0], [0, 4]], [1, 1])
    assert sol == [Fraction(1, 2), Fraction(1, 4)]
    assert solve_rational([[1, 1], [1, 1]], [0, 1]) is None
    sol2 = solve_rational([[1, 1], [1, 1]], [2, 2])
    assert sol2 is not None
    assert sum(sol2) == 2


def test_kernel_lattice_basis():
    basis = kernel_lattice_basis([2, -3, 1])
    assert len(basis) == 2
    for vec in basis:
        assert 2 * vec[0] - 3 * vec[1] + vec[2] == 0
    # the basis spans the full rank-2 kernel lattice: (1, 0, -2) and
    # (0, 1, 3) must be integer combinations of it
    for target in ([1, 0, -2], [0, 1, 3]):
        sol = solve_rational(transpose(basis), target)
        assert sol is not None
        assert all(c.denominator == 1 for c in sol)


def test_inverse_rational():
    inv = inverse_rational([[2, 1], [1, 1]])
    assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]
    with pytest.raises(ZeroDivisionError):
        inverse_rational([[1, 1], [1, 1]])

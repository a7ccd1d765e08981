import random
from fractions import Fraction

import pytest

from conftest import random_binary_matrix, random_int_matrix
from nashrand.errors import SingularMatrix
from nashrand.exact import (
    IntMatrix,
    cofactor_sum,
    det,
    det_cofactor_expansion,
    mat_vec,
    replace_column,
    solve_exact,
)
from nashrand.families import beta_matrix, block_matrix


def test_det_identity():
    assert det(IntMatrix.identity(8)) == 1


def test_det_empty_matrix_is_one():
    assert det(IntMatrix(())) == 1


def test_det_block_matrix_six():
    assert det(block_matrix(5)) == 5


def test_det_bordered_banded_eight():
    value = det(beta_matrix(8))
    assert abs(value) == 9


def test_det_matches_cofactor_expansion_on_random_matrices():
    rng = random.Random(101)
    for _ in range(60):
        m = random_int_matrix(rng, rng.randint(1, 5), -4, 4)
        assert det(m) == det_cofactor_expansion(m)


def test_det_transpose_and_column_swap():
    rng = random.Random(7)
    for _ in range(40):
        m = random_int_matrix(rng, 4, -9, 9)
        assert det(m.transpose()) == det(m)
        swapped = IntMatrix(
            [(r[1], r[0], r[2], r[3]) for r in m.rows]
        )
        assert det(swapped) == -det(m)


def test_replace_column_basic():
    m = replace_column(IntMatrix.identity(2), 1, (5, 7))
    assert m.rows == ((5, 0), (7, 1))


def test_replace_column_ones_keeps_det_one():
    m = replace_column(IntMatrix.identity(2), 2, (1, 1))
    assert m.rows == ((1, 1), (0, 1))
    assert det(m) == 1


def test_replace_column_in_block_matrix():
    got = replace_column(block_matrix(2), 1, (1, 1, 1))
    assert det(got) == 1


def test_replace_column_rejects_bad_index():
    with pytest.raises(IndexError):
        replace_column(IntMatrix.identity(3), 0, (1, 1, 1))
    with pytest.raises(IndexError):
        replace_column(IntMatrix.identity(3), 4, (1, 1, 1))


def test_cofactor_sum_identity():
    for n in (1, 3, 6):
        assert cofactor_sum(IntMatrix.identity(n)) == n


def test_cofactor_sum_two_by_two_antidiagonal():
    assert cofactor_sum(IntMatrix([[0, 1], [1, 0]])) == -2


def test_cofactor_sum_bordered_banded_eight():
    assert abs(cofactor_sum(beta_matrix(8))) == 34


def test_cofactor_sum_matches_full_cofactor_grid():
    rng = random.Random(33)
    for _ in range(25):
        m = random_int_matrix(rng, 5, -3, 3)
        grid = 0
        for i in range(1, 6):
            for j in range(1, 6):
                minor = IntMatrix(
                    [
                        [m.rows[r][c] for c in range(5) if c != j - 1]
                        for r in range(5)
                        if r != i - 1
                    ]
                )
                grid += (-1) ** (i + j) * det(minor)
        assert cofactor_sum(m) == grid


def test_cofactor_sum_solve_shortcut_agrees():
    rng = random.Random(55)
    checked = 0
    while checked < 20:
        m = random_int_matrix(rng, 4, -5, 5)
        if det(m) == 0:
            continue
        assert cofactor_sum(m, method="solve") == cofactor_sum(m)
        checked += 1


def test_cofactor_sum_solve_needs_invertible():
    with pytest.raises(SingularMatrix):
        cofactor_sum(IntMatrix([[1, 1], [1, 1]]), method="solve")


def test_solve_exact_identity():
    assert solve_exact(IntMatrix.identity(3), (1, 2, 3)) == (1, 2, 3)


def test_solve_exact_two_by_two():
    assert solve_exact(IntMatrix([[1, 1], [1, -1]]), (2, 0)) == (1, 1)


def test_solve_exact_bordered_banded_transpose():
    sol = solve_exact(beta_matrix(8).transpose(), [1] * 8)
    assert sol == tuple(Fraction(p, 9) for p in (6, 2, 3, 1, 4, 5, 4, 9))


def test_solve_exact_rational_rhs_and_backsubstitution():
    rng = random.Random(99)
    solved = 0
    while solved < 25:
        m = random_int_matrix(rng, 4, -6, 6)
        if det(m) == 0:
            continue
        rhs = tuple(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)
        )
        x = solve_exact(m, rhs)
        assert mat_vec(m, x) == rhs
        solved += 1


def test_solve_exact_singular_raises():
    with pytest.raises(SingularMatrix):
        solve_exact(IntMatrix([[1, 2], [2, 4]]), (1, 1))


def _hypothesis_matrix(rng: random.Random, n: int) -> IntMatrix:
    """Random binary invertible matrix whose all-ones solve is nonnegative."""
    while True:
        m = random_binary_matrix(rng, n)
        if det(m) == 0:
            continue
        if all(v >= 0 for v in solve_exact(m, [1] * n)):
            return m


def test_cofactor_det_inequalities():
    # |det| <= |K| <= n |det| for binary invertible m with m^-1 1 >= 0,
    # sharpened by the largest column sum: |K| >= (n / colmax) |det|.
    # (The sharpening genuinely needs column sums: pairing 1 with the solve
    # vector gives n = sum_j colsum_j x_j.  A 6x6 binary matrix with
    # det = K = 1, max row sum 5, and an all-ones column disproves the
    # row-sum variant.)
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randint(3, 6)
        m = _hypothesis_matrix(rng, n)
        d = abs(det(m))
        k = abs(cofactor_sum(m))
        assert d <= k <= n * d
        colmax = max(sum(col) for col in zip(*m.rows))
        assert colmax * k >= n * d

import random
from fractions import Fraction

import pytest

from cubicchow.linalg import MatQ, kernel_basis, solve_linear


def test_kernel_of_identity_is_empty():
    assert kernel_basis(MatQ.identity(2)) == []


def test_kernel_forced_by_one_equation():
    m = MatQ.from_rows([[1, 1]])
    basis = kernel_basis(m)
    assert len(basis) == 1
    v = basis[0]
    assert v[0] * 1 + v[1] * 1 == 0
    assert v[0] != 0  # proportional to (1, -1)
    assert v[1] / v[0] == -1


def test_kernel_of_rank_one_matrix():
    m = MatQ.from_rows([[1, 2], [2, 4]])
    basis = kernel_basis(m)
    assert len(basis) == 1
    v = basis[0]
    assert m.mat_vec(v) == (0, 0)
    # proportional to (2, -1)
    assert v[0] * (-1) == v[1] * 2


def test_solve_identity():
    m = MatQ.identity(3)
    b = [Fraction(5), Fraction(-1, 2), Fraction(0)]
    assert solve_linear(m, b) == tuple(b)


def test_solve_zero_matrix_inconsistent():
    m = MatQ.from_rows([[0, 0], [0, 0]])
    assert solve_linear(m, [1, 0]) is None
    assert solve_linear(m, [0, 0]) == (0, 0)


def test_solve_back_substitution():
    m = MatQ.from_rows([[1, 1], [0, 1]])
    assert solve_linear(m, [3, 1]) == (2, 1)


def _random_matrix(rng, rows, cols):
    return MatQ.from_rows(
        [[Fraction(rng.randint(-4, 4)) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def test_rank_transpose_and_rank_nullity():
    rng = random.Random(42)
    for _ in range(120):
        rows, cols = rng.randint(0, 5), rng.randint(1, 5)
        m = _random_matrix(rng, rows, cols)
        rank = m.rank()
        assert rank == m.transpose().rank()
        kernel = kernel_basis(m)
        assert rank + len(kernel) == cols
        for v in kernel:
            assert all(x == 0 for x in m.mat_vec(v))


def test_solve_agrees_with_rank_criterion():
    rng = random.Random(99)
    for _ in range(120):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = _random_matrix(rng, rows, cols)
        b = [Fraction(rng.randint(-4, 4)) for _ in range(rows)]
        augmented = MatQ.from_rows(
            [list(row) + [bi] for row, bi in zip(m.entries, b)], cols=cols + 1
        )
        solvable = augmented.rank() == m.rank()
        x = solve_linear(m, b)
        if solvable:
            assert x is not None
            assert m.mat_vec(x) == tuple(b)
        else:
            assert x is None


def test_empty_matrix_needs_column_count():
    with pytest.raises(ValueError):
        MatQ.from_rows([])
    m = MatQ.from_rows([], cols=3)
    assert m.rank() == 0
    assert len(kernel_basis(m)) == 3

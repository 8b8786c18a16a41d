"""Exact linear algebra over GF(p)."""

import numpy as np
import pytest

from relcomp.gfp import PrimeMatrix, kernel_basis, rank, rref, stack


def random_matrix(rng, rows, cols, p):
    return PrimeMatrix(rng.integers(0, p, size=(rows, cols)), p)


def test_rref_identity():
    m = PrimeMatrix(np.eye(4, dtype=np.int64), 7)
    red, pivots = rref(m)
    assert np.array_equal(red.a, np.eye(4, dtype=np.int64))
    assert list(pivots) == [0, 1, 2, 3]


def test_rank_of_zero():
    assert rank(PrimeMatrix(np.zeros((3, 5), dtype=np.int64), 5)) == 0


def test_kernel_of_invertible_is_empty():
    m = PrimeMatrix(np.array([[1, 2], [3, 4]]), 32003)
    assert kernel_basis(m).rows == 0


def test_kernel_vectors_annihilate():
    rng = np.random.default_rng(5)
    for p in (2, 5, 32003):
        for _ in range(30):
            m = random_matrix(rng, int(rng.integers(1, 8)),
                              int(rng.integers(1, 8)), p)
            ker = kernel_basis(m)
            if ker.rows:
                prod = m.matmul(PrimeMatrix(ker.a.T, p))
                assert not prod.a.any()


def test_rank_plus_kernel_is_column_count():
    rng = np.random.default_rng(11)
    for p in (2, 3, 32003):
        for _ in range(40):
            rows = int(rng.integers(1, 10))
            cols = int(rng.integers(1, 10))
            m = random_matrix(rng, rows, cols, p)
            assert rank(m) + kernel_basis(m).rows == cols


def test_rank_is_transpose_invariant():
    rng = np.random.default_rng(17)
    for _ in range(40):
        m = random_matrix(rng, int(rng.integers(1, 9)),
                          int(rng.integers(1, 9)), 32003)
        assert rank(m) == rank(PrimeMatrix(m.a.T, m.p))


def test_stack_concatenates_rows():
    a = PrimeMatrix(np.ones((2, 3), dtype=np.int64), 7)
    b = PrimeMatrix(np.zeros((1, 3), dtype=np.int64), 7)
    s = stack([a, b])
    assert s.rows == 3 and s.cols == 3


def test_stack_rejects_mismatched_widths():
    a = PrimeMatrix(np.ones((2, 3), dtype=np.int64), 7)
    b = PrimeMatrix(np.ones((2, 4), dtype=np.int64), 7)
    with pytest.raises(Exception):
        stack([a, b])


def test_rref_reproducible_pivot_choice():
    m = PrimeMatrix(np.array([[0, 2, 1], [0, 4, 3], [1, 1, 1]]), 5)
    red1, piv1 = rref(m)
    red2, piv2 = rref(PrimeMatrix(m.a.copy(), 5))
    assert np.array_equal(red1.a, red2.a) and list(piv1) == list(piv2)

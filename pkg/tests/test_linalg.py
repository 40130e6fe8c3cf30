import random
from fractions import Fraction

import pytest

from mpla import (DimensionMismatch, Matrix, NotAComplex, cohomology_dim,
                  invert, kernel_basis, kernel_dim, rank, solve)
from mpla.linalg import _rref

from helpers import rand_fraction


def naive_rank(m: Matrix) -> int:
    """Plain fraction Gaussian elimination, the cross-check oracle."""
    entries = [list(row) for row in m.entries]
    return len(_rref(entries, m.rows, m.cols))


def test_rank_identity_and_zero():
    assert rank(Matrix.identity(2)) == 2
    assert rank(Matrix.zero(3, 4)) == 0
    assert kernel_dim(Matrix.identity(2)) == 0
    assert kernel_dim(Matrix.zero(3, 4)) == 4


def test_rank_proportional_rows():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    assert rank(m) == 1
    assert kernel_dim(m) == 1


def test_cohomology_dim_examples():
    assert cohomology_dim(Matrix.zero(1, 3), Matrix.zero(3, 1)) == 3
    assert cohomology_dim(Matrix.identity(2), Matrix.zero(2, 1)) == 0
    # kernel basis {(0,1)} and image basis {(0,1)} coincide
    assert cohomology_dim(Matrix.from_rows([[1, 0], [0, 0]]),
                          Matrix.from_rows([[0], [1]])) == 0


def test_cohomology_dim_rejects_non_complex():
    with pytest.raises(NotAComplex):
        cohomology_dim(Matrix.identity(2), Matrix.identity(2))
    with pytest.raises(DimensionMismatch):
        cohomology_dim(Matrix.zero(2, 3), Matrix.zero(2, 2))


def test_bareiss_matches_naive_gaussian_on_random_matrices():
    rng = random.Random(17)
    for _ in range(40):
        m = Matrix.from_rows([
            [Fraction(rng.randint(-9, 9)) for _ in range(6)] for _ in range(6)
        ])
        assert rank(m) == naive_rank(m)
    # rectangular and rank-deficient shapes too
    for _ in range(20):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = Matrix.from_rows([
            [Fraction(rng.randint(-2, 2)) for _ in range(cols)] for _ in range(rows)
        ])
        assert rank(m) == naive_rank(m)


def test_rank_transpose_scaling_permutation_invariance():
    rng = random.Random(23)
    for _ in range(15):
        m = Matrix.from_rows([
            [rand_fraction(rng, -5, 5) for _ in range(4)] for _ in range(5)
        ])
        assert rank(m) == rank(m.transpose())
        scaled = [list(r) for r in m.entries]
        scaled[2] = [Fraction(7, 3) * x for x in scaled[2]]
        assert rank(Matrix.from_rows(scaled)) == rank(m)
        permuted = [scaled[i] for i in (4, 0, 3, 1, 2)]
        assert rank(Matrix.from_rows(permuted)) == rank(m)
        assert kernel_dim(m) + rank(m) == m.cols


def test_kernel_basis_and_solve():
    m = Matrix.from_rows([[1, 2, 0], [0, 0, 1]])
    basis = kernel_basis(m)
    assert len(basis) == kernel_dim(m) == 1
    for v in basis:
        assert m.mul_vec(v) == [0, 0]
    x = solve(m, [3, 5])
    assert x is not None and m.mul_vec(x) == [3, 5]
    assert solve(Matrix.from_rows([[1], [1]]), [0, 1]) is None


def test_invert_round_trip():
    m = Matrix.from_rows([[1, 2], [3, 5]])
    assert m.mul(invert(m)) == Matrix.identity(2)
    with pytest.raises(DimensionMismatch):
        invert(Matrix.from_rows([[1, 2], [2, 4]]))


def test_exact_fractions_survive():
    m = Matrix.from_rows([[Fraction(1, 3), Fraction(2, 7)],
                          [Fraction(5, 11), Fraction(1, 13)]])
    assert rank(m) == 2
    inv = invert(m)
    assert m.mul(inv) == Matrix.identity(2)


def test_bareiss_stress_fractions_and_structure():
    rng = random.Random(37)
    for trial in range(25):
        rows = rng.randint(2, 8)
        cols = rng.randint(2, 8)
        entries = [[Fraction(rng.randint(-30, 30), rng.randint(1, 12))
                    for _ in range(cols)] for _ in range(rows)]
        # plant linear dependencies to force column skips mid-elimination
        if rows >= 3:
            entries[1] = [3 * x for x in entries[0]]
            entries[2] = [x - y for x, y in zip(entries[0], entries[1])]
        m = Matrix.from_rows(entries)
        assert rank(m) == naive_rank(m)
        assert rank(m) == rank(m.transpose())

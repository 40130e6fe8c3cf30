import random

import pytest

from mpla import SkewMultiMap, SpaceMismatch, nr_bracket
from mpla.multimap import insertion, shuffles, sort_sign

from helpers import rand_lie_candidate, rand_skew_map


def test_sort_sign():
    assert sort_sign((0, 1, 2)) == (1, (0, 1, 2))
    assert sort_sign((1, 0)) == (-1, (0, 1))
    assert sort_sign((2, 0, 1)) == (1, (0, 1, 2))
    assert sort_sign((1, 1)) == (0, (1, 1))


def test_shuffles_lexicographic_with_signs():
    got = shuffles(2, 1)
    assert got == (((0, 1), (2,), 1), ((0, 2), (1,), -1), ((1, 2), (0,), 1))
    assert len(shuffles(2, 2)) == 6


def test_skew_evaluation():
    f = SkewMultiMap(2, 3, 3, {(0, 1): [0, 0, 1]})
    assert f.evaluate((0, 1)) == [0, 0, 1]
    assert f.evaluate((1, 0)) == [0, 0, -1]
    assert f.evaluate((1, 1)) == [0, 0, 0]
    assert f.evaluate_mixed(([2, 0, 0], 1)) == [0, 0, 2]


def test_identity_bracket_bilinear():
    # [id, mu] = mu for any skew bilinear mu
    rng = random.Random(1)
    for _ in range(10):
        dim = rng.randint(1, 3)
        ident = SkewMultiMap(1, dim, dim, {
            (i,): [int(i == j) for j in range(dim)] for i in range(dim)
        })
        mu = rand_skew_map(rng, 2, dim)
        assert nr_bracket(ident, mu) == mu
        # and the two insertion halves: i_id mu = 2 mu, i_mu id = mu
        assert insertion(ident, mu) == mu + mu
        assert insertion(mu, ident) == mu


def test_bracket_antisymmetry_and_jacobi():
    rng = random.Random(2)
    for _ in range(25):
        dim = 3
        f = rand_skew_map(rng, rng.randint(1, 3), dim)
        g = rand_skew_map(rng, rng.randint(1, 3), dim)
        h = rand_skew_map(rng, rng.randint(1, 3), dim)
        dm, dn, dp = f.arity - 1, g.arity - 1, h.arity - 1
        assert nr_bracket(f, g) == nr_bracket(g, f).scale(-((-1) ** (dm * dn)))
        total = (
            nr_bracket(f, nr_bracket(g, h)).scale((-1) ** (dm * dp))
            + nr_bracket(g, nr_bracket(h, f)).scale((-1) ** (dn * dm))
            + nr_bracket(h, nr_bracket(f, g)).scale((-1) ** (dp * dn))
        )
        assert total.is_zero()


def test_square_zero_iff_valid_bracket():
    rng = random.Random(3)
    from mpla import validate_lie_algebra

    seen_valid = seen_invalid = 0
    for _ in range(40):
        g = rand_lie_candidate(rng, rng.randint(2, 3))
        mu = g.bracket_map()
        valid = validate_lie_algebra(g).ok
        assert valid == nr_bracket(mu, mu).is_zero()
        seen_valid += valid
        seen_invalid += not valid
    assert seen_valid and seen_invalid


def test_arity_zero_conventions():
    # plugging a vector into a bilinear bracket: [mu, v](x) = mu(v, x)
    rng = random.Random(4)
    mu = rand_skew_map(rng, 2, 3)
    v = SkewMultiMap(0, 3, 3, {(): [1, 2, 0]})
    br = nr_bracket(mu, v)
    assert br.arity == 1
    for i in range(3):
        assert br.evaluate((i,)) == mu.evaluate_mixed(([1, 2, 0], i))


def test_space_mismatch():
    f = rand_skew_map(random.Random(5), 2, 3)
    g = rand_skew_map(random.Random(6), 2, 2)
    with pytest.raises(SpaceMismatch):
        nr_bracket(f, g)

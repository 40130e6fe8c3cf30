"""Shared random generators for the test suites (all seeded, exact)."""

from __future__ import annotations

import random
from fractions import Fraction

from mpla import (DeformationCandidate, LieAlgebra, MatchedPair,
                  MPRepresentation, SkewMultiMap, cochain_from_coords,
                  cochain_space_dim)
from itertools import combinations


def rand_fraction(rng: random.Random, lo=-3, hi=3) -> Fraction:
    return Fraction(rng.randint(lo, hi))


def rand_vector(rng, n, lo=-3, hi=3):
    return [rand_fraction(rng, lo, hi) for _ in range(n)]


def rand_skew_map(rng, arity, dim, codim=None, lo=-2, hi=2) -> SkewMultiMap:
    codim = dim if codim is None else codim
    coeffs = {}
    for key in combinations(range(dim), arity):
        vec = rand_vector(rng, codim, lo, hi)
        if any(vec):
            coeffs[key] = vec
    return SkewMultiMap(arity, dim, codim, coeffs)


def rand_lie_candidate(rng, dim, lo=-2, hi=2) -> LieAlgebra:
    brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            vec = rand_vector(rng, dim, lo, hi)
            if any(vec):
                brackets[(i, j)] = vec
    return LieAlgebra.from_brackets(dim, brackets)


def rand_mp_candidate(rng, dim_g, dim_h, lo=-2, hi=2) -> MatchedPair:
    g = rand_lie_candidate(rng, dim_g, lo, hi)
    h = rand_lie_candidate(rng, dim_h, lo, hi)
    rho = {(i, a): rand_vector(rng, dim_h, lo, hi)
           for i in range(dim_g) for a in range(dim_h)}
    psi = {(a, i): rand_vector(rng, dim_g, lo, hi)
           for a in range(dim_h) for i in range(dim_g)}
    return MatchedPair.from_sparse(g, h, rho, psi)


def rand_mp_rep_candidate(rng, mp, dims, lo=-2, hi=2) -> MPRepresentation:
    p, q = dims
    m, n = mp.dim_g, mp.dim_h
    return MPRepresentation.from_sparse(
        mp, dims,
        rho_v={(i, u): rand_vector(rng, p, lo, hi) for i in range(m) for u in range(p)},
        psi_v={(a, u): rand_vector(rng, p, lo, hi) for a in range(n) for u in range(p)},
        rho_w={(i, w): rand_vector(rng, q, lo, hi) for i in range(m) for w in range(q)},
        psi_w={(a, w): rand_vector(rng, q, lo, hi) for a in range(n) for w in range(q)},
        alpha={(u, a): rand_vector(rng, q, lo, hi) for u in range(p) for a in range(n)},
        beta={(w, i): rand_vector(rng, p, lo, hi) for w in range(q) for i in range(m)},
    )


def rand_cochain(rng, mp, rep_dims, degree, lo=-3, hi=3):
    dims = (mp.dim_g, mp.dim_h)
    total = cochain_space_dim(dims, rep_dims, degree)
    return cochain_from_coords(
        dims, rep_dims, degree, [rand_fraction(rng, lo, hi) for _ in range(total)]
    )


def rand_deformation_candidate(rng, mp, lo=-2, hi=2) -> DeformationCandidate:
    m, n = mp.dim_g, mp.dim_h
    return DeformationCandidate.from_sparse(
        m, n,
        mu1={(i, j): rand_vector(rng, m, lo, hi)
             for i in range(m) for j in range(i + 1, m)},
        nu1={(a, b): rand_vector(rng, n, lo, hi)
             for a in range(n) for b in range(a + 1, n)},
        rho1={(i, a): rand_vector(rng, n, lo, hi)
              for i in range(m) for a in range(n)},
        psi1={(a, i): rand_vector(rng, m, lo, hi)
              for a in range(n) for i in range(m)},
    )


def rand_invertible(rng, n, lo=-2, hi=2):
    from mpla import Matrix, rank

    while True:
        m = Matrix.from_rows([[rand_fraction(rng, lo, hi) for _ in range(n)]
                              for _ in range(n)])
        if rank(m) == n:
            return m

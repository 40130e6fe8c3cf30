"""Named small structures used by the demos and the test fixtures.

Everything here is desk-scale (dimensions at most four) and exact.
"""

from __future__ import annotations

from fractions import Fraction

from .lie import LieAlgebra
from .linalg import Matrix
from .matched import (LieBialgebra, MatchedPair, bialgebra_to_matched_pair,
                      rota_baxter_matched_pair)
from .reps import adjoint_representation, coadjoint_representation, semidirect_product


def aff1() -> LieAlgebra:
    """The two-dimensional nonabelian algebra [e1, e2] = e2."""
    return LieAlgebra.from_brackets(2, {(0, 1): [0, 1]})


def heisenberg3() -> LieAlgebra:
    """[e1, e2] = e3, e3 central."""
    return LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1]})


def sl2() -> LieAlgebra:
    """Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return LieAlgebra.from_brackets(
        3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]}
    )


def mp_a() -> MatchedPair:
    """Two lines acting by rho_x h = h; the combined product is aff1."""
    return MatchedPair.from_sparse(
        LieAlgebra.abelian(1), LieAlgebra.abelian(1), rho={(0, 0): [1]}
    )


def mp_direct(g: LieAlgebra, h: LieAlgebra) -> MatchedPair:
    """Zero actions: the direct pair."""
    return MatchedPair.from_sparse(g, h)


def mp_action_pair() -> MatchedPair:
    """aff1 acting on a line by rho_{e1} = 1, rho_{e2} = 0."""
    return MatchedPair.from_sparse(aff1(), LieAlgebra.abelian(1), rho={(0, 0): [1]})


def mp_action_pair_mirror() -> MatchedPair:
    """A line acting on aff1's underlying space through psi only."""
    return MatchedPair.from_sparse(LieAlgebra.abelian(1), aff1(), psi={(0, 0): [1]})


def mp_derivation_heisenberg() -> MatchedPair:
    """A line acting on the Heisenberg algebra by the grading derivation."""
    return MatchedPair.from_sparse(
        LieAlgebra.abelian(1), heisenberg3(),
        rho={(0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (0, 2): [0, 0, 2]},
    )


def bialgebra_aff1() -> LieBialgebra:
    """aff1 with the cobracket sending e2 to e1 ^ e2."""
    return LieBialgebra(aff1(), [{}, {(0, 1): Fraction(1)}])


def mp_double() -> MatchedPair:
    """The two-sided pair carried by the aff1 bialgebra."""
    return bialgebra_to_matched_pair(bialgebra_aff1())


def mp_rota_baxter_zero() -> MatchedPair:
    return rota_baxter_matched_pair(aff1(), Matrix.zero(2, 2))


def mp_rota_baxter_neg_id() -> MatchedPair:
    return rota_baxter_matched_pair(
        aff1(), Matrix.from_rows([[-1, 0], [0, -1]])
    )


def mp_semidirect_double() -> MatchedPair:
    """Semidirect pair of the bialgebra double with its coadjoint module."""
    return semidirect_product(coadjoint_representation(mp_double()))


def standard_fixtures() -> list[tuple[str, MatchedPair]]:
    """The valid matched pairs the test suites sweep over."""
    ab1 = LieAlgebra.abelian(1)
    ab2 = LieAlgebra.abelian(2)
    return [
        ("trivial-1-1", mp_direct(ab1, LieAlgebra.abelian(1))),
        ("trivial-2-2", mp_direct(ab2, LieAlgebra.abelian(2))),
        ("direct-aff1-line", mp_direct(aff1(), ab1)),
        ("mp-a", mp_a()),
        ("action-pair", mp_action_pair()),
        ("action-pair-mirror", mp_action_pair_mirror()),
        ("double", mp_double()),
        ("rb-zero", mp_rota_baxter_zero()),
        ("rb-neg-id", mp_rota_baxter_neg_id()),
        ("semidirect-mp-a", semidirect_product(adjoint_representation(mp_a()))),
        ("derivation-heisenberg", mp_derivation_heisenberg()),
    ]


def small_fixtures() -> list[tuple[str, MatchedPair]]:
    """The fixtures with dim g, dim h <= 2 (cochain spaces stay tiny)."""
    return [
        (name, mp) for name, mp in standard_fixtures()
        if mp.dim_g <= 2 and mp.dim_h <= 2
    ]

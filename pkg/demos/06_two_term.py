"""Two-term homotopy structures and the degree-3 correspondence.

A skeletal two-term structure is a Lie algebra, a module, and a closed
trilinear map.  A matched pair of such structures packs exactly into a
triple (matched pair, representation, closed degree-3 cochain of shape
(F_1, 0, F_3)), and the packing is a bijection: this script walks one
fixture both ways.
"""

from fractions import Fraction

from mpla import (SkeletalTriple, TwoTermLInfinity, adjoint_representation,
                  basis_cochain, cochain_basis, cochain_from_coords,
                  cochain_to_coords, delta_mpl_coeff, kernel_basis,
                  skeletal_to_triple, triple_to_skeletal, validate_two_term,
                  validate_skeletal_matched_pair)
from mpla.linalg import Matrix
from mpla.catalog import mp_double


def main():
    print("== a two-term structure from a volume cocycle ==")
    t = TwoTermLInfinity.from_sparse(
        3, 1, bracket00={(0, 1): [0, 0, 1]}, mu3={(0, 1, 2): [1]}
    )
    print(f"Heisenberg + line + volume map coherent: {validate_two_term(t).ok}")
    bad = TwoTermLInfinity.from_sparse(
        4, 1, bracket00={(0, 1): [0, 1, 0, 0]}, mu3={(1, 2, 3): [1]}
    )
    report = validate_two_term(bad)
    print(f"a non-closed trilinear map fails: "
          f"{[c.name for c in report.failed_checks()]}")

    print("\n== the correspondence over the double ==")
    pair = mp_double()
    rep = adjoint_representation(pair)
    dims = (pair.dim_g, pair.dim_h)
    keys = cochain_basis(dims, rep.dims, 3)
    middle_free = [k for k in keys if k[0] != 2]
    columns = [
        cochain_to_coords(delta_mpl_coeff(pair, rep,
                                          basis_cochain(dims, rep.dims, 3, key)))
        for key in middle_free
    ]
    closed = kernel_basis(Matrix.from_columns(columns))
    print(f"closed (F1, 0, F3) cochains form a space of dimension {len(closed)}")

    coords = [Fraction(0)] * len(keys)
    for value, key in zip(closed[0], middle_free):
        coords[keys.index(key)] = value
    cocycle = cochain_from_coords(dims, rep.dims, 3, coords)
    skeletal = triple_to_skeletal(SkeletalTriple(pair, rep, cocycle))
    print(f"its skeletal pair validates: "
          f"{validate_skeletal_matched_pair(skeletal).ok}")
    again = skeletal_to_triple(skeletal)
    print(f"packing back returns the same cochain: {again.cocycle == cocycle}")


if __name__ == "__main__":
    main()

"""Representations of a matched pair and the constructions they feed.

A representation is a pair of modules (V, W) with four actions and two
pairing maps.  Out of one representation the library builds the
semidirect matched pair on (g + V, h + W), the action of the combined
product on V + W, and the dual representation on the swapped duals.
"""

from mpla import (adjoint_representation, coadjoint_representation,
                  dual_representation, extract_rep_from_bicross,
                  induced_bicross_rep, semidirect_product,
                  validate_matched_pair, validate_mp_representation,
                  validate_representation)
from mpla.catalog import mp_double


def main():
    pair = mp_double()
    print("base pair: the two-sided double of the nonabelian plane")

    adj = adjoint_representation(pair)
    print(f"adjoint representation valid: {validate_mp_representation(adj).ok}")

    big = semidirect_product(adj)
    print(f"semidirect pair on dims ({big.dim_g}, {big.dim_h}) valid: "
          f"{validate_matched_pair(big).ok}")

    action = induced_bicross_rep(adj)
    print(f"combined product acts on V + W (dim {action.space_dim}): "
          f"{validate_representation(action).ok}")

    recovered = extract_rep_from_bicross(pair, action, adj.dims)
    print(f"round trip through the big action recovers the tensors: "
          f"{recovered.tensors_equal(adj)}")

    co = coadjoint_representation(pair)
    print(f"coadjoint representation valid: {validate_mp_representation(co).ok}")
    print(f"dual of the adjoint equals the coadjoint: "
          f"{dual_representation(adj).tensors_equal(co)}")
    print(f"double dual is the identity: "
          f"{dual_representation(dual_representation(adj)).tensors_equal(adj)}")


if __name__ == "__main__":
    main()

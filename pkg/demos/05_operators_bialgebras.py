"""Two sources of matched pairs: weight-1 operators and bialgebras.

A linear operator R with [Rx, Ry] = R([Rx, y] + [x, Ry] + [x, y]) makes
the diagonal and the graph of R complementary subalgebras of g + g; a
bialgebra makes g and its dual act on each other through the dual
adjoint actions.  Both constructions land in validated matched pairs.
"""

from mpla import (Matrix, NotRotaBaxter, bialgebra_to_matched_pair,
                  bicrossed_product, rota_baxter_matched_pair,
                  rota_baxter_splitting_rank, validate_bialgebra,
                  validate_matched_pair)
from mpla.catalog import aff1, bialgebra_aff1


def main():
    g = aff1()
    print("== weight-1 operators on the nonabelian plane ==")
    for label, rows in (("R = 0", [[0, 0], [0, 0]]),
                        ("R = -identity", [[-1, 0], [0, -1]])):
        r_matrix = Matrix.from_rows(rows)
        pair = rota_baxter_matched_pair(g, r_matrix)
        print(f"{label}: pair valid {validate_matched_pair(pair).ok}, "
              f"splitting rank {rota_baxter_splitting_rank(g, r_matrix)} of 4")
        constants = [str(x) for x in pair.h.c[0][1]]
        print(f"   graph-side bracket constants [f1, f2] = {constants}")
    try:
        rota_baxter_matched_pair(g, Matrix.from_rows([[0, 0], [0, 1]]))
    except NotRotaBaxter as exc:
        print(f"a non-operator is rejected with a witness: {exc}")

    print("\n== the bialgebra double ==")
    b = bialgebra_aff1()
    print(f"bialgebra valid: {validate_bialgebra(b).ok}")
    double = bialgebra_to_matched_pair(b)
    print(f"double valid: {validate_matched_pair(double).ok}")
    print("   both actions are nonzero:",
          any(any(v) for row in double.rho for v in row),
          "and",
          any(any(v) for row in double.psi for v in row))
    big = bicrossed_product(double)
    print(f"its combined product is a 4-dimensional algebra "
          f"(nonzero pairs: "
          f"{sum(1 for i in range(4) for j in range(i + 1, 4) if any(big.c[i][j]))})")


if __name__ == "__main__":
    main()

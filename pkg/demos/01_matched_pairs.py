"""Matched pairs: axioms, witnesses, and the combined product.

A matched pair is two Lie algebras g and h acting on each other's
underlying spaces so that the direct sum carries a single Lie bracket
restricting to both.  This script validates a few pairs, shows what a
failure report looks like, and rebuilds the combined product.
"""

from mpla import (LieAlgebra, MatchedPair, MPMorphism, Matrix,
                  bicrossed_product, check_morphism, validate_matched_pair)
from mpla.catalog import aff1, mp_a, mp_derivation_heisenberg


def show(report):
    for line in report.lines():
        print("  " + line)


def main():
    print("== the smallest interesting pair ==")
    pair = mp_a()
    show(validate_matched_pair(pair))
    combined = bicrossed_product(pair)
    print(f"  combined product has dimension {combined.dim};"
          f" [e1, e2] = {combined.bracket_basis(0, 1)}")
    print(f"  equal to the nonabelian plane: {combined == aff1()}")

    print("\n== a derivation action on the Heisenberg algebra ==")
    show(validate_matched_pair(mp_derivation_heisenberg()))

    print("\n== a broken candidate, with witnesses ==")
    bad = MatchedPair.from_sparse(
        aff1(), LieAlgebra.abelian(1), psi={(0, 0): [1, 0]}
    )
    show(validate_matched_pair(bad))

    print("\n== morphisms ==")
    ident = MPMorphism.identity(pair)
    print(f"  identity morphism valid: {check_morphism(pair, pair, ident).ok}")
    stretch = MPMorphism(Matrix.from_rows([[2]]), Matrix.identity(1))
    report = check_morphism(pair, pair, stretch)
    print(f"  doubling the g side valid: {report.ok} "
          f"(fails {[c.name for c in report.failed_checks()]})")


if __name__ == "__main__":
    main()

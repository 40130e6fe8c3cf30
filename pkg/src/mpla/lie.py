"""Lie algebras and representations as structure constants, and their cohomology.

Conventions:
  * a LieAlgebra of dimension m stores c[i][j] = coefficient vector of
    [e_i, e_j]; skewness and the Jacobi identity are checked by
    ``validate_lie_algebra`` and cached on the object;
  * a LieRep stores a[i][p] = coefficient vector of the action of e_i on
    the p-th basis vector of the module;
  * the coboundary on Hom(Lambda^n g, V) is

      (d f)(x_1..x_{n+1}) = sum_i (-1)^{i+1} x_i . f(.. x_i^ ..)
                          + sum_{i<j} (-1)^{i+j} f([x_i,x_j], .. x_i^ .. x_j^ ..).

All arithmetic is ring-generic: entries may be Fractions or DualNumbers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import ArityMismatch, MalformedTensor
from .linalg import Matrix, cohomology_dim, kernel_dim
from .multimap import SkewMultiMap, nr_bracket, sort_sign
from .report import ValidationReport
from .scalars import vaccum, vis_zero, vzero


def _dense_tensor(dim, codim, pairs, skew: bool, what: str):
    """Dense tensor t[i][j] = vec from {(i, j): vec} sparse data."""
    t = [[vzero(codim) for _ in range(dim)] for _ in range(dim)]
    for (i, j), vec in pairs.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise MalformedTensor(f"{what}: index ({i}, {j}) out of range")
        if skew and i >= j:
            raise MalformedTensor(f"{what}: only i < j entries may be given")
        vec = list(vec)
        if len(vec) != codim:
            raise MalformedTensor(f"{what}: value at ({i}, {j}) has wrong length")
        t[i][j] = vec
        if skew:
            t[j][i] = [-x for x in vec]
    return t


class LieAlgebra:
    """Finite-dimensional Lie algebra given by structure constants."""

    __slots__ = ("dim", "c", "_valid")

    def __init__(self, dim: int, c):
        self.dim = dim
        if len(c) != dim or any(len(row) != dim for row in c):
            raise MalformedTensor("bracket tensor does not match the dimension")
        self.c = [[list(v) for v in row] for row in c]
        for row in self.c:
            for v in row:
                if len(v) != dim:
                    raise MalformedTensor("bracket value has wrong length")
        self._valid = None

    @classmethod
    def from_brackets(cls, dim: int, brackets=None) -> "LieAlgebra":
        """Build from {(i, j): vector} with i < j; skew completion is implicit."""
        return cls(dim, _dense_tensor(dim, dim, dict(brackets or {}), True, "bracket"))

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls.from_brackets(dim, {})

    def bracket_basis(self, i: int, j: int):
        return self.c[i][j]

    def bracket_vec(self, u, v):
        out = vzero(self.dim)
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.c[i]
            for j, b in enumerate(v):
                if b:
                    vaccum(out, a * b, row[j])
        return out

    def bracket_map(self) -> SkewMultiMap:
        """The bracket as an arity-2 skew map (for bracket computations)."""
        coeffs = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                coeffs[(i, j)] = list(self.c[i][j])
        return SkewMultiMap(2, self.dim, self.dim, coeffs)

    def adjoint(self) -> "LieRep":
        return LieRep(self, self.dim, [[list(v) for v in row] for row in self.c])

    @property
    def is_validated(self):
        return self._valid

    def require_valid(self):
        if self._valid is None:
            self._valid = validate_lie_algebra(self).ok
        if not self._valid:
            from .errors import InvalidInput

            raise InvalidInput("Lie algebra fails validation")

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.c == other.c


class LieRep:
    """Representation of a LieAlgebra on a coefficient space."""

    __slots__ = ("algebra", "space_dim", "a", "_valid")

    def __init__(self, algebra: LieAlgebra, space_dim: int, a):
        self.algebra = algebra
        self.space_dim = space_dim
        if len(a) != algebra.dim or any(len(row) != space_dim for row in a):
            raise MalformedTensor("action tensor does not match the dimensions")
        self.a = [[list(v) for v in row] for row in a]
        for row in self.a:
            for v in row:
                if len(v) != space_dim:
                    raise MalformedTensor("action value has wrong length")
        self._valid = None

    @classmethod
    def zero(cls, algebra: LieAlgebra, space_dim: int) -> "LieRep":
        return cls(
            algebra, space_dim,
            [[vzero(space_dim) for _ in range(space_dim)] for _ in range(algebra.dim)],
        )

    @classmethod
    def trivial(cls, algebra: LieAlgebra) -> "LieRep":
        """The one-dimensional trivial coefficients."""
        return cls.zero(algebra, 1)

    def act(self, i: int, v):
        """Action of basis vector e_i on a coefficient vector."""
        out = vzero(self.space_dim)
        row = self.a[i]
        for p, b in enumerate(v):
            if b:
                vaccum(out, b, row[p])
        return out

    def act_vec(self, x, v):
        out = vzero(self.space_dim)
        for i, ai in enumerate(x):
            if ai:
                vaccum(out, ai, self.act(i, v))
        return out

    def matrix(self, i: int) -> Matrix:
        """Action of e_i as a space_dim x space_dim matrix (columns = images)."""
        return Matrix.from_columns([self.a[i][p] for p in range(self.space_dim)])

    def require_valid(self):
        if self._valid is None:
            self._valid = validate_representation(self).ok
        if not self._valid:
            from .errors import InvalidInput

            raise InvalidInput("representation fails validation")


def validate_lie_algebra(g: LieAlgebra) -> ValidationReport:
    """Check skewness and the Jacobi identity, with basis-triple witnesses."""
    report = ValidationReport("lie algebra")
    skew = report.new_check("skew-symmetry")
    for i in range(g.dim):
        for j in range(i, g.dim):
            residual = [a + b for a, b in zip(g.c[i][j], g.c[j][i])]
            if not vis_zero(residual):
                skew.add((i, j), residual)
    jacobi = report.new_check("jacobi")
    for i, j, k in combinations(range(g.dim), 3):
        residual = g.bracket_vec(g.c[i][j], _basis(g.dim, k))
        vaccum(residual, 1, g.bracket_vec(g.c[j][k], _basis(g.dim, i)))
        vaccum(residual, 1, g.bracket_vec(g.c[k][i], _basis(g.dim, j)))
        if not vis_zero(residual):
            jacobi.add((i, j, k), residual)
    g._valid = report.ok
    return report


def validate_representation(r: LieRep) -> ValidationReport:
    """Check the action law rho_{[x,y]} = rho_x rho_y - rho_y rho_x."""
    report = ValidationReport("representation")
    law = report.new_check("action law")
    g = r.algebra
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            bracket = g.c[i][j]
            for p in range(r.space_dim):
                basis_p = _basis(r.space_dim, p)
                lhs = r.act_vec(bracket, basis_p)
                rhs = r.act(i, r.act(j, basis_p))
                vaccum(rhs, -1, r.act(j, r.act(i, basis_p)))
                residual = [a - b for a, b in zip(lhs, rhs)]
                if not vis_zero(residual):
                    law.add((i, j, p), residual)
    r._valid = report.ok
    return report


def _basis(n, i):
    v = vzero(n)
    v[i] = 1
    return v


def ce_coboundary(r: LieRep, f: SkewMultiMap, n: int | None = None) -> SkewMultiMap:
    """Coboundary of f in Hom(Lambda^n g, V) for the representation r."""
    g = r.algebra
    if n is None:
        n = f.arity
    if f.arity != n:
        raise ArityMismatch(f"cochain has arity {f.arity}, expected {n}")
    if f.dim != g.dim or f.codim != r.space_dim:
        raise ArityMismatch("cochain spaces do not match the representation")
    coeffs = {}
    for key in combinations(range(g.dim), n + 1):
        acc = vzero(r.space_dim)
        for pos in range(n + 1):
            rest = key[:pos] + key[pos + 1:]
            sign = -1 if pos % 2 else 1
            vaccum(acc, sign, r.act(key[pos], f.evaluate(rest)))
        for pi in range(n + 1):
            for pj in range(pi + 1, n + 1):
                rest = tuple(
                    key[t] for t in range(n + 1) if t != pi and t != pj
                )
                sign = -1 if (pi + pj) % 2 else 1  # (-1)^{(pi+1)+(pj+1)}
                bracket = g.c[key[pi]][key[pj]]
                vaccum(acc, sign, f.evaluate_mixed((bracket,) + rest))
        if not vis_zero(acc):
            coeffs[key] = acc
    return SkewMultiMap(n + 1, g.dim, r.space_dim, coeffs)


def ce_basis(dim: int, space_dim: int, n: int):
    """Ordered monomial basis of Hom(Lambda^n g, V): (tuple, codomain index)."""
    return [
        (key, p)
        for key in combinations(range(dim), n)
        for p in range(space_dim)
    ]


def ce_matrix(r: LieRep, n: int) -> Matrix:
    """Matrix of the degree-n coboundary in the monomial basis."""
    g = r.algebra
    domain = ce_basis(g.dim, r.space_dim, n)
    target = ce_basis(g.dim, r.space_dim, n + 1)
    index = {kp: row for row, kp in enumerate(target)}
    columns = []
    for key, p in domain:
        vec = vzero(r.space_dim)
        vec[p] = Fraction(1)
        image = ce_coboundary(r, SkewMultiMap(n, g.dim, r.space_dim, {key: vec}), n)
        col = [Fraction(0)] * len(target)
        for tkey, tvec in image.coeffs.items():
            for q, x in enumerate(tvec):
                if x:
                    col[index[(tkey, q)]] = x
        columns.append(col)
    if not domain:
        return Matrix.zero(len(target), 0)
    return Matrix.from_columns(columns)


def ce_cohomology_dims(r: LieRep, max_degree: int) -> list[int]:
    """Dimensions of H^0 .. H^max_degree for the representation r."""
    mats = [ce_matrix(r, n) for n in range(max_degree + 1)]
    dims = [kernel_dim(mats[0])]
    for n in range(1, max_degree + 1):
        dims.append(cohomology_dim(mats[n], mats[n - 1]))
    return dims


@lru_cache(maxsize=None)
def wedge_basis(dim: int, q: int):
    """Increasing q-tuples indexing the basis of Lambda^q(k^dim)."""
    return tuple(combinations(range(dim), q))


def wedge_rep(g: LieAlgebra, q: int) -> LieRep:
    """The coefficients Lambda^q g with x . (y_1 ^ .. ^ y_q) = sum y_1 ^ .. [x, y_t] .. ^ y_q."""
    basis = wedge_basis(g.dim, q)
    position = {key: t for t, key in enumerate(basis)}
    space_dim = comb(g.dim, q)
    a = [[vzero(space_dim) for _ in range(space_dim)] for _ in range(g.dim)]
    for i in range(g.dim):
        for p, key in enumerate(basis):
            out = a[i][p]
            for slot in range(q):
                bracket = g.c[i][key[slot]]
                for k, ck in enumerate(bracket):
                    if not ck:
                        continue
                    new = key[:slot] + (k,) + key[slot + 1:]
                    sign, sorted_key = sort_sign(new)
                    if sign == 0:
                        continue
                    out[position[sorted_key]] += sign * ck
    return LieRep(g, space_dim, a)


__all__ = [
    "LieAlgebra",
    "LieRep",
    "validate_lie_algebra",
    "validate_representation",
    "ce_coboundary",
    "ce_basis",
    "ce_matrix",
    "ce_cohomology_dims",
    "wedge_basis",
    "wedge_rep",
    "nr_bracket",
    "SkewMultiMap",
]

"""Matched pairs of Lie algebras: axioms, bicrossed product, morphisms,
weight-1 operator pairs, and the bialgebra bridge.

A matched pair is a quadruple (g, h, rho, psi): rho is an action of g on
the space of h, psi an action of h on the space of g, and the two mixed
compatibilities hold:

  (11)  rho_x [h,k] = [rho_x h, k] + [h, rho_x k] + rho_{psi_k x} h - rho_{psi_h x} k
  (22)  psi_h [x,y] = [psi_h x, y] + [x, psi_h y] + psi_{rho_y h} x - psi_{rho_x h} y

The validator reports six axiom groups (two Jacobi, two action laws, the
two compatibilities); the tags (11) and (22) are this tool's axiom-group
numbering, documented in the README.  All checks are ring-generic so
they also run over k[t]/(t^2) for first-order perturbation tests.
"""

from __future__ import annotations

from itertools import combinations

from .errors import (DimensionMismatch, InvalidInput, MalformedTensor,
                     NotRotaBaxter)
from .lie import (LieAlgebra, LieRep, ce_coboundary, validate_lie_algebra,
                  validate_representation, wedge_basis, wedge_rep)
from .linalg import Matrix, invert, rank
from .multimap import SkewMultiMap
from .report import ValidationReport
from .scalars import vaccum, vis_zero, vneg, vzero


def _basis(n, i):
    v = vzero(n)
    v[i] = 1
    return v


def _action_tensor(dim_act, dim_space, data, what):
    t = [[vzero(dim_space) for _ in range(dim_space)] for _ in range(dim_act)]
    for (i, a), vec in data.items():
        if not (0 <= i < dim_act and 0 <= a < dim_space):
            raise MalformedTensor(f"{what}: index ({i}, {a}) out of range")
        vec = list(vec)
        if len(vec) != dim_space:
            raise MalformedTensor(f"{what}: value at ({i}, {a}) has wrong length")
        t[i][a] = vec
    return t


class MatchedPair:
    """Two Lie algebras with mutual actions; constructible unvalidated."""

    __slots__ = ("g", "h", "rho", "psi", "_valid")

    def __init__(self, g: LieAlgebra, h: LieAlgebra, rho, psi):
        self.g = g
        self.h = h
        if len(rho) != g.dim or any(len(row) != h.dim for row in rho):
            raise MalformedTensor("rho tensor does not match the dimensions")
        if len(psi) != h.dim or any(len(row) != g.dim for row in psi):
            raise MalformedTensor("psi tensor does not match the dimensions")
        self.rho = [[list(v) for v in row] for row in rho]
        self.psi = [[list(v) for v in row] for row in psi]
        for row in self.rho:
            for v in row:
                if len(v) != h.dim:
                    raise MalformedTensor("rho value has wrong length")
        for row in self.psi:
            for v in row:
                if len(v) != g.dim:
                    raise MalformedTensor("psi value has wrong length")
        self._valid = None

    @classmethod
    def from_sparse(cls, g: LieAlgebra, h: LieAlgebra, rho=None, psi=None):
        return cls(
            g, h,
            _action_tensor(g.dim, h.dim, dict(rho or {}), "rho"),
            _action_tensor(h.dim, g.dim, dict(psi or {}), "psi"),
        )

    @property
    def dim_g(self):
        return self.g.dim

    @property
    def dim_h(self):
        return self.h.dim

    def rho_act(self, i: int, h_vec):
        out = vzero(self.dim_h)
        for a, c in enumerate(h_vec):
            if c:
                vaccum(out, c, self.rho[i][a])
        return out

    def rho_vec(self, x_vec, h_vec):
        out = vzero(self.dim_h)
        for i, c in enumerate(x_vec):
            if c:
                vaccum(out, c, self.rho_act(i, h_vec))
        return out

    def psi_act(self, a: int, x_vec):
        out = vzero(self.dim_g)
        for i, c in enumerate(x_vec):
            if c:
                vaccum(out, c, self.psi[a][i])
        return out

    def psi_vec(self, h_vec, x_vec):
        out = vzero(self.dim_g)
        for a, c in enumerate(h_vec):
            if c:
                vaccum(out, c, self.psi_act(a, x_vec))
        return out

    def rho_rep(self) -> LieRep:
        return LieRep(self.g, self.dim_h, [[list(v) for v in row] for row in self.rho])

    def psi_rep(self) -> LieRep:
        return LieRep(self.h, self.dim_g, [[list(v) for v in row] for row in self.psi])

    @property
    def is_validated(self):
        return self._valid

    def require_valid(self):
        if self._valid is None:
            self._valid = validate_matched_pair(self).ok
        if not self._valid:
            raise InvalidInput("matched pair fails validation")

    def __eq__(self, other):
        if not isinstance(other, MatchedPair):
            return NotImplemented
        return (
            self.g == other.g and self.h == other.h
            and self.rho == other.rho and self.psi == other.psi
        )


def validate_matched_pair(mp: MatchedPair) -> ValidationReport:
    """Full axiom check with witnesses, grouped as in the module docstring."""
    report = ValidationReport("matched pair")
    m, n = mp.dim_g, mp.dim_h

    jac_g = report.new_check("jacobi(g)")
    for w in validate_lie_algebra(mp.g).checks:
        jac_g.witnesses.extend(w.witnesses)
    jac_h = report.new_check("jacobi(h)")
    for w in validate_lie_algebra(mp.h).checks:
        jac_h.witnesses.extend(w.witnesses)

    rep_rho = report.new_check("representation(rho)")
    for w in validate_representation(mp.rho_rep()).checks:
        rep_rho.witnesses.extend(w.witnesses)
    rep_psi = report.new_check("representation(psi)")
    for w in validate_representation(mp.psi_rep()).checks:
        rep_psi.witnesses.extend(w.witnesses)

    compat_11 = report.new_check("compat(11)")
    for i in range(m):
        for a, b in combinations(range(n), 2):
            lhs = mp.rho_act(i, mp.h.c[a][b])
            rhs = mp.h.bracket_vec(mp.rho[i][a], _basis(n, b))
            vaccum(rhs, 1, mp.h.bracket_vec(_basis(n, a), mp.rho[i][b]))
            vaccum(rhs, 1, mp.rho_vec(mp.psi[b][i], _basis(n, a)))
            vaccum(rhs, -1, mp.rho_vec(mp.psi[a][i], _basis(n, b)))
            residual = [x - y for x, y in zip(lhs, rhs)]
            if not vis_zero(residual):
                compat_11.add((i, a, b), residual)

    compat_22 = report.new_check("compat(22)")
    for a in range(n):
        for i, j in combinations(range(m), 2):
            lhs = mp.psi_act(a, mp.g.c[i][j])
            rhs = mp.g.bracket_vec(mp.psi[a][i], _basis(m, j))
            vaccum(rhs, 1, mp.g.bracket_vec(_basis(m, i), mp.psi[a][j]))
            vaccum(rhs, 1, mp.psi_vec(mp.rho[j][a], _basis(m, i)))
            vaccum(rhs, -1, mp.psi_vec(mp.rho[i][a], _basis(m, j)))
            residual = [x - y for x, y in zip(lhs, rhs)]
            if not vis_zero(residual):
                compat_22.add((a, i, j), residual)

    mp._valid = report.ok
    return report


def bicrossed_product(mp: MatchedPair) -> LieAlgebra:
    """The Lie algebra on g + h with bracket

    [(x,h),(y,k)] = ([x,y] + psi_h y - psi_k x, [h,k] + rho_x k - rho_y h),

    in the ordered basis g first, then h.
    """
    mp.require_valid()
    m, n = mp.dim_g, mp.dim_h
    dim = m + n
    c = [[vzero(dim) for _ in range(dim)] for _ in range(dim)]

    def put(i, j, g_part, h_part):
        c[i][j] = list(g_part) + list(h_part)
        c[j][i] = vneg(c[i][j])

    for i in range(m):
        for j in range(i + 1, m):
            put(i, j, mp.g.c[i][j], vzero(n))
    for i in range(m):
        for a in range(n):
            put(i, m + a, vneg(mp.psi[a][i]), mp.rho[i][a])
    for a in range(n):
        for b in range(a + 1, n):
            put(m + a, m + b, vzero(m), mp.h.c[a][b])
    out = LieAlgebra(dim, c)
    out.require_valid()
    return out


class MPMorphism:
    """A pair of linear maps f: g -> g' and g_map: h -> h' (rows index targets)."""

    __slots__ = ("f", "g_map")

    def __init__(self, f: Matrix, g_map: Matrix):
        self.f = f
        self.g_map = g_map

    @classmethod
    def identity(cls, mp: MatchedPair) -> "MPMorphism":
        return cls(Matrix.identity(mp.dim_g), Matrix.identity(mp.dim_h))


def _is_hom(alg_src: LieAlgebra, alg_dst: LieAlgebra, f: Matrix, check, label):
    for i in range(alg_src.dim):
        for j in range(i + 1, alg_src.dim):
            lhs = f.mul_vec(alg_src.c[i][j])
            rhs = alg_dst.bracket_vec(f.column(i), f.column(j))
            residual = [x - y for x, y in zip(lhs, rhs)]
            if not vis_zero(residual):
                check.add((label, i, j), residual)


def check_morphism(src: MatchedPair, dst: MatchedPair, phi: MPMorphism) -> ValidationReport:
    """Homomorphism + intertwining checks, plus the equivalent combined-product criterion."""
    src.require_valid()
    dst.require_valid()
    f, gm = phi.f, phi.g_map
    if f.cols != src.dim_g or f.rows != dst.dim_g:
        raise DimensionMismatch("f has the wrong shape")
    if gm.cols != src.dim_h or gm.rows != dst.dim_h:
        raise DimensionMismatch("g_map has the wrong shape")
    report = ValidationReport("matched-pair morphism")

    hom_f = report.new_check("homomorphism(f)")
    _is_hom(src.g, dst.g, f, hom_f, "g")
    hom_g = report.new_check("homomorphism(g)")
    _is_hom(src.h, dst.h, gm, hom_g, "h")

    inter_rho = report.new_check("intertwine(rho)")
    for i in range(src.dim_g):
        for a in range(src.dim_h):
            lhs = gm.mul_vec(src.rho[i][a])
            rhs = dst.rho_vec(f.column(i), gm.column(a))
            residual = [x - y for x, y in zip(lhs, rhs)]
            if not vis_zero(residual):
                inter_rho.add((i, a), residual)

    inter_psi = report.new_check("intertwine(psi)")
    for a in range(src.dim_h):
        for i in range(src.dim_g):
            lhs = f.mul_vec(src.psi[a][i])
            rhs = dst.psi_vec(gm.column(a), f.column(i))
            residual = [x - y for x, y in zip(lhs, rhs)]
            if not vis_zero(residual):
                inter_psi.add((a, i), residual)

    combined = report.new_check("combined-product homomorphism")
    big_src = bicrossed_product(src)
    big_dst = bicrossed_product(dst)
    blocks = Matrix.zero(dst.dim_g + dst.dim_h, src.dim_g + src.dim_h)
    for i in range(dst.dim_g):
        for j in range(src.dim_g):
            blocks.entries[i][j] = f.entries[i][j]
    for a in range(dst.dim_h):
        for b in range(src.dim_h):
            blocks.entries[dst.dim_g + a][src.dim_g + b] = gm.entries[a][b]
    _is_hom(big_src, big_dst, blocks, combined, "g+h")
    return report


def rota_baxter_matched_pair(g: LieAlgebra, r_matrix: Matrix) -> MatchedPair:
    """Matched pair carried by the diagonal and the graph of a weight-1 operator.

    R must satisfy [Rx, Ry] = R([Rx, y] + [x, Ry] + [x, y]); then inside the
    direct product g + g the diagonal {(x, x)} and the graph
    {(Rx, x + Rx)} are complementary subalgebras, and the mutual actions
    are read off through the exact splitting.
    """
    g.require_valid()
    m = g.dim
    if r_matrix.rows != m or r_matrix.cols != m:
        raise DimensionMismatch("operator matrix must be square of the algebra dimension")
    for i in range(m):
        for j in range(i + 1, m):
            ri = r_matrix.column(i)
            rj = r_matrix.column(j)
            lhs = g.bracket_vec(ri, rj)
            inner = g.bracket_vec(ri, _basis(m, j))
            vaccum(inner, 1, g.bracket_vec(_basis(m, i), rj))
            vaccum(inner, 1, g.c[i][j])
            rhs = r_matrix.mul_vec(inner)
            residual = [x - y for x, y in zip(lhs, rhs)]
            if not vis_zero(residual):
                raise NotRotaBaxter(
                    f"weight-1 identity fails at basis pair ({i}, {j})",
                    witness=(i, j, residual),
                )

    # columns: diagonal copy (e_i, e_i), then graph copy (R e_a, e_a + R e_a)
    columns = []
    for i in range(m):
        columns.append(_basis(m, i) + _basis(m, i))
    for a in range(m):
        ra = r_matrix.column(a)
        columns.append(list(ra) + [x + y for x, y in zip(_basis(m, a), ra)])
    change = Matrix.from_columns(columns)
    back = invert(change)

    def product_bracket(u, v):
        left = g.bracket_vec(u[:m], v[:m])
        right = g.bracket_vec(u[m:], v[m:])
        return list(left) + list(right)

    def coords(vec):
        return back.mul_vec(vec)

    diag = lambda i: columns[i]
    graph = lambda a: columns[m + a]

    c_diag = [[vzero(m) for _ in range(m)] for _ in range(m)]
    c_graph = [[vzero(m) for _ in range(m)] for _ in range(m)]
    rho = [[vzero(m) for _ in range(m)] for _ in range(m)]
    psi = [[vzero(m) for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            co = coords(product_bracket(diag(i), diag(j)))
            if not vis_zero(co[m:]):
                raise MalformedTensor("diagonal copy failed to close under the bracket")
            c_diag[i][j] = co[:m]
    for a in range(m):
        for b in range(m):
            co = coords(product_bracket(graph(a), graph(b)))
            if not vis_zero(co[:m]):
                raise MalformedTensor("graph copy failed to close under the bracket")
            c_graph[a][b] = co[m:]
    for i in range(m):
        for a in range(m):
            co = coords(product_bracket(diag(i), graph(a)))
            rho[i][a] = co[m:]
            psi[a][i] = vneg(co[:m])

    pair = MatchedPair(LieAlgebra(m, c_diag), LieAlgebra(m, c_graph), rho, psi)
    pair.require_valid()
    return pair


def rota_baxter_splitting_rank(g: LieAlgebra, r_matrix: Matrix) -> int:
    """Rank of the joint (diagonal | graph) basis matrix inside g + g."""
    m = g.dim
    columns = [_basis(m, i) + _basis(m, i) for i in range(m)]
    for a in range(m):
        ra = r_matrix.column(a)
        columns.append(list(ra) + [x + y for x, y in zip(_basis(m, a), ra)])
    return rank(Matrix.from_columns(columns))


class LieBialgebra:
    """A Lie algebra with a cobracket delta: g -> Lambda^2 g.

    cobracket[k] is a {(i, j): coefficient} dict over i < j, meaning
    delta(e_k) = sum coeff * e_i ^ e_j.  The dual bracket it induces is
    [t^a, t^b]* = sum_k cobracket[k][(a, b)] t^k.
    """

    __slots__ = ("g", "cobracket")

    def __init__(self, g: LieAlgebra, cobracket):
        self.g = g
        if len(cobracket) != g.dim:
            raise MalformedTensor("cobracket must have one entry per basis vector")
        self.cobracket = []
        for k, table in enumerate(cobracket):
            clean = {}
            for (i, j), coeff in dict(table).items():
                if not (0 <= i < j < g.dim):
                    raise MalformedTensor(
                        f"cobracket[{k}]: key ({i}, {j}) must satisfy 0 <= i < j < dim"
                    )
                if coeff:
                    clean[(i, j)] = coeff
            self.cobracket.append(clean)

    def dual_algebra(self) -> LieAlgebra:
        m = self.g.dim
        c = [[vzero(m) for _ in range(m)] for _ in range(m)]
        for k, table in enumerate(self.cobracket):
            for (a, b), coeff in table.items():
                c[a][b][k] = c[a][b][k] + coeff
                c[b][a][k] = c[b][a][k] - coeff
        return LieAlgebra(m, c)

    def cobracket_map(self) -> SkewMultiMap:
        """delta as an arity-1 map into the wedge-square coefficients."""
        m = self.g.dim
        basis = wedge_basis(m, 2)
        position = {key: t for t, key in enumerate(basis)}
        coeffs = {}
        for k, table in enumerate(self.cobracket):
            vec = vzero(len(basis))
            for key, coeff in table.items():
                vec[position[key]] = coeff
            if not vis_zero(vec):
                coeffs[(k,)] = vec
        return SkewMultiMap(1, m, len(basis), coeffs)


def validate_bialgebra(b: LieBialgebra) -> ValidationReport:
    """Jacobi for g and for the dual bracket, plus the cocycle law for delta."""
    report = ValidationReport("lie bialgebra")

    jac_g = report.new_check("jacobi(g)")
    for w in validate_lie_algebra(b.g).checks:
        jac_g.witnesses.extend(w.witnesses)

    jac_dual = report.new_check("jacobi(dual)")
    for w in validate_lie_algebra(b.dual_algebra()).checks:
        jac_dual.witnesses.extend(w.witnesses)

    cocycle = report.new_check("cobracket 1-cocycle")
    if report.checks[0].ok:
        image = ce_coboundary(wedge_rep(b.g, 2), b.cobracket_map(), 1)
        for key, vec in sorted(image.coeffs.items()):
            cocycle.add(key, vec)
    return report


def bialgebra_to_matched_pair(b: LieBialgebra) -> MatchedPair:
    """The pair (g, dual of g) with both actions dual to the adjoint ones.

    The action of x on a covector q is (x . q)(y) = -q([x, y]); the action
    of a covector on g is dual to the adjoint action of the dual algebra.
    """
    validation = validate_bialgebra(b)
    if not validation.ok:
        raise InvalidInput("bialgebra fails validation")
    m = b.g.dim
    dual = b.dual_algebra()
    rho = [[vzero(m) for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for a in range(m):
            # coefficient of t^b in x_i . t^a  is  -c[i][b][a]
            rho[i][a] = [-b.g.c[i][bb][a] for bb in range(m)]
    psi = [[vzero(m) for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for i in range(m):
            # coefficient of e_j in t^a . e_i  is  -c*[a][j][i]
            psi[a][i] = [-dual.c[a][j][i] for j in range(m)]
    pair = MatchedPair(b.g, dual, rho, psi)
    pair.require_valid()
    return pair

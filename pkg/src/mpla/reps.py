"""Representations of a matched pair and the constructions they generate.

A representation of (g, h, rho, psi) on a pair of spaces (V, W) consists
of four actions (rho_V, psi_V on V; rho_W, psi_W on W) and two pairing
maps alpha: V x h -> W, beta: W x g -> V subject to six mixed identities
(tags pairing(1)..pairing(6) below).  The canonical example is the
adjoint one, (V, W) = (g, h) with alpha = rho and beta = psi.

Tensors are stored with the acting index first:
  rho_V[i][u], psi_V[a][u] : vectors in V,
  rho_W[i][w], psi_W[a][w] : vectors in W,
  alpha[u][a] : vector in W,   beta[w][i] : vector in V.
"""

from __future__ import annotations

from .errors import (DimensionMismatch, InvalidInput, MalformedTensor,
                     NotRestrictable)
from .lie import LieAlgebra, LieRep, validate_representation
from .matched import MatchedPair, bicrossed_product
from .report import ValidationReport
from .scalars import vaccum, vis_zero, vneg, vzero


def _basis(n, i):
    v = vzero(n)
    v[i] = 1
    return v


def _tensor(rows, cols, veclen, data, what):
    t = [[vzero(veclen) for _ in range(cols)] for _ in range(rows)]
    for (i, j), vec in dict(data or {}).items():
        if not (0 <= i < rows and 0 <= j < cols):
            raise MalformedTensor(f"{what}: index ({i}, {j}) out of range")
        vec = list(vec)
        if len(vec) != veclen:
            raise MalformedTensor(f"{what}: value at ({i}, {j}) has wrong length")
        t[i][j] = vec
    return t


class MPRepresentation:
    """Representation data of a matched pair on a pair of spaces (V, W)."""

    __slots__ = ("base", "dim_v", "dim_w", "rho_v", "psi_v", "rho_w", "psi_w",
                 "alpha", "beta", "_valid")

    def __init__(self, base: MatchedPair, dim_v: int, dim_w: int,
                 rho_v, psi_v, rho_w, psi_w, alpha, beta):
        self.base = base
        self.dim_v = dim_v
        self.dim_w = dim_w
        m, n = base.dim_g, base.dim_h

        def dense(t, rows, cols, veclen, what):
            if len(t) != rows or any(len(r) != cols for r in t):
                raise MalformedTensor(f"{what} tensor does not match the dimensions")
            out = [[list(v) for v in row] for row in t]
            for row in out:
                for v in row:
                    if len(v) != veclen:
                        raise MalformedTensor(f"{what} value has wrong length")
            return out

        self.rho_v = dense(rho_v, m, dim_v, dim_v, "rho_V")
        self.psi_v = dense(psi_v, n, dim_v, dim_v, "psi_V")
        self.rho_w = dense(rho_w, m, dim_w, dim_w, "rho_W")
        self.psi_w = dense(psi_w, n, dim_w, dim_w, "psi_W")
        self.alpha = dense(alpha, dim_v, n, dim_w, "alpha")
        self.beta = dense(beta, dim_w, m, dim_v, "beta")
        self._valid = None

    @classmethod
    def from_sparse(cls, base, dims, rho_v=None, psi_v=None, rho_w=None,
                    psi_w=None, alpha=None, beta=None):
        p, q = dims
        m, n = base.dim_g, base.dim_h
        return cls(
            base, p, q,
            _tensor(m, p, p, rho_v, "rho_V"),
            _tensor(n, p, p, psi_v, "psi_V"),
            _tensor(m, q, q, rho_w, "rho_W"),
            _tensor(n, q, q, psi_w, "psi_W"),
            _tensor(p, n, q, alpha, "alpha"),
            _tensor(q, m, p, beta, "beta"),
        )

    @classmethod
    def zero(cls, base, dims):
        return cls.from_sparse(base, dims)

    @property
    def dims(self):
        return (self.dim_v, self.dim_w)

    # -- vector actions ----------------------------------------------------

    def act_rho_v(self, i, v):
        out = vzero(self.dim_v)
        for u, c in enumerate(v):
            if c:
                vaccum(out, c, self.rho_v[i][u])
        return out

    def act_psi_v(self, a, v):
        out = vzero(self.dim_v)
        for u, c in enumerate(v):
            if c:
                vaccum(out, c, self.psi_v[a][u])
        return out

    def act_rho_w(self, i, w):
        out = vzero(self.dim_w)
        for u, c in enumerate(w):
            if c:
                vaccum(out, c, self.rho_w[i][u])
        return out

    def act_psi_w(self, a, w):
        out = vzero(self.dim_w)
        for u, c in enumerate(w):
            if c:
                vaccum(out, c, self.psi_w[a][u])
        return out

    def pair_alpha(self, v, a):
        """alpha_v h_a for a coefficient vector v in V."""
        out = vzero(self.dim_w)
        for u, c in enumerate(v):
            if c:
                vaccum(out, c, self.alpha[u][a])
        return out

    def pair_alpha_vec(self, v, h_vec):
        out = vzero(self.dim_w)
        for a, c in enumerate(h_vec):
            if c:
                vaccum(out, c, self.pair_alpha(v, a))
        return out

    def pair_beta(self, w, i):
        out = vzero(self.dim_v)
        for u, c in enumerate(w):
            if c:
                vaccum(out, c, self.beta[u][i])
        return out

    def pair_beta_vec(self, w, x_vec):
        out = vzero(self.dim_v)
        for i, c in enumerate(x_vec):
            if c:
                vaccum(out, c, self.pair_beta(w, i))
        return out

    def rho_v_rep(self):
        return LieRep(self.base.g, self.dim_v, self.rho_v)

    def psi_v_rep(self):
        return LieRep(self.base.h, self.dim_v, self.psi_v)

    def rho_w_rep(self):
        return LieRep(self.base.g, self.dim_w, self.rho_w)

    def psi_w_rep(self):
        return LieRep(self.base.h, self.dim_w, self.psi_w)

    def require_valid(self):
        if self._valid is None:
            self._valid = validate_mp_representation(self).ok
        if not self._valid:
            raise InvalidInput("matched-pair representation fails validation")

    def tensors_equal(self, other: "MPRepresentation") -> bool:
        return (
            self.dims == other.dims
            and self.rho_v == other.rho_v and self.psi_v == other.psi_v
            and self.rho_w == other.rho_w and self.psi_w == other.psi_w
            and self.alpha == other.alpha and self.beta == other.beta
        )


def adjoint_representation(mp: MatchedPair) -> MPRepresentation:
    """(V, W) = (g, h) with the brackets and the two actions themselves."""
    return MPRepresentation(
        mp, mp.dim_g, mp.dim_h,
        mp.g.c, mp.psi, mp.rho, mp.h.c,
        mp.rho, mp.psi,
    )


def validate_mp_representation(r: MPRepresentation) -> ValidationReport:
    """Four action laws plus the six pairing identities, with witnesses."""
    mp = r.base
    m, n = mp.dim_g, mp.dim_h
    p, q = r.dims
    report = ValidationReport("matched-pair representation")

    for name, rep in (
        ("rep(rho_V)", r.rho_v_rep()), ("rep(psi_V)", r.psi_v_rep()),
        ("rep(rho_W)", r.rho_w_rep()), ("rep(psi_W)", r.psi_w_rep()),
    ):
        check = report.new_check(name)
        for c in validate_representation(rep).checks:
            check.witnesses.extend(c.witnesses)

    # pairing(1): alpha_{rho_V(x) v} h = rho_W(x) alpha_v h - alpha_v rho_x h
    check = report.new_check("pairing(1)")
    for i in range(m):
        for u in range(p):
            for a in range(n):
                lhs = r.pair_alpha(r.rho_v[i][u], a)
                rhs = r.act_rho_w(i, r.alpha[u][a])
                vaccum(rhs, -1, r.pair_alpha_vec(_basis(p, u), mp.rho[i][a]))
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((i, u, a), res)

    # pairing(2): beta_{psi_W(h) w} x = psi_V(h) beta_w x - beta_w psi_h x
    check = report.new_check("pairing(2)")
    for a in range(n):
        for w in range(q):
            for i in range(m):
                lhs = r.pair_beta(r.psi_w[a][w], i)
                rhs = r.act_psi_v(a, r.beta[w][i])
                vaccum(rhs, -1, r.pair_beta_vec(_basis(q, w), mp.psi[a][i]))
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((a, w, i), res)

    # pairing(3): rho_W(x) psi_W(h) w = psi_W(rho_x h) w + psi_W(h) rho_W(x) w
    #             + alpha_{beta_w x} h - rho_W(psi_h x) w
    check = report.new_check("pairing(3)")
    for i in range(m):
        for a in range(n):
            for w in range(q):
                lhs = r.act_rho_w(i, r.psi_w[a][w])
                rhs = vzero(q)
                vaccum(rhs, 1, r.psi_w_rep().act_vec(mp.rho[i][a], _basis(q, w)))
                vaccum(rhs, 1, r.act_psi_w(a, r.rho_w[i][w]))
                vaccum(rhs, 1, r.pair_alpha(r.beta[w][i], a))
                vaccum(rhs, -1, r.rho_w_rep().act_vec(mp.psi[a][i], _basis(q, w)))
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((i, a, w), res)

    # pairing(4): alpha_v [h,k] = -psi_W(k) alpha_v h + psi_W(h) alpha_v k
    #             + alpha_{psi_V(k) v} h - alpha_{psi_V(h) v} k
    check = report.new_check("pairing(4)")
    for u in range(p):
        for a in range(n):
            for b in range(a + 1, n):
                lhs = r.pair_alpha_vec(_basis(p, u), mp.h.c[a][b])
                rhs = vzero(q)
                vaccum(rhs, -1, r.act_psi_w(b, r.alpha[u][a]))
                vaccum(rhs, 1, r.act_psi_w(a, r.alpha[u][b]))
                vaccum(rhs, 1, r.pair_alpha(r.psi_v[b][u], a))
                vaccum(rhs, -1, r.pair_alpha(r.psi_v[a][u], b))
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((u, a, b), res)

    # pairing(5): psi_V(h) rho_V(x) v = rho_V(psi_h x) v + rho_V(x) psi_V(h) v
    #             + beta_{alpha_v h} x - psi_V(rho_x h) v
    check = report.new_check("pairing(5)")
    for a in range(n):
        for i in range(m):
            for u in range(p):
                lhs = r.act_psi_v(a, r.rho_v[i][u])
                rhs = vzero(p)
                vaccum(rhs, 1, r.rho_v_rep().act_vec(mp.psi[a][i], _basis(p, u)))
                vaccum(rhs, 1, r.act_rho_v(i, r.psi_v[a][u]))
                vaccum(rhs, 1, r.pair_beta(r.alpha[u][a], i))
                vaccum(rhs, -1, r.psi_v_rep().act_vec(mp.rho[i][a], _basis(p, u)))
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((a, i, u), res)

    # pairing(6): beta_w [x,y] = -rho_V(y) beta_w x + rho_V(x) beta_w y
    #             + beta_{rho_W(y) w} x - beta_{rho_W(x) w} y
    check = report.new_check("pairing(6)")
    for w in range(q):
        for i in range(m):
            for j in range(i + 1, m):
                lhs = r.pair_beta_vec(_basis(q, w), mp.g.c[i][j])
                rhs = vzero(p)
                vaccum(rhs, -1, r.act_rho_v(j, r.beta[w][i]))
                vaccum(rhs, 1, r.act_rho_v(i, r.beta[w][j]))
                vaccum(rhs, 1, r.pair_beta(r.rho_w[j][w], i))
                vaccum(rhs, -1, r.pair_beta(r.rho_w[i][w], j))
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((w, i, j), res)

    r._valid = report.ok
    return report


def assemble_semidirect(r: MPRepresentation) -> MatchedPair:
    """The semidirect quadruple on (g + V, h + W); no validity assumed.

    Brackets: [(x,u),(y,v)] = ([x,y], rho_V(x)v - rho_V(y)u) and its h + W
    mirror; actions:
      (rho x alpha)_{(x,v)}(h,w) = (rho_x h, rho_W(x)w + alpha_v h),
      (psi x beta)_{(h,w)}(x,u) = (psi_h x, psi_V(h)u + beta_w x).
    """
    mp = r.base
    m, n = mp.dim_g, mp.dim_h
    p, q = r.dims

    big_g = [[vzero(m + p) for _ in range(m + p)] for _ in range(m + p)]
    for i in range(m):
        for j in range(m):
            big_g[i][j] = list(mp.g.c[i][j]) + vzero(p)
        for u in range(p):
            big_g[i][m + u] = vzero(m) + list(r.rho_v[i][u])
            big_g[m + u][i] = vzero(m) + vneg(r.rho_v[i][u])
    big_h = [[vzero(n + q) for _ in range(n + q)] for _ in range(n + q)]
    for a in range(n):
        for b in range(n):
            big_h[a][b] = list(mp.h.c[a][b]) + vzero(q)
        for w in range(q):
            big_h[a][n + w] = vzero(n) + list(r.psi_w[a][w])
            big_h[n + w][a] = vzero(n) + vneg(r.psi_w[a][w])

    big_rho = [[vzero(n + q) for _ in range(n + q)] for _ in range(m + p)]
    for i in range(m):
        for a in range(n):
            big_rho[i][a] = list(mp.rho[i][a]) + vzero(q)
        for w in range(q):
            big_rho[i][n + w] = vzero(n) + list(r.rho_w[i][w])
    for u in range(p):
        for a in range(n):
            big_rho[m + u][a] = vzero(n) + list(r.alpha[u][a])

    big_psi = [[vzero(m + p) for _ in range(m + p)] for _ in range(n + q)]
    for a in range(n):
        for i in range(m):
            big_psi[a][i] = list(mp.psi[a][i]) + vzero(p)
        for u in range(p):
            big_psi[a][m + u] = vzero(m) + list(r.psi_v[a][u])
    for w in range(q):
        for i in range(m):
            big_psi[n + w][i] = vzero(m) + list(r.beta[w][i])

    return MatchedPair(
        LieAlgebra(m + p, big_g), LieAlgebra(n + q, big_h), big_rho, big_psi
    )


def semidirect_product(r: MPRepresentation) -> MatchedPair:
    """Semidirect matched pair of a valid representation; output validates."""
    r.base.require_valid()
    r.require_valid()
    out = assemble_semidirect(r)
    out.require_valid()
    return out


def induced_bicross_rep(r: MPRepresentation) -> LieRep:
    """The combined-product algebra acting on V + W by

    (x, h) . (v, w) = (rho_V(x)v + psi_V(h)v - beta_w x,
                       psi_W(h)w + rho_W(x)w - alpha_v h).
    """
    r.base.require_valid()
    r.require_valid()
    big = bicrossed_product(r.base)
    mp = r.base
    m, n = mp.dim_g, mp.dim_h
    p, q = r.dims
    action = [[vzero(p + q) for _ in range(p + q)] for _ in range(m + n)]
    for i in range(m):
        for u in range(p):
            action[i][u] = list(r.rho_v[i][u]) + vzero(q)
        for w in range(q):
            action[i][p + w] = vneg(r.beta[w][i]) + list(r.rho_w[i][w])
    for a in range(n):
        for u in range(p):
            action[m + a][u] = list(r.psi_v[a][u]) + vneg(r.alpha[u][a])
        for w in range(q):
            action[m + a][p + w] = vzero(p) + list(r.psi_w[a][w])
    rep = LieRep(big, p + q, action)
    rep.require_valid()
    return rep


def extract_rep_from_bicross(base: MatchedPair, r: LieRep, split) -> MPRepresentation:
    """Recover the six tensors from a combined-product action on V + W.

    Pure-g elements must not map V into W, and pure-h elements must not map
    W into V; the pairing maps are the two permitted off-blocks, with
      alpha_v h = -pr_W((0,h) . (v,0)),   beta_w x = -pr_V((x,0) . (0,w)).
    """
    base.require_valid()
    p, q = split
    m, n = base.dim_g, base.dim_h
    if r.space_dim != p + q:
        raise DimensionMismatch("split does not add up to the module dimension")
    if r.algebra.dim != m + n:
        raise DimensionMismatch("representation is not over the combined algebra")
    for i in range(m):
        for u in range(p):
            leak = r.a[i][u][p:]
            if not vis_zero(leak):
                raise NotRestrictable(
                    f"pure-g action mixes V into W at (x_{i}, v_{u})",
                    witness=("V->W", i, u),
                )
    for a in range(n):
        for w in range(q):
            leak = r.a[m + a][p + w][:p]
            if not vis_zero(leak):
                raise NotRestrictable(
                    f"pure-h action mixes W into V at (h_{a}, w_{w})",
                    witness=("W->V", a, w),
                )
    rho_v = [[r.a[i][u][:p] for u in range(p)] for i in range(m)]
    rho_w = [[r.a[i][p + w][p:] for w in range(q)] for i in range(m)]
    psi_v = [[r.a[m + a][u][:p] for u in range(p)] for a in range(n)]
    psi_w = [[r.a[m + a][p + w][p:] for w in range(q)] for a in range(n)]
    alpha = [[vneg(r.a[m + a][u][p:]) for a in range(n)] for u in range(p)]
    beta = [[vneg(r.a[i][p + w][:p]) for i in range(m)] for w in range(q)]
    out = MPRepresentation(base, p, q, rho_v, psi_v, rho_w, psi_w, alpha, beta)
    out.require_valid()
    return out


def dual_representation(r: MPRepresentation) -> MPRepresentation:
    """The representation on (W*, V*) by negated transposes,

    (alpha*_p h)(v) = -p(alpha_v h)  and  (beta*_q x)(w) = -q(beta_w x).
    """
    mp = r.base
    m, n = mp.dim_g, mp.dim_h
    p, q = r.dims

    def neg_t(tensor, rows, size):
        # action on the dual of a size-dim space: entry [i][u][u'] = -tensor[i][u'][u]
        return [
            [[-tensor[i][u2][u1] for u2 in range(size)] for u1 in range(size)]
            for i in range(rows)
        ]

    rho_v2 = neg_t(r.rho_w, m, q)      # g acting on W*
    psi_v2 = neg_t(r.psi_w, n, q)      # h acting on W*
    rho_w2 = neg_t(r.rho_v, m, p)      # g acting on V*
    psi_w2 = neg_t(r.psi_v, n, p)      # h acting on V*
    alpha2 = [
        [[-r.alpha[u][a][w] for u in range(p)] for a in range(n)]
        for w in range(q)
    ]
    beta2 = [
        [[-r.beta[w][i][u] for w in range(q)] for i in range(m)]
        for u in range(p)
    ]
    return MPRepresentation(mp, q, p, rho_v2, psi_v2, rho_w2, psi_w2, alpha2, beta2)


def coadjoint_representation(mp: MatchedPair) -> MPRepresentation:
    """The representation on (h*, g*) with

    (alpha_p h)(x) = -p(rho_x h)  and  (beta_q x)(h) = -q(psi_h x).
    """
    m, n = mp.dim_g, mp.dim_h
    rho_v = [
        [[-mp.rho[i][b][a] for b in range(n)] for a in range(n)]
        for i in range(m)
    ]
    psi_v = [
        [[-mp.h.c[a][b2][b1] for b2 in range(n)] for b1 in range(n)]
        for a in range(n)
    ]
    rho_w = [
        [[-mp.g.c[i][j2][j1] for j2 in range(m)] for j1 in range(m)]
        for i in range(m)
    ]
    psi_w = [
        [[-mp.psi[a][j][i] for j in range(m)] for i in range(m)]
        for a in range(n)
    ]
    alpha = [
        [[-mp.rho[i][b][a] for i in range(m)] for b in range(n)]
        for a in range(n)
    ]
    beta = [
        [[-mp.psi[b][i][j] for b in range(n)] for i in range(m)]
        for j in range(m)
    ]
    return MPRepresentation(mp, n, m, rho_v, psi_v, rho_w, psi_w, alpha, beta)

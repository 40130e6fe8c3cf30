"""Two-term homotopy Lie structures, their matched pairs, and the
correspondence with degree-3 cocycles of a matched pair.

A two-term structure is a complex g1 -> g0 (differential mu1) with a
graded bracket (bracket00 on g0, bracket01: g0 x g1 -> g1, and
[v, x] = -[x, v]) and a skew trilinear mu3: g0^3 -> g1 subject to the
five coherence conditions (i)-(v) printed in ``validate_two_term``.
"Skeletal" means mu1 = 0; then g0 is a Lie algebra, g1 a module, and
mu3 a closed 3-cochain.

A matched pair of skeletal structures packages, on the degree-0 level, a
matched pair of Lie algebras (g0, h0) with a representation on (g1, h1),
plus two trilinear maps rho3, psi3; the whole tuple corresponds exactly
to the degree-3 cochains of shape (F1, 0, F3) in the kernel of the
coboundary, and the two directions of that correspondence are
implemented by ``skeletal_to_triple`` and ``triple_to_skeletal``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cohomology import MPCochain, delta_mpl_coeff
from .errors import (InvalidInput, MalformedTensor, NonzeroMiddleComponent,
                     NotACocycle, ShapeMismatch)
from .lie import LieAlgebra
from .matched import MatchedPair
from .report import ValidationReport
from .reps import MPRepresentation
from .scalars import vaccum, vis_zero, vneg, vzero


def _basis(n, i):
    v = vzero(n)
    v[i] = 1
    return v


class TwoTermLInfinity:
    """Structure data of a two-term homotopy Lie algebra."""

    __slots__ = ("dim0", "dim1", "mu1", "bracket00", "bracket01", "mu3")

    def __init__(self, dim0, dim1, mu1, bracket00, bracket01, mu3):
        self.dim0 = dim0
        self.dim1 = dim1
        # mu1[p] = image of the p-th g1 basis vector in g0
        self.mu1 = [list(v) for v in mu1]
        if len(self.mu1) != dim1 or any(len(v) != dim0 for v in self.mu1):
            raise MalformedTensor("mu1 does not map g1 into g0")
        self.bracket00 = [[list(v) for v in row] for row in bracket00]
        if len(self.bracket00) != dim0 or any(
            len(row) != dim0 or any(len(v) != dim0 for v in row)
            for row in self.bracket00
        ):
            raise MalformedTensor("bracket00 has the wrong shape")
        self.bracket01 = [[list(v) for v in row] for row in bracket01]
        if len(self.bracket01) != dim0 or any(
            len(row) != dim1 or any(len(v) != dim1 for v in row)
            for row in self.bracket01
        ):
            raise MalformedTensor("bracket01 has the wrong shape")
        # mu3 dense over (i, j, k) with values in g1
        self.mu3 = [
            [[list(v) for v in row] for row in plane] for plane in mu3
        ]
        if len(self.mu3) != dim0 or any(
            len(plane) != dim0 or any(
                len(row) != dim0 or any(len(v) != dim1 for v in row)
                for row in plane
            )
            for plane in self.mu3
        ):
            raise MalformedTensor("mu3 has the wrong shape")

    @classmethod
    def from_sparse(cls, dim0, dim1, mu1=None, bracket00=None, bracket01=None,
                    mu3=None):
        """mu1: {p: vec}; bracket00: {(i<j): vec}; bracket01: {(i,p): vec};
        mu3: {(i<j<k): vec}; skew completions implicit."""
        m1 = [vzero(dim0) for _ in range(dim1)]
        for p, vec in dict(mu1 or {}).items():
            m1[p] = list(vec)
        b00 = [[vzero(dim0) for _ in range(dim0)] for _ in range(dim0)]
        for (i, j), vec in dict(bracket00 or {}).items():
            if not i < j:
                raise MalformedTensor("bracket00 keys need i < j")
            b00[i][j] = list(vec)
            b00[j][i] = vneg(vec)
        b01 = [[vzero(dim1) for _ in range(dim1)] for _ in range(dim0)]
        for (i, p), vec in dict(bracket01 or {}).items():
            b01[i][p] = list(vec)
        m3 = [
            [[vzero(dim1) for _ in range(dim0)] for _ in range(dim0)]
            for _ in range(dim0)
        ]
        for (i, j, k), vec in dict(mu3 or {}).items():
            if not i < j < k:
                raise MalformedTensor("mu3 keys need i < j < k")
            vec = list(vec)
            for (a, b, c), sign in (
                ((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1),
                ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1),
            ):
                m3[a][b][c] = [sign * x for x in vec]
        return cls(dim0, dim1, m1, b00, b01, m3)

    @classmethod
    def from_lie_algebra(cls, g: LieAlgebra, dim1: int = 0) -> "TwoTermLInfinity":
        return cls.from_sparse(
            g.dim, dim1,
            bracket00={(i, j): g.c[i][j] for i in range(g.dim)
                       for j in range(i + 1, g.dim)},
        )

    @property
    def is_skeletal(self) -> bool:
        return all(vis_zero(v) for v in self.mu1)

    def degree0_algebra(self) -> LieAlgebra:
        return LieAlgebra(self.dim0, self.bracket00)

    def b00(self, u, v):
        out = vzero(self.dim0)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        vaccum(out, a * b, self.bracket00[i][j])
        return out

    def b01(self, i, v1):
        """[e_i, v] for v in g1 coordinates."""
        out = vzero(self.dim1)
        for p, c in enumerate(v1):
            if c:
                vaccum(out, c, self.bracket01[i][p])
        return out

    def b01_vec(self, v0, v1):
        out = vzero(self.dim1)
        for i, c in enumerate(v0):
            if c:
                vaccum(out, c, self.b01(i, v1))
        return out

    def mu1_vec(self, v1):
        out = vzero(self.dim0)
        for p, c in enumerate(v1):
            if c:
                vaccum(out, c, self.mu1[p])
        return out

    def mu3_basis(self, i, j, k):
        return self.mu3[i][j][k]

    def mu3_vec(self, u, v, w):
        out = vzero(self.dim1)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in enumerate(w):
                    if c:
                        vaccum(out, a * b * c, self.mu3[i][j][k])
        return out

    def tensors_equal(self, other: "TwoTermLInfinity") -> bool:
        return (
            (self.dim0, self.dim1) == (other.dim0, other.dim1)
            and self.mu1 == other.mu1
            and self.bracket00 == other.bracket00
            and self.bracket01 == other.bracket01
            and self.mu3 == other.mu3
        )


def validate_two_term(t: TwoTermLInfinity) -> ValidationReport:
    """The five coherence conditions, each with basis-tuple witnesses:

    (i)   mu1[x, v] = [x, mu1 v]
    (ii)  [mu1 u, v] = [u, mu1 v]
    (iii) mu1(mu3(x,y,z)) = [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
    (iv)  mu3(x,y,mu1 v) = [x,[y,v]] + [y,[v,x]] + [v,[x,y]]
    (v)   the seven-against-six pairing of mu3 with the brackets.
    """
    report = ValidationReport("two-term structure")
    d0, d1 = t.dim0, t.dim1

    skew0 = report.new_check("bracket00 skew")
    for i in range(d0):
        for j in range(i, d0):
            res = [a + b for a, b in zip(t.bracket00[i][j], t.bracket00[j][i])]
            if not vis_zero(res):
                skew0.add((i, j), res)
    skew3 = report.new_check("mu3 skew")
    for i in range(d0):
        for j in range(d0):
            for k in range(d0):
                swapped = [t.mu3[j][i][k], t.mu3[i][k][j]]
                for other, where in zip(swapped, ("swap01", "swap12")):
                    res = [a + b for a, b in zip(t.mu3[i][j][k], other)]
                    if not vis_zero(res):
                        skew3.add((where, i, j, k), res)

    cond = report.new_check("condition(i)")
    for i in range(d0):
        for p in range(d1):
            lhs = t.mu1_vec(t.bracket01[i][p])
            rhs = t.b00(_basis(d0, i), t.mu1[p])
            res = [a - b for a, b in zip(lhs, rhs)]
            if not vis_zero(res):
                cond.add((i, p), res)

    cond = report.new_check("condition(ii)")
    for p in range(d1):
        for s in range(d1):
            lhs = t.b01_vec(t.mu1[p], _basis(d1, s))
            rhs = vneg(t.b01_vec(t.mu1[s], _basis(d1, p)))
            res = [a - b for a, b in zip(lhs, rhs)]
            if not vis_zero(res):
                cond.add((p, s), res)

    cond = report.new_check("condition(iii)")
    for i, j, k in combinations(range(d0), 3):
        lhs = t.mu1_vec(t.mu3[i][j][k])
        ei, ej, ek = (_basis(d0, x) for x in (i, j, k))
        rhs = t.b00(ei, t.b00(ej, ek))
        vaccum(rhs, 1, t.b00(ej, t.b00(ek, ei)))
        vaccum(rhs, 1, t.b00(ek, t.b00(ei, ej)))
        res = [a - b for a, b in zip(lhs, rhs)]
        if not vis_zero(res):
            cond.add((i, j, k), res)

    cond = report.new_check("condition(iv)")
    for i in range(d0):
        for j in range(d0):
            for p in range(d1):
                lhs = t.mu3_vec(_basis(d0, i), _basis(d0, j), t.mu1[p])
                rhs = t.b01(i, t.b01(j, _basis(d1, p)))
                # [y, [v, x]] = -[y, [x, v]]
                vaccum(rhs, -1, t.b01(j, t.b01(i, _basis(d1, p))))
                # [v, [x, y]] = -[[x,y], v]
                vaccum(rhs, -1, t.b01_vec(t.bracket00[i][j], _basis(d1, p)))
                res = [a - b for a, b in zip(lhs, rhs)]
                if not vis_zero(res):
                    cond.add((i, j, p), res)

    cond = report.new_check("condition(v)")
    for i, j, k, l in combinations(range(d0), 4):
        basis_v = [_basis(d0, x) for x in (i, j, k, l)]
        x, y, z, zp = basis_v
        lhs = t.b01(i, t.mu3[j][k][l])
        vaccum(lhs, -1, t.b01(j, t.mu3[i][k][l]))
        vaccum(lhs, 1, t.b01(k, t.mu3[i][j][l]))
        vaccum(lhs, -1, t.b01(l, t.mu3[i][j][k]))
        rhs = t.mu3_vec(t.b00(x, y), z, zp)
        vaccum(rhs, -1, t.mu3_vec(t.b00(x, z), y, zp))
        vaccum(rhs, 1, t.mu3_vec(t.b00(x, zp), y, z))
        vaccum(rhs, 1, t.mu3_vec(t.b00(y, z), x, zp))
        vaccum(rhs, -1, t.mu3_vec(t.b00(y, zp), x, z))
        vaccum(rhs, 1, t.mu3_vec(t.b00(z, zp), x, y))
        res = [a - b for a, b in zip(lhs, rhs)]
        if not vis_zero(res):
            cond.add((i, j, k, l), res)
    return report


class SkeletalRep:
    """Representation data (V1 -> V0, r2, r3) of a skeletal structure.

    r2 has three blocks: r00 (g0 on V0), r01 (g0 on V1), r10 (g1 x V0 -> V1);
    r3 is dense trilinear g0 x g0 x V0 -> V1, skew in the first two slots.
    """

    __slots__ = ("dim_v0", "dim_v1", "r00", "r01", "r10", "r3")

    def __init__(self, dim_v0, dim_v1, r00, r01, r10, r3):
        self.dim_v0 = dim_v0
        self.dim_v1 = dim_v1
        self.r00 = [[list(v) for v in row] for row in r00]
        self.r01 = [[list(v) for v in row] for row in r01]
        self.r10 = [[list(v) for v in row] for row in r10]
        self.r3 = [[[list(v) for v in row] for row in plane] for plane in r3]

    @classmethod
    def zero(cls, t: TwoTermLInfinity, dim_v0, dim_v1):
        return cls(
            dim_v0, dim_v1,
            [[vzero(dim_v0) for _ in range(dim_v0)] for _ in range(t.dim0)],
            [[vzero(dim_v1) for _ in range(dim_v1)] for _ in range(t.dim0)],
            [[vzero(dim_v1) for _ in range(dim_v0)] for _ in range(t.dim1)],
            [
                [[vzero(dim_v1) for _ in range(dim_v0)] for _ in range(t.dim0)]
                for _ in range(t.dim0)
            ],
        )

    @classmethod
    def adjoint(cls, t: TwoTermLInfinity) -> "SkeletalRep":
        """The structure acting on itself: r2 = brackets, r3 = mu3."""
        r10 = [
            [vneg(t.bracket01[i][p]) for i in range(t.dim0)]
            for p in range(t.dim1)
        ]
        # r10[p][i] = [v_p, e_i] = -[e_i, v_p]
        return cls(
            t.dim0, t.dim1,
            t.bracket00, t.bracket01, r10, t.mu3,
        )

    def act00(self, i, v):
        out = vzero(self.dim_v0)
        for u, c in enumerate(v):
            if c:
                vaccum(out, c, self.r00[i][u])
        return out

    def act00_vec(self, x, v):
        out = vzero(self.dim_v0)
        for i, c in enumerate(x):
            if c:
                vaccum(out, c, self.act00(i, v))
        return out

    def act01(self, i, v):
        out = vzero(self.dim_v1)
        for u, c in enumerate(v):
            if c:
                vaccum(out, c, self.r01[i][u])
        return out

    def r3_vec(self, x, y, v):
        out = vzero(self.dim_v1)
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for u, c in enumerate(v):
                    if c:
                        vaccum(out, a * b * c, self.r3[i][j][u])
        return out


def validate_skeletal_rep(t: TwoTermLInfinity, r: SkeletalRep) -> ValidationReport:
    """The four representation identities for a skeletal structure."""
    if not t.is_skeletal:
        raise InvalidInput("representation identities assume a skeletal structure")
    report = ValidationReport("skeletal representation")
    d0 = t.dim0

    check = report.new_check("rep(1): r3 skew")
    for i in range(d0):
        for j in range(d0):
            for u in range(r.dim_v0):
                res = [a + b for a, b in zip(r.r3[i][j][u], r.r3[j][i][u])]
                if not vis_zero(res):
                    check.add((i, j, u), res)

    check = report.new_check("rep(2): action law on V0")
    for i in range(d0):
        for j in range(i + 1, d0):
            for u in range(r.dim_v0):
                lhs = r.act00(i, r.r00[j][u])
                vaccum(lhs, -1, r.act00(j, r.r00[i][u]))
                vaccum(lhs, -1, r.act00_vec(t.bracket00[i][j], _basis(r.dim_v0, u)))
                if not vis_zero(lhs):
                    check.add((i, j, u), lhs)

    check = report.new_check("rep(3): action law on V1")
    for i in range(d0):
        for j in range(i + 1, d0):
            for u in range(r.dim_v1):
                lhs = r.act01(i, r.r01[j][u])
                vaccum(lhs, -1, r.act01(j, r.r01[i][u]))
                bracket = t.bracket00[i][j]
                inner = vzero(r.dim_v1)
                for k, c in enumerate(bracket):
                    if c:
                        vaccum(inner, c, r.r01[k][u])
                vaccum(lhs, -1, inner)
                if not vis_zero(lhs):
                    check.add((i, j, u), lhs)

    check = report.new_check("rep(4): trilinear coherence")
    for i, j, k in combinations(range(d0), 3):
        x, y, z = (_basis(d0, s) for s in (i, j, k))
        for u in range(r.dim_v0):
            v = _basis(r.dim_v0, u)
            lhs = r.act01(i, r.r3[j][k][u])
            vaccum(lhs, -1, r.act01(j, r.r3[i][k][u]))
            vaccum(lhs, 1, r.act01(k, r.r3[i][j][u]))
            mu3v = t.mu3[i][j][k]
            inner = vzero(r.dim_v1)
            for p, c in enumerate(mu3v):
                if c:
                    vaccum(inner, c, r.r10[p][u])
            vaccum(lhs, 1, inner)
            rhs = r.r3_vec(t.bracket00[i][j], z, v)
            vaccum(rhs, -1, r.r3_vec(t.bracket00[i][k], y, v))
            vaccum(rhs, 1, r.r3_vec(y, z, r.r00[i][u]))
            vaccum(rhs, 1, r.r3_vec(t.bracket00[j][k], x, v))
            vaccum(rhs, -1, r.r3_vec(x, z, r.r00[j][u]))
            vaccum(rhs, 1, r.r3_vec(x, y, r.r00[k][u]))
            res = [a - b for a, b in zip(lhs, rhs)]
            if not vis_zero(res):
                check.add((i, j, k, u), res)
    return report


class SkeletalMatchedPair:
    """Two skeletal structures with mutual two- and three-slot actions.

    rho2 blocks: r00 (g0 x h0 -> h0), r01 (g0 x h1 -> h1), r10 (g1 x h0 -> h1);
    rho3: g0 x g0 x h0 -> h1 dense, skew in the g0 slots; psi blocks mirror
    them with g and h exchanged.
    """

    __slots__ = ("G", "H", "rho2_00", "rho2_01", "rho2_10", "rho3",
                 "psi2_00", "psi2_01", "psi2_10", "psi3")

    def __init__(self, G, H, rho2_00, rho2_01, rho2_10, rho3,
                 psi2_00, psi2_01, psi2_10, psi3):
        self.G = G
        self.H = H
        self.rho2_00 = [[list(v) for v in row] for row in rho2_00]
        self.rho2_01 = [[list(v) for v in row] for row in rho2_01]
        self.rho2_10 = [[list(v) for v in row] for row in rho2_10]
        self.rho3 = [[[list(v) for v in row] for row in plane] for plane in rho3]
        self.psi2_00 = [[list(v) for v in row] for row in psi2_00]
        self.psi2_01 = [[list(v) for v in row] for row in psi2_01]
        self.psi2_10 = [[list(v) for v in row] for row in psi2_10]
        self.psi3 = [[[list(v) for v in row] for row in plane] for plane in psi3]

    def rho_rep(self) -> SkeletalRep:
        return SkeletalRep(self.H.dim0, self.H.dim1,
                           self.rho2_00, self.rho2_01, self.rho2_10, self.rho3)

    def psi_rep(self) -> SkeletalRep:
        return SkeletalRep(self.G.dim0, self.G.dim1,
                           self.psi2_00, self.psi2_01, self.psi2_10, self.psi3)

    def tensors_equal(self, other) -> bool:
        return (
            self.G.tensors_equal(other.G) and self.H.tensors_equal(other.H)
            and self.rho2_00 == other.rho2_00 and self.rho2_01 == other.rho2_01
            and self.rho2_10 == other.rho2_10 and self.rho3 == other.rho3
            and self.psi2_00 == other.psi2_00 and self.psi2_01 == other.psi2_01
            and self.psi2_10 == other.psi2_10 and self.psi3 == other.psi3
        )


@dataclass
class SkeletalTriple:
    """A matched pair, a representation on (g1, h1), and a cocycle (F1, 0, F3)."""

    mp: MatchedPair
    rep: MPRepresentation
    cocycle: MPCochain


def assemble_triple(s: SkeletalMatchedPair) -> SkeletalTriple:
    """Unpack the degree-0/degree-1 data into (pair, representation, cochain).

    No validity is assumed; ``skeletal_to_triple`` adds the checks.  The
    cochain components are

      F1 = (mu3, rho3-slots)   in bidegree 2|0,
      F3 = (psi3-slots, nu3)   in bidegree 0|2,

    with F1(x,y;k) = rho3(x,y,k) and F3(x;h,k) = psi3(h,k,x).
    """
    G, H = s.G, s.H
    m, n = G.dim0, H.dim0
    p, q = G.dim1, H.dim1
    mp = MatchedPair(G.degree0_algebra(), H.degree0_algebra(),
                     s.rho2_00, s.psi2_00)
    rep = MPRepresentation(
        mp, p, q,
        G.bracket01,          # g0 acting on g1
        s.psi2_01,            # h0 acting on g1
        s.rho2_01,            # g0 acting on h1
        H.bracket01,          # h0 acting on h1
        s.rho2_10,            # alpha: g1 x h0 -> h1
        s.psi2_10,            # beta: h1 x g0 -> g1
    )
    F = MPCochain(3, m, n, p, q)
    f1 = F.component(1)
    for i, j, k in combinations(range(m), 3):
        vec = G.mu3[i][j][k]
        if not vis_zero(vec):
            f1.part_v[((i, j, k), ())] = list(vec)
    for i in range(m):
        for j in range(i + 1, m):
            for a in range(n):
                vec = s.rho3[i][j][a]
                if not vis_zero(vec):
                    f1.part_w[((i, j), (a,))] = list(vec)
    f3 = F.component(3)
    for a, b, c in combinations(range(n), 3):
        vec = H.mu3[a][b][c]
        if not vis_zero(vec):
            f3.part_w[((), (a, b, c))] = list(vec)
    for a in range(n):
        for b in range(a + 1, n):
            for i in range(m):
                vec = s.psi3[a][b][i]
                if not vis_zero(vec):
                    f3.part_v[((i,), (a, b))] = list(vec)
    return SkeletalTriple(mp, rep, F)


def assemble_skeletal(t: SkeletalTriple) -> SkeletalMatchedPair:
    """Inverse packing of ``assemble_triple``; no validity assumed."""
    mp, rep, F = t.mp, t.rep, t.cocycle
    m, n = mp.dim_g, mp.dim_h
    p, q = rep.dims
    if F.degree != 3:
        raise ShapeMismatch("the cochain must have degree 3")
    f1, f2, f3 = F.component(1), F.component(2), F.component(3)
    if not f2.is_zero():
        raise NonzeroMiddleComponent("the middle component must vanish")

    mu3 = {}
    for (gi, hj), vec in f1.part_v.items():
        mu3[gi] = vec
    G = TwoTermLInfinity.from_sparse(
        m, p,
        bracket00={(i, j): mp.g.c[i][j] for i in range(m) for j in range(i + 1, m)},
        bracket01={(i, u): rep.rho_v[i][u] for i in range(m) for u in range(p)},
        mu3=mu3,
    )
    nu3 = {}
    for (gi, hj), vec in f3.part_w.items():
        nu3[hj] = vec
    H = TwoTermLInfinity.from_sparse(
        n, q,
        bracket00={(a, b): mp.h.c[a][b] for a in range(n) for b in range(a + 1, n)},
        bracket01={(a, w): rep.psi_w[a][w] for a in range(n) for w in range(q)},
        mu3=nu3,
    )
    rho3 = [[[vzero(q) for _ in range(n)] for _ in range(m)] for _ in range(m)]
    for (gi, hj), vec in f1.part_w.items():
        i, j = gi
        a = hj[0]
        rho3[i][j][a] = list(vec)
        rho3[j][i][a] = vneg(vec)
    psi3 = [[[vzero(p) for _ in range(m)] for _ in range(n)] for _ in range(n)]
    for (gi, hj), vec in f3.part_v.items():
        a, b = hj
        i = gi[0]
        psi3[a][b][i] = list(vec)
        psi3[b][a][i] = vneg(vec)
    return SkeletalMatchedPair(
        G, H,
        mp.rho, rep.rho_w, rep.alpha, rho3,
        mp.psi, rep.psi_v, rep.beta, psi3,
    )


def validate_skeletal_matched_pair(s: SkeletalMatchedPair) -> ValidationReport:
    """Full per-identity report: both skeletal structures, both
    representations, the six mixed identities, and the four cubic
    compatibilities."""
    report = ValidationReport("skeletal matched pair")
    G, H = s.G, s.H
    m, n = G.dim0, H.dim0
    p, q = G.dim1, H.dim1

    check = report.new_check("G skeletal and coherent")
    if not G.is_skeletal:
        check.add(("mu1",), "nonzero differential")
    for c in validate_two_term(G).checks:
        check.witnesses.extend(c.witnesses)
    check = report.new_check("H skeletal and coherent")
    if not H.is_skeletal:
        check.add(("mu1",), "nonzero differential")
    for c in validate_two_term(H).checks:
        check.witnesses.extend(c.witnesses)

    if not report.ok:
        return report

    check = report.new_check("rho representation of G")
    for c in validate_skeletal_rep(G, s.rho_rep()).checks:
        check.witnesses.extend(c.witnesses)
    check = report.new_check("psi representation of H")
    for c in validate_skeletal_rep(H, s.psi_rep()).checks:
        check.witnesses.extend(c.witnesses)

    rho = s.rho_rep()
    psi = s.psi_rep()

    # mixed(1): rho2([x, v], h) = rho2(x, rho2(v, h)) - rho2(v, rho2(x, h))
    check = report.new_check("mixed(1)")
    for i in range(m):
        for u in range(p):
            for a in range(n):
                bracket = G.bracket01[i][u]  # [x, v] in g1
                lhs = vzero(q)
                for pp, c in enumerate(bracket):
                    if c:
                        vaccum(lhs, c, s.rho2_10[pp][a])
                rhs = vzero(q)
                inner = s.rho2_10[u][a]  # rho2(v, h) in h1
                for w, c in enumerate(inner):
                    if c:
                        vaccum(rhs, c, s.rho2_01[i][w])
                inner = s.rho2_00[i][a]  # rho2(x, h) in h0
                sub = vzero(q)
                for b, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.rho2_10[u][b])
                vaccum(rhs, -1, sub)
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((i, u, a), res)

    # mixed(2): psi2([h, w], x) = psi2(h, psi2(w, x)) - psi2(w, psi2(h, x))
    check = report.new_check("mixed(2)")
    for a in range(n):
        for w in range(q):
            for i in range(m):
                bracket = H.bracket01[a][w]
                lhs = vzero(p)
                for ww, c in enumerate(bracket):
                    if c:
                        vaccum(lhs, c, s.psi2_10[ww][i])
                rhs = vzero(p)
                inner = s.psi2_10[w][i]
                for u, c in enumerate(inner):
                    if c:
                        vaccum(rhs, c, s.psi2_01[a][u])
                inner = s.psi2_00[a][i]
                sub = vzero(p)
                for j, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.psi2_10[w][j])
                vaccum(rhs, -1, sub)
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((a, w, i), res)

    # mixed(3): rho2(x, [h, w]) = [rho2(x,h), w] + [h, rho2(x,w)]
    #           + rho2(psi2(w,x), h) - rho2(psi2(h,x), w)
    check = report.new_check("mixed(3)")
    for i in range(m):
        for a in range(n):
            for w in range(q):
                lhs = vzero(q)
                bracket = H.bracket01[a][w]
                for ww, c in enumerate(bracket):
                    if c:
                        vaccum(lhs, c, s.rho2_01[i][ww])
                rhs = H.b01_vec(s.rho2_00[i][a], _basis(q, w))
                vaccum(rhs, 1, H.b01(a, s.rho2_01[i][w]))
                inner = s.psi2_10[w][i]  # psi2(w, x) in g1
                sub = vzero(q)
                for u, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.rho2_10[u][a])
                vaccum(rhs, 1, sub)
                inner = s.psi2_00[a][i]  # psi2(h, x) in g0
                sub = vzero(q)
                for j, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.rho2_01[j][w])
                vaccum(rhs, -1, sub)
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((i, a, w), res)

    # mixed(4): rho2(v, [h, k]) = [rho2(v,h), k] + [h, rho2(v,k)]
    #           + rho2(psi2(k,v), h) - rho2(psi2(h,v), k)
    check = report.new_check("mixed(4)")
    for u in range(p):
        for a in range(n):
            for b in range(a + 1, n):
                lhs = vzero(q)
                bracket = H.bracket00[a][b]
                for bb, c in enumerate(bracket):
                    if c:
                        vaccum(lhs, c, s.rho2_10[u][bb])
                rhs = vneg(H.b01(b, s.rho2_10[u][a]))
                vaccum(rhs, 1, H.b01(a, s.rho2_10[u][b]))
                inner = s.psi2_01[b][u]  # psi2(k, v) in g1
                sub = vzero(q)
                for uu, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.rho2_10[uu][a])
                vaccum(rhs, 1, sub)
                inner = s.psi2_01[a][u]
                sub = vzero(q)
                for uu, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.rho2_10[uu][b])
                vaccum(rhs, -1, sub)
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((u, a, b), res)

    # mixed(5): psi2(h, [x, v]) = [psi2(h,x), v] + [x, psi2(h,v)]
    #           + psi2(rho2(v,h), x) - psi2(rho2(x,h), v)
    check = report.new_check("mixed(5)")
    for a in range(n):
        for i in range(m):
            for u in range(p):
                lhs = vzero(p)
                bracket = G.bracket01[i][u]
                for uu, c in enumerate(bracket):
                    if c:
                        vaccum(lhs, c, s.psi2_01[a][uu])
                rhs = G.b01_vec(s.psi2_00[a][i], _basis(p, u))
                vaccum(rhs, 1, G.b01(i, s.psi2_01[a][u]))
                inner = s.rho2_10[u][a]  # rho2(v, h) in h1
                sub = vzero(p)
                for w, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.psi2_10[w][i])
                vaccum(rhs, 1, sub)
                inner = s.rho2_00[i][a]
                sub = vzero(p)
                for b, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.psi2_01[b][u])
                vaccum(rhs, -1, sub)
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((a, i, u), res)

    # mixed(6): psi2(w, [x, y]) = [psi2(w,x), y] + [x, psi2(w,y)]
    #           + psi2(rho2(y,w), x) - psi2(rho2(x,w), y)
    check = report.new_check("mixed(6)")
    for w in range(q):
        for i in range(m):
            for j in range(i + 1, m):
                lhs = vzero(p)
                bracket = G.bracket00[i][j]
                for jj, c in enumerate(bracket):
                    if c:
                        vaccum(lhs, c, s.psi2_10[w][jj])
                rhs = vneg(G.b01(j, s.psi2_10[w][i]))
                vaccum(rhs, 1, G.b01(i, s.psi2_10[w][j]))
                inner = s.rho2_01[j][w]  # rho2(y, w) in h1
                sub = vzero(p)
                for ww, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.psi2_10[ww][i])
                vaccum(rhs, 1, sub)
                inner = s.rho2_01[i][w]
                sub = vzero(p)
                for ww, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.psi2_10[ww][j])
                vaccum(rhs, -1, sub)
                res = [x - y for x, y in zip(lhs, rhs)]
                if not vis_zero(res):
                    check.add((w, i, j), res)

    # compat(skel1): [x, psi3(h,k,y)] - [y, psi3(h,k,x)] - psi3(h,k,[x,y])
    #   - psi3(rho2(x,h),k,y) + psi3(rho2(x,k),h,y)
    #   + psi3(rho2(y,h),k,x) - psi3(rho2(y,k),h,x) = 0
    check = report.new_check("compat(skel1)")
    for i in range(m):
        for j in range(i + 1, m):
            for a in range(n):
                for b in range(a + 1, n):
                    res = G.b01(i, s.psi3[a][b][j])
                    vaccum(res, -1, G.b01(j, s.psi3[a][b][i]))
                    bracket = G.bracket00[i][j]
                    sub = vzero(p)
                    for k, c in enumerate(bracket):
                        if c:
                            vaccum(sub, c, s.psi3[a][b][k])
                    vaccum(res, -1, sub)
                    vaccum(res, -1, psi.r3_vec(s.rho2_00[i][a], _basis(n, b), _basis(m, j)))
                    vaccum(res, 1, psi.r3_vec(s.rho2_00[i][b], _basis(n, a), _basis(m, j)))
                    vaccum(res, 1, psi.r3_vec(s.rho2_00[j][a], _basis(n, b), _basis(m, i)))
                    vaccum(res, -1, psi.r3_vec(s.rho2_00[j][b], _basis(n, a), _basis(m, i)))
                    if not vis_zero(res):
                        check.add((i, j, a, b), res)

    # compat(skel2): rho2(x, nu3(h,k,k')) + rho2(psi3(k,k',x), h)
    #   - rho2(psi3(h,k',x), k) + rho2(psi3(h,k,x), k')
    #   - nu3(rho2(x,h),k,k') + nu3(rho2(x,k),h,k') - nu3(rho2(x,k'),h,k) = 0
    check = report.new_check("compat(skel2)")
    for i in range(m):
        for a, b, c3 in combinations(range(n), 3):
            res = vzero(q)
            vec = H.mu3[a][b][c3]
            for w, c in enumerate(vec):
                if c:
                    vaccum(res, c, s.rho2_01[i][w])
            for (pair, other) in (((b, c3), a), ((a, c3), b), ((a, b), c3)):
                inner = s.psi3[pair[0]][pair[1]][i]
                sub = vzero(q)
                for u, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.rho2_10[u][other])
                sign = 1 if pair == (b, c3) or pair == (a, b) else -1
                vaccum(res, sign, sub)
            ha, hb, hc = (_basis(n, s3) for s3 in (a, b, c3))
            vaccum(res, -1, H.mu3_vec(s.rho2_00[i][a], hb, hc))
            vaccum(res, 1, H.mu3_vec(s.rho2_00[i][b], ha, hc))
            vaccum(res, -1, H.mu3_vec(s.rho2_00[i][c3], ha, hb))
            if not vis_zero(res):
                check.add((i, a, b, c3), res)

    # compat(skel3): mirror of skel1
    check = report.new_check("compat(skel3)")
    for a in range(n):
        for b in range(a + 1, n):
            for i in range(m):
                for j in range(i + 1, m):
                    res = H.b01(a, s.rho3[i][j][b])
                    vaccum(res, -1, H.b01(b, s.rho3[i][j][a]))
                    bracket = H.bracket00[a][b]
                    sub = vzero(q)
                    for k, c in enumerate(bracket):
                        if c:
                            vaccum(sub, c, s.rho3[i][j][k])
                    vaccum(res, -1, sub)
                    vaccum(res, -1, rho.r3_vec(s.psi2_00[a][i], _basis(m, j), _basis(n, b)))
                    vaccum(res, 1, rho.r3_vec(s.psi2_00[a][j], _basis(m, i), _basis(n, b)))
                    vaccum(res, 1, rho.r3_vec(s.psi2_00[b][i], _basis(m, j), _basis(n, a)))
                    vaccum(res, -1, rho.r3_vec(s.psi2_00[b][j], _basis(m, i), _basis(n, a)))
                    if not vis_zero(res):
                        check.add((a, b, i, j), res)

    # compat(skel4): mirror of skel2
    check = report.new_check("compat(skel4)")
    for a in range(n):
        for i, j, k in combinations(range(m), 3):
            res = vzero(p)
            vec = G.mu3[i][j][k]
            for u, c in enumerate(vec):
                if c:
                    vaccum(res, c, s.psi2_01[a][u])
            for (pair, other) in (((j, k), i), ((i, k), j), ((i, j), k)):
                inner = s.rho3[pair[0]][pair[1]][a]
                sub = vzero(p)
                for w, c in enumerate(inner):
                    if c:
                        vaccum(sub, c, s.psi2_10[w][other])
                sign = 1 if pair == (j, k) or pair == (i, j) else -1
                vaccum(res, sign, sub)
            xi, xj, xk = (_basis(m, s3) for s3 in (i, j, k))
            vaccum(res, -1, G.mu3_vec(s.psi2_00[a][i], xj, xk))
            vaccum(res, 1, G.mu3_vec(s.psi2_00[a][j], xi, xk))
            vaccum(res, -1, G.mu3_vec(s.psi2_00[a][k], xi, xj))
            if not vis_zero(res):
                check.add((a, i, j, k), res)

    return report


def skeletal_to_triple(s: SkeletalMatchedPair) -> SkeletalTriple:
    """Validated direction of the correspondence; the cochain comes out closed."""
    validation = validate_skeletal_matched_pair(s)
    if not validation.ok:
        raise InvalidInput("skeletal matched pair fails validation")
    triple = assemble_triple(s)
    image = delta_mpl_coeff(triple.mp, triple.rep, triple.cocycle)
    if not image.is_zero():
        raise NotACocycle("assembled degree-3 cochain is not closed")
    return triple


def triple_to_skeletal(t: SkeletalTriple) -> SkeletalMatchedPair:
    """Validated reverse direction; the pair comes out coherent."""
    t.mp.require_valid()
    t.rep.require_valid()
    if t.cocycle.degree != 3:
        raise ShapeMismatch("the cochain must have degree 3")
    if not t.cocycle.component(2).is_zero():
        raise NonzeroMiddleComponent("the middle component must vanish")
    image = delta_mpl_coeff(t.mp, t.rep, t.cocycle)
    if not image.is_zero():
        raise NotACocycle("the degree-3 cochain is not closed")
    out = assemble_skeletal(t)
    validation = validate_skeletal_matched_pair(out)
    if not validation.ok:
        raise InvalidInput("reconstructed skeletal pair fails validation")
    return out

"""Skew-symmetric multilinear maps and the graded bracket on them.

A ``SkewMultiMap`` of arity k on a d-dimensional space stores one
codomain coefficient vector per strictly increasing k-tuple of basis
indices; evaluation on arbitrary tuples multiplies by the sign of the
sorting permutation and vanishes on repeated indices.  Canonical storage
makes equality of maps a coefficient comparison.

The bracket implemented here is

    [f, g] = i_f g - (-1)^{mn} i_g f,      m = arity(f) - 1, n = arity(g) - 1,

    (i_f g)(x_1, ..., x_{m+n+1}) =
        sum over (m+1, n)-shuffles s of sign(s) *
            g(f(x_{s(1)}, ..., x_{s(m+1)}), x_{s(m+2)}, ..., x_{s(m+n+1)}),

whose square-zero elements of arity 2 are exactly the Lie brackets.
Arity-0 maps (plain vectors) are allowed: i_f g plugs the vector into
the first slot of g, and i_g f of an arity-0 f is zero.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import ArityMismatch, SpaceMismatch
from .scalars import vaccum, vis_zero, vzero


def sort_sign(idx):
    """(sign, sorted tuple) for the permutation sorting idx; sign 0 on repeats."""
    items = list(idx)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(items)):
        if items[i - 1] == items[i]:
            return 0, tuple(items)
    return sign, tuple(items)


@lru_cache(maxsize=None)
def shuffles(p: int, q: int):
    """All (p, q)-shuffles of positions 0..p+q-1, lexicographic by first block.

    Each entry is (first_block, second_block, sign).
    """
    n = p + q
    out = []
    for first in combinations(range(n), p):
        rest = tuple(i for i in range(n) if i not in first)
        sign = (-1) ** (sum(first) - p * (p - 1) // 2)
        out.append((first, rest, sign))
    return tuple(out)


class SkewMultiMap:
    """Skew multilinear map Lambda^arity(k^dim) -> k^codim."""

    __slots__ = ("arity", "dim", "codim", "coeffs")

    def __init__(self, arity: int, dim: int, codim: int, coeffs=None):
        self.arity = arity
        self.dim = dim
        self.codim = codim
        self.coeffs = {}
        if coeffs:
            for key, vec in coeffs.items():
                key = tuple(key)
                if len(key) != arity:
                    raise ArityMismatch(f"key {key} does not have arity {arity}")
                if any(not (0 <= i < dim) for i in key):
                    raise ArityMismatch(f"key {key} out of range for dim {dim}")
                if any(key[i] >= key[i + 1] for i in range(len(key) - 1)):
                    raise ArityMismatch(f"key {key} is not strictly increasing")
                vec = list(vec)
                if len(vec) != codim:
                    raise ArityMismatch("coefficient vector has wrong length")
                if not vis_zero(vec):
                    self.coeffs[key] = vec

    @classmethod
    def zero(cls, arity, dim, codim):
        return cls(arity, dim, codim)

    def evaluate(self, idx):
        """Value on basis vectors e_{idx[0]}, ..., possibly unsorted or repeating."""
        if len(idx) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(idx)}")
        sign, key = sort_sign(idx)
        if sign == 0:
            return vzero(self.codim)
        vec = self.coeffs.get(key)
        if vec is None:
            return vzero(self.codim)
        return [sign * x for x in vec]

    def evaluate_mixed(self, args):
        """Evaluate with each argument either a basis index or a coefficient vector."""
        for pos, a in enumerate(args):
            if not isinstance(a, int):
                acc = vzero(self.codim)
                for idx, c in enumerate(a):
                    if c:
                        inner = self.evaluate_mixed(
                            args[:pos] + (idx,) + args[pos + 1:]
                        )
                        vaccum(acc, c, inner)
                return acc
        return self.evaluate(tuple(args))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, SkewMultiMap):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.dim == other.dim
            and self.codim == other.codim
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        self._check_same_shape(other)
        out = dict((k, list(v)) for k, v in self.coeffs.items())
        for k, v in other.coeffs.items():
            if k in out:
                out[k] = [a + b for a, b in zip(out[k], v)]
            else:
                out[k] = list(v)
        return SkewMultiMap(self.arity, self.dim, self.codim, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SkewMultiMap":
        return SkewMultiMap(
            self.arity, self.dim, self.codim,
            {k: [c * x for x in v] for k, v in self.coeffs.items()},
        )

    def _check_same_shape(self, other):
        if (self.arity, self.dim, self.codim) != (other.arity, other.dim, other.codim):
            raise SpaceMismatch("maps have different arity or spaces")

    def __repr__(self):
        return f"SkewMultiMap(arity={self.arity}, dim={self.dim}, nonzero={len(self.coeffs)})"


def insertion(f: SkewMultiMap, g: SkewMultiMap) -> SkewMultiMap:
    """i_f g: plug f into the first slot of g, summed over shuffles."""
    if f.dim != g.dim:
        raise SpaceMismatch("insertion requires maps on the same space")
    if f.codim != g.dim:
        raise SpaceMismatch("codomain of f must feed the slots of g")
    out_arity = f.arity + g.arity - 1
    if g.arity == 0 or out_arity < 0:
        return SkewMultiMap.zero(max(out_arity, 0), f.dim, g.codim)
    coeffs = {}
    for key in combinations(range(f.dim), out_arity):
        acc = vzero(g.codim)
        for first, rest, sgn in shuffles(f.arity, g.arity - 1):
            sub = tuple(key[i] for i in first)
            vec = f.coeffs.get(sub)
            if vec is None:
                continue
            tail = tuple(key[i] for i in rest)
            for k, ck in enumerate(vec):
                if ck:
                    vaccum(acc, sgn * ck, g.evaluate((k,) + tail))
        if not vis_zero(acc):
            coeffs[key] = acc
    return SkewMultiMap(out_arity, f.dim, g.codim, coeffs)


def nr_bracket(f: SkewMultiMap, g: SkewMultiMap) -> SkewMultiMap:
    """[f, g] = i_f g - (-1)^{mn} i_g f on maps from wedge powers of one space."""
    if f.dim != g.dim or f.codim != f.dim or g.codim != g.dim:
        raise SpaceMismatch("bracket needs endomorphism-valued maps on one space")
    m = f.arity - 1
    n = g.arity - 1
    term = insertion(f, g)
    other = insertion(g, f)
    if (m * n) % 2:
        return term + other
    return term - other

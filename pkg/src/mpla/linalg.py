"""Dense exact linear algebra over the rationals.

Ranks are computed by fraction-free Bareiss elimination on a
denominator-cleared integer copy; intermediate entries stay bounded by
minors of the input, which keeps the combinatorially large coboundary
matrices cheap.  Kernel bases, solving, and inversion use ordinary
fraction Gauss-Jordan (they need actual vectors, not just counts).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch, NotAComplex


class Matrix:
    """Immutable-by-convention dense matrix of Fractions, row major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.entries = [[Fraction(0)] * cols for _ in range(rows)]
        else:
            if len(entries) != rows or any(len(r) != cols for r in entries):
                raise DimensionMismatch(
                    f"entries do not fill a {rows}x{cols} matrix"
                )
            self.entries = [[Fraction(x) for x in r] for r in entries]

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = cls(n, n)
        for i in range(n):
            m.entries[i][i] = Fraction(1)
        return m

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        n_cols = len(rows[0]) if rows else 0
        return cls(len(rows), n_cols, rows)

    @classmethod
    def from_columns(cls, cols) -> "Matrix":
        cols = [list(c) for c in cols]
        if not cols:
            return cls(0, 0)
        n_rows = len(cols[0])
        return cls(n_rows, len(cols), [[c[i] for c in cols] for i in range(n_rows)])

    def column(self, j: int):
        return [self.entries[i][j] for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = Matrix(self.rows, other.cols)
        for i in range(self.rows):
            row = self.entries[i]
            for k in range(self.cols):
                a = row[k]
                if not a:
                    continue
                other_row = other.entries[k]
                out_row = out.entries[i]
                for j in range(other.cols):
                    if other_row[j]:
                        out_row[j] += a * other_row[j]
        return out

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        return [
            sum((self.entries[i][j] * v[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        ]

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def rank(m: Matrix) -> int:
    """Rank over the rationals, by fraction-free Bareiss elimination."""
    rows, cols = m.rows, m.cols
    if rows == 0 or cols == 0:
        return 0
    a = []
    for row in m.entries:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        a.append([int(x * scale) for x in row])
    prev = 1
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            # rows with a zero leading entry still get rescaled by pivot/prev;
            # that keeps every later Bareiss division exact
            for j in range(c + 1, cols):
                num = a[r][c] * a[i][j] - a[i][c] * a[r][j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("Bareiss division was not exact")
                a[i][j] = q
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == rows:
            break
    return r


def kernel_dim(m: Matrix) -> int:
    return m.cols - rank(m)


def cohomology_dim(d_out: Matrix, d_in: Matrix) -> int:
    """dim ker(d_out) - rank(d_in), for two consecutive coboundaries.

    Raises DimensionMismatch if the shapes do not chain and NotAComplex
    if d_out * d_in != 0.
    """
    if d_out.cols != d_in.rows:
        raise DimensionMismatch(
            f"d_out has {d_out.cols} columns but d_in has {d_in.rows} rows"
        )
    if not d_out.mul(d_in).is_zero():
        raise NotAComplex("d_out * d_in != 0")
    return kernel_dim(d_out) - rank(d_in)


def _rref(entries, rows, cols):
    """In-place reduced row echelon form; returns the pivot column list."""
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if entries[i][c]:
                piv = i
                break
        if piv is None:
            continue
        entries[r], entries[piv] = entries[piv], entries[r]
        inv = 1 / entries[r][c]
        entries[r] = [x * inv for x in entries[r]]
        for i in range(rows):
            if i != r and entries[i][c]:
                f = entries[i][c]
                entries[i] = [x - f * y for x, y in zip(entries[i], entries[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def kernel_basis(m: Matrix) -> list[list[Fraction]]:
    """A basis of the null space, one vector per free column."""
    entries = [list(row) for row in m.entries]
    pivots = _rref(entries, m.rows, m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -entries[r][free]
        basis.append(v)
    return basis


def solve(m: Matrix, b) -> list[Fraction] | None:
    """Some exact solution of m x = b, or None if the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side length does not match row count")
    aug = [list(row) + [Fraction(b[i])] for i, row in enumerate(m.entries)]
    pivots = _rref(aug, m.rows, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, c in enumerate(pivots):
        x[c] = aug[r][m.cols]
    return x


def invert(m: Matrix) -> Matrix:
    """Exact inverse; raises DimensionMismatch if not square or singular."""
    if m.rows != m.cols:
        raise DimensionMismatch("only square matrices can be inverted")
    n = m.rows
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m.entries)]
    pivots = _rref(aug, n, 2 * n)
    if pivots[:n] != list(range(n)):
        raise DimensionMismatch("matrix is singular")
    return Matrix(n, n, [row[n:] for row in aug])

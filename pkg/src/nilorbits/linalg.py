"""Exact rational matrices.

Entries are :class:`fractions.Fraction`; nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction


class DimensionError(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    """Dense matrix over Q, treated as an immutable value."""

    def __init__(self, rows, ncols: int | None = None):
        self.rows = [[_frac(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise DimensionError("ragged matrix")
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols, nrows: int) -> "RationalMatrix":
        cols = list(cols)
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self.shape == other.shape and self.rows == other.rows
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"RationalMatrix({self.tolist()})"

    def __str__(self):
        cells = [[_fmt(x) for x in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(
            "[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def tolist(self) -> list[list[str]]:
        return [[_fmt(x) for x in row] for row in self.rows]

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.rows]

    def T(self) -> "RationalMatrix":
        return RationalMatrix(
            [self.column(j) for j in range(self.ncols)], self.nrows)

    def __add__(self, other):
        _same_shape(self, other)
        return RationalMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols)

    def __sub__(self, other):
        _same_shape(self, other)
        return RationalMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols)

    def __neg__(self):
        return RationalMatrix([[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix([[c * a for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            return self @ other
        return self.scale(other)

    __rmul__ = scale

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionError(
                f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return RationalMatrix(
            [[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0))
              for c in cols] for r in self.rows],
            other.ncols)

    def apply(self, vec) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise DimensionError("vector length mismatch")
        return [sum((a * b for a, b in zip(r, vec) if a and b), Fraction(0))
                for r in self.rows]

    def __pow__(self, k: int):
        if self.nrows != self.ncols:
            raise DimensionError("power of a non-square matrix")
        result = RationalMatrix.identity(self.nrows)
        for _ in range(k):
            result = result @ self
        return result

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise DimensionError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def rank(self) -> int:
        return rank(self)

    def nullspace(self) -> list[list[Fraction]]:
        return nullspace(self)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _same_shape(a, b):
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")


def commutator(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a @ b - b @ a


def block_diagonal(blocks) -> RationalMatrix:
    blocks = list(blocks)
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    out = [[Fraction(0)] * m for _ in range(n)]
    r = c = 0
    for b in blocks:
        for i in range(b.nrows):
            out[r + i][c:c + b.ncols] = b.rows[i]
        r += b.nrows
        c += b.ncols
    return RationalMatrix(out, m)


def rref(m: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def nullspace(m: RationalMatrix) -> list[list[Fraction]]:
    """Right kernel basis, one vector per free column of the RREF.

    The vector for free column ``f`` has a 1 in position ``f`` and zeros
    in every other free position, so the basis is deterministic.
    """
    rows, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(m: RationalMatrix, rhs) -> list[Fraction] | None:
    """One solution of ``m x = rhs`` (free variables set to 0), or None."""
    aug = RationalMatrix(
        [list(r) + [_frac(b)] for r, b in zip(m.rows, rhs)], m.ncols + 1)
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [Fraction(0)] * m.ncols
    for row, p in zip(rows, pivots):
        x[p] = row[-1]
    return x


def inverse(m: RationalMatrix) -> RationalMatrix:
    n = m.nrows
    if n != m.ncols:
        raise DimensionError("inverse of a non-square matrix")
    aug = RationalMatrix([r + e for r, e in zip(m.rows, RationalMatrix.identity(n).rows)])
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return RationalMatrix([r[n:] for r in rows], n)


def span_basis(vectors, dim: int) -> list[list[Fraction]]:
    """Echelon basis of the span of ``vectors`` in Q^dim."""
    vectors = list(vectors)
    if not vectors:
        return []
    return rref(RationalMatrix(vectors, dim))[0]


def contains(basis, vector) -> bool:
    """Whether ``vector`` lies in the span of ``basis``."""
    if not any(vector):
        return True
    dim = len(vector)
    return len(span_basis(list(basis) + [vector], dim)) == len(span_basis(basis, dim))

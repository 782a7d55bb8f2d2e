"""Brute-force linear algebra ground truth for the orbit combinatorics.

Everything here works directly with explicit nilpotent matrices: Jordan
types are read off rank sequences, closure membership is a rank
comparison, and orbit dimensions come from centralizer nullspaces.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    DimensionError, RationalMatrix, block_diagonal, commutator, inverse, rank,
)
from .partitions import Partition, transpose


class NotNilpotentError(ValueError):
    """Raised when a matrix is not in the nilpotent cone."""


def jordan_block(d: int, sub: bool = False) -> RationalMatrix:
    m = RationalMatrix.zeros(d, d)
    for i in range(d - 1):
        if sub:
            m.rows[i + 1][i] = Fraction(1)
        else:
            m.rows[i][i + 1] = Fraction(1)
    return m


def jordan_nilpotent(lam: Partition) -> RationalMatrix:
    """Block-diagonal nilpotent with superdiagonal Jordan blocks of sizes lam."""
    if not lam.parts:
        return RationalMatrix.zeros(0, 0)
    return block_diagonal(jordan_block(d) for d in lam)


def rank_sequence(x: RationalMatrix) -> list[int]:
    """[rank(X^0), rank(X^1), ..., rank(X^n)]."""
    n = x.nrows
    ranks = [n]
    power = RationalMatrix.identity(n)
    for _ in range(n):
        power = power @ x
        ranks.append(rank(power))
    return ranks


def is_nilpotent(x: RationalMatrix) -> bool:
    if x.nrows != x.ncols:
        return False
    return (x ** x.nrows).is_zero()


def jordan_type(x: RationalMatrix) -> Partition:
    if x.nrows != x.ncols:
        raise DimensionError("Jordan type of a non-square matrix")
    ranks = rank_sequence(x)
    if ranks[-1] != 0:
        raise NotNilpotentError("matrix is not in the nilpotent cone")
    cols = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return transpose(Partition(c for c in cols if c))


def in_orbit_closure(x: RationalMatrix, lam: Partition) -> bool:
    """Rank test: rank(X^k) <= rank(J_lam^k) for all k."""
    n = lam.n
    if x.shape != (n, n):
        raise DimensionError(f"matrix of size {x.shape} vs partition of {n}")
    if not is_nilpotent(x):
        raise NotNilpotentError("matrix is not in the nilpotent cone")
    # rank(J_lam^k) = sum over blocks of max(d - k, 0)
    ranks = rank_sequence(x)
    return all(ranks[k] <= sum(max(d - k, 0) for d in lam) for k in range(1, n))


@dataclass(frozen=True)
class Sl2Triple:
    X: RationalMatrix
    Y: RationalMatrix

    @property
    def H(self) -> RationalMatrix:
        return commutator(self.X, self.Y)

    def check(self) -> bool:
        h = self.H
        return (commutator(h, self.X) == self.X.scale(2)
                and commutator(h, self.Y) == self.Y.scale(-2)
                and self.X.trace() == 0 and self.Y.trace() == 0 and h.trace() == 0
                and is_nilpotent(self.X) and is_nilpotent(self.Y))


def sl2_triple(lam: Partition) -> Sl2Triple:
    """X the Jordan nilpotent, Y with subdiagonal i*(d-i) in each block."""
    blocks = []
    for d in lam:
        y = RationalMatrix.zeros(d, d)
        for i in range(1, d):
            y.rows[i][i - 1] = Fraction(i * (d - i))
        blocks.append(y)
    y = block_diagonal(blocks) if blocks else RationalMatrix.zeros(0, 0)
    return Sl2Triple(jordan_nilpotent(lam), y)


def ad_matrix(x: RationalMatrix) -> RationalMatrix:
    """Matrix of Z -> [Z, X] on gl_n, with Z flattened row-major."""
    n = x.nrows
    rows = []
    for i in range(n):
        for j in range(n):
            # ([Z,X])_{ij} = sum_k Z_ik X_kj - X_ik Z_kj
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[i * n + k] += x.rows[k][j]
                row[k * n + j] -= x.rows[i][k]
            rows.append(row)
    return RationalMatrix(rows, n * n)


def centralizer_dimension(x: RationalMatrix) -> int:
    """Dimension of the centralizer of X in gl_n."""
    n = x.nrows
    return n * n - rank(ad_matrix(x))


def orbit_dimension_by_rank(lam: Partition) -> int:
    """dim O_lam = (n^2 - 1) - (dim gl-centralizer - 1)."""
    n = lam.n
    return (n * n - 1) - (centralizer_dimension(jordan_nilpotent(lam)) - 1)


def random_invertible(n: int, rng: random.Random, height: int = 3) -> RationalMatrix:
    """Random g in GL_n(Z) with small entries (rejection on the determinant)."""
    while True:
        g = RationalMatrix([[rng.randint(-height, height) for _ in range(n)] for _ in range(n)])
        if rank(g) == n:
            return g


def random_conjugate(x: RationalMatrix, rng: random.Random, height: int = 3) -> RationalMatrix:
    g = random_invertible(x.nrows, rng, height)
    return g @ x @ inverse(g)

"""Maffei quiver data for slices S_mu ∩ closure(O_lam), and point-level checks.

Maps are indexed as in the diagram: A_i: C^{v_i} -> C^{v_{i+1}} and
B_i: C^{v_{i+1}} -> C^{v_i} for 1 <= i <= m-2, Gamma_i: C^{w_i} -> C^{v_i}
and Delta_i: C^{v_i} -> C^{w_i} for 1 <= i <= m-1. Python lists hold them
0-based, so ``point.A[0]`` is A_1.

When mu = (1,...,1) we have w = (n, 0, ..., 0) and Gamma_1, Delta_1 play
the roles of A_0: C^n -> C^{v_1} and B_0: C^{v_1} -> C^n.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    DimensionError, RationalMatrix, inverse, nullspace, rank, span_basis,
)
from .oracle import random_invertible
from .partitions import Partition, PartitionError, dominates, multiplicity_vector, transpose


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class QuiverData:
    m: int
    r: tuple[int, ...]
    v: tuple[int, ...]
    w: tuple[int, ...]

    def __post_init__(self):
        if len(self.r) != self.m or len(self.v) != self.m - 1 or len(self.w) != self.m - 1:
            raise QuiverError("inconsistent lengths in quiver data")
        if sum(self.r) != sum((i + 1) * wi for i, wi in enumerate(self.w)):
            raise QuiverError("sum of r must equal sum of i*w_i")
        if any(x < 0 for x in self.v):
            raise QuiverError(f"negative entry in v = {self.v}")

    @property
    def n(self) -> int:
        return sum(self.r)

    def is_mu_trivial(self) -> bool:
        return self.w[0] == self.n and not any(self.w[1:])

    def to_json(self) -> dict:
        return {"m": self.m, "r": list(self.r), "v": list(self.v), "w": list(self.w)}

    @classmethod
    def from_json(cls, data) -> "QuiverData":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["m"], tuple(data["r"]), tuple(data["v"]), tuple(data["w"]))


def default_r(lam: Partition, mu: Partition) -> list[int]:
    """Decreasing column lengths of lam, zero-padded to m = max(lam_1, mu_1 + 1)."""
    cols = list(transpose(lam))
    m = max(lam[0], mu[0] + 1)
    return cols + [0] * (m - len(cols))


def maffei_dims(lam: Partition, mu: Partition, r=None) -> QuiverData:
    if lam.n != mu.n:
        raise PartitionError("partitions of different sizes")
    if not dominates(mu, lam):
        raise QuiverError(f"{mu} is not dominated by {lam}")
    if r is None:
        r = default_r(lam, mu)
    r = [int(x) for x in r]
    m = len(r)
    if sorted((x for x in r if x), reverse=True) != list(transpose(lam)) or min(r, default=0) < 0:
        raise QuiverError(f"r = {r} is not a rearrangement of the column lengths of {lam}")
    if m <= mu[0]:
        raise QuiverError(f"m = {m} must exceed mu_1 = {mu[0]}")
    w = multiplicity_vector(mu, m)
    v = []
    for i in range(1, m):
        cols_mu = sum(min(i, j) * wj for j, wj in enumerate(w, start=1))
        v.append(cols_mu - sum(r[:i]))
    return QuiverData(m, tuple(r), tuple(v), tuple(w))


# -- points -----------------------------------------------------------------

@dataclass
class QuiverPoint:
    data: QuiverData
    A: list[RationalMatrix]
    B: list[RationalMatrix]
    Gamma: list[RationalMatrix]
    Delta: list[RationalMatrix]

    def __post_init__(self):
        d = self.data
        v, w, m = d.v, d.w, d.m
        if len(self.A) != m - 2 or len(self.B) != m - 2:
            raise DimensionError(f"need {m - 2} maps A and B")
        if len(self.Gamma) != m - 1 or len(self.Delta) != m - 1:
            raise DimensionError(f"need {m - 1} maps Gamma and Delta")
        for i in range(m - 2):
            _expect(self.A[i], (v[i + 1], v[i]), f"A_{i + 1}")
            _expect(self.B[i], (v[i], v[i + 1]), f"B_{i + 1}")
        for i in range(m - 1):
            _expect(self.Gamma[i], (v[i], w[i]), f"Gamma_{i + 1}")
            _expect(self.Delta[i], (w[i], v[i]), f"Delta_{i + 1}")

    @classmethod
    def zero(cls, data: QuiverData) -> "QuiverPoint":
        v, w = data.v, data.w
        Z = RationalMatrix.zeros
        return cls(data,
                   [Z(v[i + 1], v[i]) for i in range(data.m - 2)],
                   [Z(v[i], v[i + 1]) for i in range(data.m - 2)],
                   [Z(v[i], w[i]) for i in range(data.m - 1)],
                   [Z(w[i], v[i]) for i in range(data.m - 1)])

    def to_json(self) -> dict:
        return {"data": self.data.to_json(),
                "A": [m.tolist() for m in self.A], "B": [m.tolist() for m in self.B],
                "Gamma": [m.tolist() for m in self.Gamma],
                "Delta": [m.tolist() for m in self.Delta]}

    @classmethod
    def from_json(cls, data) -> "QuiverPoint":
        if isinstance(data, str):
            data = json.loads(data)
        qd = QuiverData.from_json(data["data"])
        v, w = qd.v, qd.w

        def mats(key, shapes):
            raw = data.get(key, [])
            if len(raw) != len(shapes):
                raise DimensionError(f"expected {len(shapes)} matrices for {key}")
            return [_parse_matrix(x, s) for x, s in zip(raw, shapes)]

        return cls(qd,
                   mats("A", [(v[i + 1], v[i]) for i in range(qd.m - 2)]),
                   mats("B", [(v[i], v[i + 1]) for i in range(qd.m - 2)]),
                   mats("Gamma", [(v[i], w[i]) for i in range(qd.m - 1)]),
                   mats("Delta", [(w[i], v[i]) for i in range(qd.m - 1)]))

    def act(self, h: list[RationalMatrix]) -> "QuiverPoint":
        """Apply (h_1, ..., h_{m-1}) in G_v = prod GL(v_i)."""
        hinv = [inverse(x) for x in h]
        m = self.data.m
        return QuiverPoint(
            self.data,
            [h[i + 1] @ self.A[i] @ hinv[i] for i in range(m - 2)],
            [h[i] @ self.B[i] @ hinv[i + 1] for i in range(m - 2)],
            [h[i] @ self.Gamma[i] for i in range(m - 1)],
            [self.Delta[i] @ hinv[i] for i in range(m - 1)])


def _expect(mat: RationalMatrix, shape, name):
    if mat.shape != tuple(shape):
        raise DimensionError(f"{name} has shape {mat.shape}, expected {tuple(shape)}")


def _parse_matrix(rows, shape) -> RationalMatrix:
    nr, nc = shape
    if nr == 0:
        return RationalMatrix.zeros(0, nc)
    mat = RationalMatrix([[Fraction(x) for x in row] for row in rows], nc)
    _expect(mat, shape, "matrix")
    return mat


def relation_residuals(p: QuiverPoint) -> list[RationalMatrix]:
    """A_{i-1}B_{i-1} + Gamma_i Delta_i - B_i A_i for i = 1..m-1."""
    m, v = p.data.m, p.data.v
    out = []
    for i in range(1, m):
        res = p.Gamma[i - 1] @ p.Delta[i - 1]
        if i >= 2:
            res = res + p.A[i - 2] @ p.B[i - 2]
        if i <= m - 2:
            res = res - p.B[i - 1] @ p.A[i - 1]
        assert res.shape == (v[i - 1], v[i - 1])
        out.append(res)
    return out


def check_relations(p: QuiverPoint) -> bool:
    return all(r.is_zero() for r in relation_residuals(p))


def stable_closure(p: QuiverPoint) -> list[list[list[Fraction]]]:
    """Smallest graded subspace containing every im(Gamma_i), closed under A and B."""
    m, v = p.data.m, p.data.v
    spaces = [span_basis(_columns(p.Gamma[i]), v[i]) for i in range(m - 1)]
    changed = True
    while changed:
        changed = False
        for i in range(m - 2):
            grown = span_basis(spaces[i + 1] + [p.A[i].apply(x) for x in spaces[i]], v[i + 1])
            if len(grown) > len(spaces[i + 1]):
                spaces[i + 1], changed = grown, True
            grown = span_basis(spaces[i] + [p.B[i].apply(x) for x in spaces[i + 1]], v[i])
            if len(grown) > len(spaces[i]):
                spaces[i], changed = grown, True
    return spaces


def is_stable(p: QuiverPoint) -> bool:
    return all(len(s) == d for s, d in zip(stable_closure(p), p.data.v))


def is_stable_surjective(p: QuiverPoint) -> bool:
    """The mu-trivial criterion: A_0 = Gamma_1 and every A_i surjective."""
    _require_mu_trivial(p)
    v = p.data.v
    if rank(p.Gamma[0]) != v[0]:
        return False
    return all(rank(a) == v[i + 1] for i, a in enumerate(p.A))


def _columns(mat: RationalMatrix):
    return [mat.column(j) for j in range(mat.ncols)]


def _require_mu_trivial(p: QuiverPoint):
    if not p.data.is_mu_trivial():
        raise QuiverError(f"w = {p.data.w} is not of the form (n, 0, ..., 0)")


def kp_project(p: QuiverPoint) -> RationalMatrix:
    """X = B_0 A_0 = Delta_1 Gamma_1, an n x n matrix."""
    _require_mu_trivial(p)
    if not check_relations(p):
        raise QuiverError("point violates the quiver relations")
    return p.Delta[0] @ p.Gamma[0]


def flag_from_point(p: QuiverPoint) -> tuple[RationalMatrix, list[list[list[Fraction]]]]:
    """(X, [U_0, ..., U_m]) with U_i = ker(A_{i-1} ... A_1 A_0)."""
    x = kp_project(p)
    if not is_stable(p):
        raise QuiverError("point is not stable")
    n = p.data.n
    flags = [[]]
    composite = p.Gamma[0]
    flags.append(nullspace(composite))
    for a in p.A:
        composite = a @ composite
        flags.append(nullspace(composite))
    flags.append(span_basis(RationalMatrix.identity(n).rows, n))
    return x, flags


# -- random witnesses ---------------------------------------------------------

def _random_kp_stable(r: list[int], rng: random.Random, density: float) -> QuiverPoint:
    """A stable mu-trivial point built from a random flag of type r and X on it."""
    n, m = sum(r), len(r)
    s = [sum(r[:i]) for i in range(m + 1)]  # s[i] = dim U_i
    block = [i for i in range(m) for _ in range(r[i])]
    g = random_invertible(n, rng)
    ginv = inverse(g)
    # X(U_i) ⊆ U_{i-1}: in the g-basis, N is strictly block upper triangular
    N = RationalMatrix([[rng.randint(-2, 2) if block[a] < block[b] and rng.random() < density else 0
                         for b in range(n)] for a in range(n)], n)
    v = [n - s[i] for i in range(1, m)]
    w = [n] + [0] * (m - 2)
    data = QuiverData(m, tuple(r), tuple(v), tuple(w))
    gamma1 = RationalMatrix(ginv.rows[s[1]:], n) if v[0] else RationalMatrix.zeros(0, n)
    delta1 = g @ _sub(N, 0, n, s[1], n)
    A = [_proj(v[i], v[i + 1]) for i in range(m - 2)]
    B = [_sub(N, s[i + 1], n, s[i + 2], n) for i in range(m - 2)]
    Z = RationalMatrix.zeros
    gammas = [gamma1] + [Z(v[i], 0) for i in range(1, m - 1)]
    deltas = [delta1] + [Z(0, v[i]) for i in range(1, m - 1)]
    return QuiverPoint(data, A, B, gammas, deltas)


def _sub(mat: RationalMatrix, r0, r1, c0, c1) -> RationalMatrix:
    return RationalMatrix([row[c0:c1] for row in mat.rows[r0:r1]], c1 - c0)


def _proj(src: int, dst: int) -> RationalMatrix:
    """C^src -> C^dst dropping the first src - dst coordinates."""
    k = src - dst
    return RationalMatrix([[int(j == i + k) for j in range(src)] for i in range(dst)], src)


def _embed(p: QuiverPoint, data: QuiverData) -> QuiverPoint:
    """Direct sum of p with the zero representation, up to dimensions data.v."""
    v, w = data.v, data.w

    def pad(mat, nr, nc):
        rows = [list(row) + [0] * (nc - mat.ncols) for row in mat.rows]
        rows += [[0] * nc for _ in range(nr - mat.nrows)]
        return RationalMatrix(rows, nc)

    m = data.m
    return QuiverPoint(
        data,
        [pad(p.A[i], v[i + 1], v[i]) for i in range(m - 2)],
        [pad(p.B[i], v[i], v[i + 1]) for i in range(m - 2)],
        [pad(p.Gamma[i], v[i], w[i]) for i in range(m - 1)],
        [pad(p.Delta[i], w[i], v[i]) for i in range(m - 1)])


def random_relation_point(lam: Partition, rng: random.Random, r=None,
                          stable: bool | None = None) -> QuiverPoint:
    """Seeded random point of Lambda_{v,n} for mu = (1,...,1).

    Stable points come from a random flag of type r and a random X with
    X(U_i) ⊆ U_{i-1}. Unstable ones are direct sums of a stable point of
    smaller dimension vector with a zero representation. Both are then
    moved by a random element of G_v. ``stable=None`` picks either.
    """
    mu = Partition([1] * lam.n)
    data = maffei_dims(lam, mu, r)
    if stable is None:
        stable = rng.random() < 0.5
    density = rng.choice([0.3, 0.6, 1.0])
    v = data.v
    if stable or not any(v):
        point = _random_kp_stable(list(data.r), rng, density)
    else:
        while True:
            prev, small = lam.n, []
            for vi in v:
                prev = rng.randint(0, min(vi, prev))
                small.append(prev)
            if small != list(v):
                break
        r_small = [lam.n - small[0]] + [small[i] - small[i + 1] for i in range(len(small) - 1)] + [small[-1]]
        point = _embed(_random_kp_stable(r_small, rng, density), data)
    h = [random_invertible(d, rng, 2) if d else RationalMatrix.zeros(0, 0) for d in v]
    return point.act(h)

"""Moves on pairs (lam, mu) that preserve the slice S_mu ∩ closure(O_lam).

Three moves are available: deleting a common first row, deleting a common
first column, and complementing both partitions in a t x m rectangle.
Stripping common rows and columns until none remain gives a canonical pair,
and for a cover in the closure order that pair reveals the singularity type.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .partitions import Partition, PartitionError, dominates, transpose
from .poset import DegenerationLabel, KleinianA, MinimalA


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class OrbitPair:
    lam: Partition
    mu: Partition

    def __post_init__(self):
        if self.lam.n != self.mu.n:
            raise PartitionError(f"{self.lam} and {self.mu} have different sizes")
        if not dominates(self.mu, self.lam):
            raise ReductionError(f"{self.mu} is not dominated by {self.lam}")

    @classmethod
    def of(cls, lam, mu) -> "OrbitPair":
        def conv(x):
            if isinstance(x, Partition):
                return x
            return Partition.parse(x) if isinstance(x, str) else Partition(x)
        return cls(conv(lam), conv(mu))

    @property
    def n(self) -> int:
        return self.lam.n

    @property
    def codim(self) -> int:
        """dim O_lam - dim O_mu, the dimension of the slice variety."""
        return sum(c * c for c in transpose(self.mu)) - sum(c * c for c in transpose(self.lam))

    def is_empty(self) -> bool:
        return self.n == 0

    def to_json(self) -> dict:
        return {"lam": list(self.lam.parts), "mu": list(self.mu.parts)}

    @classmethod
    def from_json(cls, data) -> "OrbitPair":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Partition(data["lam"]), Partition(data["mu"]))

    def __str__(self):
        return f"({self.lam} | {self.mu})"


def can_delete_row(p: OrbitPair) -> bool:
    return p.n > 0 and p.lam[0] == p.mu[0]


def can_delete_column(p: OrbitPair) -> bool:
    return p.n > 0 and len(p.lam) == len(p.mu)


def delete_first_row(p: OrbitPair) -> OrbitPair:
    if not can_delete_row(p):
        raise ReductionError(f"{p} has no common first row")
    return OrbitPair(Partition(p.lam.parts[1:]), Partition(p.mu.parts[1:]))


def delete_first_column(p: OrbitPair) -> OrbitPair:
    if not can_delete_column(p):
        raise ReductionError(f"{p} has no common first column")
    return OrbitPair(Partition(x - 1 for x in p.lam), Partition(x - 1 for x in p.mu))


MOVES = {"row": (can_delete_row, delete_first_row),
         "column": (can_delete_column, delete_first_column)}


def reduction_trace(p: OrbitPair, prefer: str = "row") -> list[tuple[str, OrbitPair]]:
    """Greedy deletions, trying ``prefer`` first; starts with ("start", p)."""
    if prefer not in MOVES:
        raise ValueError(f"prefer must be one of {sorted(MOVES)}")
    order = [prefer] + [k for k in MOVES if k != prefer]
    trace = [("start", p)]
    while True:
        for name in order:
            allowed, move = MOVES[name]
            if allowed(p):
                p = move(p)
                trace.append((name, p))
                break
        else:
            return trace


def canonicalize(p: OrbitPair, prefer: str = "row") -> OrbitPair:
    return reduction_trace(p, prefer)[-1][1]


def all_canonical_forms(p: OrbitPair) -> set[OrbitPair]:
    """End points of every maximal interleaving of deletions (confluence check)."""
    seen, ends, stack = {p}, set(), [p]
    while stack:
        q = stack.pop()
        nexts = [move(q) for allowed, move in MOVES.values() if allowed(q)]
        if not nexts:
            ends.add(q)
        for r in nexts:
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return ends


def canonical_label(p: OrbitPair) -> DegenerationLabel | None:
    """Singularity label read off a canonical pair, or None if it is of neither shape.

    Single-part lam* = (k) with mu* = (k-1, 1) gives A_{k-1}; mu* = (1^{k+1})
    with lam* = (2, 1^{k-1}) gives a_k.
    """
    lam, mu, n = p.lam, p.mu, p.n
    if n < 2:
        return None
    if len(lam) == 1 and mu == Partition((n - 1, 1)):
        return KleinianA(n - 1)
    if mu == Partition([1] * n) and lam == Partition([2] + [1] * (n - 2)):
        return MinimalA(n - 1)
    return None


def label_by_reduction(lam: Partition, mu: Partition) -> DegenerationLabel | None:
    return canonical_label(canonicalize(OrbitPair(lam, mu)))


def complement(p: OrbitPair, t: int, m: int) -> OrbitPair:
    """Complement both partitions inside a t x m rectangle."""
    if t < 0 or m < 0:
        raise ReductionError("rectangle sides must be nonnegative")
    if max(len(p.lam), len(p.mu)) > t or max(p.lam[0], p.mu[0]) > m:
        raise ReductionError(f"{p} does not fit in a {t} x {m} rectangle")

    def comp(x: Partition) -> Partition:
        return Partition(m - x[t - i] for i in range(1, t + 1))

    return OrbitPair(comp(p.lam), comp(p.mu))


def minimal_rectangle(p: OrbitPair) -> tuple[int, int]:
    return max(len(p.lam), len(p.mu)), max(p.lam[0], p.mu[0])


@dataclass
class SliceSearch:
    """Outcome of a bounded search; ``found`` False means only 'not within bounds'."""

    found: bool
    t_max: int
    m_max: int
    explored: int
    reason: str = ""
    path: list[tuple[str, OrbitPair]] = field(default_factory=list)

    def __bool__(self):
        return self.found


def _prepend_row(p: OrbitPair, k: int) -> OrbitPair:
    return OrbitPair(Partition((k,) + p.lam.parts), Partition((k,) + p.mu.parts))


def _prepend_column(p: OrbitPair, h: int) -> OrbitPair:
    def grow(x: Partition) -> Partition:
        return Partition([a + 1 for a in x] + [1] * (h - len(x)))
    return OrbitPair(grow(p.lam), grow(p.mu))


def _neighbours(c: OrbitPair, t_max: int, m_max: int):
    """Canonical pairs one complement away, allowing one prepended row or column."""
    starts = [("", c)]
    t0, m0 = minimal_rectangle(c)
    if t0 < t_max:
        starts += [(f"row {k}; ", _prepend_row(c, k)) for k in range(max(c.lam[0], 1), m_max + 1)]
    if m0 < m_max:
        starts += [(f"column {h}; ", _prepend_column(c, h))
                   for h in range(max(len(c.mu), 1), t_max + 1)]
    for prefix, q in starts:
        t, m = minimal_rectangle(q)
        if t > t_max or m > m_max:
            continue
        yield f"{prefix}complement {t}x{m}", canonicalize(complement(q, t, m))


def same_slice_class(p: OrbitPair, q: OrbitPair, t_max: int | None = None,
                     m_max: int | None = None) -> SliceSearch:
    """Breadth-first search over canonical pairs under complements.

    Default bounds are one more than the largest number of parts and the
    largest part occurring in p and q, which leaves room for one prepended
    row or column before complementing.
    """
    pairs = (p.lam, p.mu, q.lam, q.mu)
    if t_max is None:
        t_max = max(len(x) for x in pairs) + 1
    if m_max is None:
        m_max = max(x[0] for x in pairs) + 1
    if p.codim != q.codim:
        return SliceSearch(False, t_max, m_max, 0, "slice dimensions differ")
    start, goal = canonicalize(p), canonicalize(q)
    parent = {start: None}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        if c == goal:
            path = []
            while c is not None:
                step = parent[c]
                path.append((step[0] if step else "start", c))
                c = step[1] if step else None
            return SliceSearch(True, t_max, m_max, len(parent), "reached", path[::-1])
        for move, d in _neighbours(c, t_max, m_max):
            if d not in parent:
                parent[d] = (move, c)
                queue.append(d)
    return SliceSearch(False, t_max, m_max, len(parent), "not reachable within bounds")

"""Partition combinatorics: dominance order, transpose, corner boxes."""

from __future__ import annotations

from functools import cached_property
from itertools import accumulate


class PartitionError(ValueError):
    pass


class Partition:
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are trimmed on construction; indexing past the end
    returns 0, so ``lam[i]`` behaves like the infinite zero tail.
    Rows are 1-indexed in :meth:`row`, 0-indexed in ``__getitem__``.
    """

    def __init__(self, parts=()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise PartitionError(f"negative part in {parts}")
        self.parts = tuple(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"5,4,4,3"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise PartitionError(f"cannot parse partition {text!r}") from None
        if any(p <= 0 for p in parts):
            raise PartitionError(f"parts must be positive: {text!r}")
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self.parts[i]
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def row(self, i: int) -> int:
        """Length of row ``i`` (1-indexed), 0 beyond the last row."""
        return self[i - 1]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        # lexicographic, used only for deterministic sorting
        return self.parts < other.parts

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return ",".join(map(str, self.parts))

    @cached_property
    def partial_sums(self) -> tuple[int, ...]:
        return tuple(accumulate(self.parts))

    def transpose(self) -> "Partition":
        return transpose(self)


def transpose(lam: Partition) -> Partition:
    width = lam[0]
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, width + 1))


def dominates(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu`` is dominated by ``lam`` (written mu ⊴ lam)."""
    if mu.n != lam.n:
        raise PartitionError(
            f"cannot compare partitions of {mu.n} and {lam.n}")
    s = t = 0
    for k in range(max(len(mu), len(lam))):
        s += mu[k]
        t += lam[k]
        if s > t:
            return False
    return True


def multiplicity_vector(mu: Partition, m: int) -> list[int]:
    """Multiplicities of 1, ..., m-1 as parts of ``mu``; needs m > mu_1."""
    if m <= mu[0]:
        raise PartitionError(f"m={m} must exceed the largest part {mu[0]}")
    w = [0] * (m - 1)
    for p in mu:
        w[p - 1] += 1
    return w


def corner_boxes(lam: Partition) -> list[tuple[int, int]]:
    """Cells (row, column) with no box below or to the right, 1-indexed."""
    return [(i + 1, p) for i, p in enumerate(lam) if lam[i + 1] < p]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def is_p_restricted(mu: Partition, p: int) -> bool:
    if not is_prime(p):
        raise PartitionError(f"{p} is not prime")
    return all(mu[i] - mu[i + 1] < p for i in range(len(mu)))


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n, in reverse lexicographic order starting at (n)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first, *rest.parts))

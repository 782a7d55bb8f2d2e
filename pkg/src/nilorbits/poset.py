"""Closure order on nilpotent orbits of sl_n, with labelled minimal degenerations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .partitions import Partition, dominates, partitions_of, transpose


class Kind(str, Enum):
    KLEINIAN = "KleinianA"
    MINIMAL = "MinimalA"


@dataclass(frozen=True)
class DegenerationLabel:
    """Singularity type of a minimal degeneration.

    Index 1 is stored as Kleinian: a_1 and A_1 are the same singularity.
    """

    kind: Kind
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("index must be positive")
        if self.index == 1 and self.kind is Kind.MINIMAL:
            object.__setattr__(self, "kind", Kind.KLEINIAN)

    @property
    def codimension(self) -> int:
        return 2 if self.kind is Kind.KLEINIAN else 2 * self.index

    def __str__(self):
        letter = "A" if self.kind is Kind.KLEINIAN else "a"
        return f"{letter}_{self.index}"


def KleinianA(m: int) -> DegenerationLabel:
    return DegenerationLabel(Kind.KLEINIAN, m)


def MinimalA(m: int) -> DegenerationLabel:
    return DegenerationLabel(Kind.MINIMAL, m)


@dataclass(frozen=True)
class Degeneration:
    source: Partition
    target: Partition
    label: DegenerationLabel
    codim: int
    box_from: tuple[int, int]
    box_to: tuple[int, int]

    def notation(self) -> str:
        """Figure-style label text.

        Index-1 edges are A_1 = a_1; they are written ``a_1`` when the
        source lies strictly below its own transpose in dominance order,
        which makes the rendering symmetric under transposing the diagram.
        """
        lab = self.label
        if lab.index == 1:
            src_t = transpose(self.source)
            if src_t != self.source and dominates(self.source, src_t):
                return "a_1"
        return str(lab)


def minimal_degenerations(lam: Partition) -> list[tuple[Partition, DegenerationLabel]]:
    return [(d.target, d.label) for d in degenerations(lam)]


def degenerations(lam: Partition) -> list[Degeneration]:
    """All covers mu of lam, found by moving one corner box.

    A box leaving row i at column lam_i either drops to row i+1 (one row
    down, lam_i - lam_{i+1} - 1 columns left) or slides one column left
    into the first row j > i whose length is lam_i - 2 (j - i rows down).
    Results are sorted by target partition, lexicographically decreasing.
    """
    out = {}
    for i, col in enumerate(lam):
        if lam[i + 1] == col:
            continue  # not a corner
        if col - lam[i + 1] >= 2:
            d = _move(lam, i, i + 1, KleinianA(col - lam[i + 1] - 1))
            out.setdefault(d.target, d)
        if col < 2:
            continue
        # one column left: rows i+1..j-1 have length col-1, row j has col-2
        j = i + 1
        while lam[j] == col - 1:
            j += 1
        if lam[j] == col - 2:
            d = _move(lam, i, j, MinimalA(j - i))
            out.setdefault(d.target, d)
    return [out[t] for t in sorted(out, reverse=True)]


def _move(lam: Partition, i: int, j: int, label: DegenerationLabel) -> Degeneration:
    parts = list(lam.parts) + [0] * (j + 1 - len(lam))
    box_from = (i + 1, parts[i])
    parts[i] -= 1
    parts[j] += 1
    box_to = (j + 1, parts[j])
    target = Partition(parts)
    return Degeneration(lam, target, label, 2 * (j - i), box_from, box_to)


class DimensionMismatch(AssertionError):
    """Two descents from (n) gave different orbit dimensions."""


@lru_cache(maxsize=None)
def _chain_dimension(lam: Partition) -> int:
    n = lam.n
    if lam == Partition((n,)):
        return n * n - n
    values = {_chain_dimension(d.source) - d.codim for d in _edges_into(lam)}
    if len(values) != 1:
        raise DimensionMismatch(f"chain sums for {lam} disagree: {sorted(values)}")
    return values.pop()


@lru_cache(maxsize=None)
def _edges_into(lam: Partition) -> tuple[Degeneration, ...]:
    return tuple(d for p in partitions_of(lam.n) for d in degenerations(p)
                 if d.target == lam)


def orbit_dimension(lam: Partition) -> int:
    """Dimension of O_lam, by summing codimensions down a chain from (n)."""
    if lam.n == 0:
        return 0
    return _chain_dimension(lam)


def orbit_dimension_formula(lam: Partition) -> int:
    """Closed form n^2 - sum of squared column lengths."""
    return lam.n ** 2 - sum(c * c for c in transpose(lam))


def chain_codimensions(lam: Partition) -> set[int]:
    """Codimension of O_lam in N along every maximal chain from (n)."""
    n = lam.n
    top = Partition((n,))
    sums = {top: {0}}
    order = list(partitions_of(n))  # (n) first; covers only go downward
    order.sort(key=lambda p: -orbit_dimension_formula(p))
    for p in order:
        if p not in sums:
            continue
        for d in degenerations(p):
            sums.setdefault(d.target, set()).update(s + d.codim for s in sums[p])
    return sums.get(lam, set())


@dataclass
class OrbitPoset:
    n: int
    nodes: list[Partition]
    edges: list[Degeneration] = field(default_factory=list)

    def covers(self, lam: Partition) -> list[Degeneration]:
        return [e for e in self.edges if e.source == lam]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nodes": [str(p) for p in self.nodes],
            "edges": [{"from": str(e.source), "to": str(e.target),
                       "label": e.notation(), "codim": e.codim}
                      for e in self.edges],
        }

    @classmethod
    def from_json(cls, data) -> "OrbitPoset":
        if isinstance(data, str):
            data = json.loads(data)
        poset = build_poset(data["n"])
        if poset.to_json() != data:
            raise ValueError("JSON does not describe the orbit poset of sl_n")
        return poset


def build_poset(n: int) -> OrbitPoset:
    nodes = sorted(partitions_of(n), key=lambda p: p.parts, reverse=True)
    edges = [d for p in nodes for d in degenerations(p)]
    return OrbitPoset(n, nodes, edges)


def to_dot(poset: OrbitPoset) -> str:
    lines = [f"digraph sl{poset.n} {{", "  rankdir=TB;", "  node [shape=box];"]
    for p in poset.nodes:
        lines.append(f'  "{p}";')
    for e in poset.edges:
        lines.append(f'  "{e.source}" -> "{e.target}" [label="{e.notation()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Slodowy slices in sl_n, adjoint-quotient invariants, and Kleinian data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .linalg import RationalMatrix, nullspace, solve
from .oracle import Sl2Triple, ad_matrix, sl2_triple
from .partitions import Partition
from .poly import MultiPoly, PolyError, PolyMatrix, char_poly


@dataclass
class SliceChart:
    """X + sum_j a_j * basis[j], the basis spanning the trace-zero centralizer of Y."""

    partition: Partition
    triple: Sl2Triple
    basis: list[RationalMatrix]
    chart: PolyMatrix

    @property
    def variables(self) -> tuple[str, ...]:
        return self.chart.variables

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def point(self, coords) -> RationalMatrix:
        """The slice element with the given chart coordinates."""
        coords = list(coords)
        if len(coords) != len(self.basis):
            raise ValueError(f"expected {len(self.basis)} coordinates")
        m = self.triple.X
        for c, b in zip(coords, self.basis):
            m = m + b.scale(c)
        return m

    def coordinates(self, z: RationalMatrix) -> list[Fraction] | None:
        """Chart coordinates of ``z``, or None if z is not on the slice."""
        n = z.nrows
        diff = z - self.triple.X
        cols = [[b.rows[i][j] for i in range(n) for j in range(n)] for b in self.basis]
        target = [diff.rows[i][j] for i in range(n) for j in range(n)]
        if not cols:
            return [] if diff.is_zero() else None
        system = RationalMatrix.from_columns(cols, n * n)
        return solve(system, target)


def chart_variables(k: int) -> tuple[str, ...]:
    return tuple(f"a{j}" for j in range(1, k + 1))


def slodowy_slice(mu: Partition) -> SliceChart:
    n = mu.n
    if n < 2:
        raise ValueError("slices are defined here for n >= 2")
    triple = sl2_triple(mu)
    # [Z, Y] = 0 together with trace(Z) = 0
    system = ad_matrix(triple.Y)
    trace_row = [Fraction(int(i == j)) for i in range(n) for j in range(n)]
    system = RationalMatrix(system.rows + [trace_row], n * n)
    basis = [RationalMatrix([v[i * n:(i + 1) * n] for i in range(n)], n)
             for v in nullspace(system)]
    names = chart_variables(len(basis))
    gens = [MultiPoly.var(a, names) for a in names]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = MultiPoly.constant(triple.X.rows[i][j], names)
            for g, b in zip(gens, basis):
                if b.rows[i][j]:
                    entry = entry + g * b.rows[i][j]
            row.append(entry)
        rows.append(row)
    return SliceChart(mu, triple, basis, PolyMatrix(rows, names))


def chi_invariants(m: PolyMatrix) -> list[MultiPoly]:
    """chi_i = (-1)^(i+1) * [t^(n-i-1)] det(tI - M), for i = 1..n-1."""
    n = m.nrows
    if n != m.ncols or n < 2:
        raise ValueError("need a square matrix of size at least 2")
    if not m.trace().is_zero():
        raise PolyError("matrix is not trace-free")
    t = "t"
    while t in m.variables:
        t += "_"
    cp = char_poly(m, t)
    out = []
    for i in range(1, n):
        c = cp.coefficient(t, n - i - 1).with_variables(m.variables)
        out.append(c if i % 2 == 1 else -c)
    return out


def slice_nilpotent_equations(mu: Partition) -> list[MultiPoly]:
    return chi_invariants(slodowy_slice(mu).chart)


def chi_of_matrix(z: RationalMatrix) -> list[Fraction]:
    return [p.constant_term() for p in chi_invariants(PolyMatrix.from_rational(z))]


# -- Kleinian singularities -----------------------------------------------

@dataclass(frozen=True)
class KleinianType:
    letter: str
    index: int

    def __post_init__(self):
        ok = {"A": self.index >= 1, "D": self.index >= 4,
              "E": self.index in (6, 7, 8)}.get(self.letter)
        if not ok:
            raise ValueError(f"no Kleinian type {self.letter}_{self.index}")

    @classmethod
    def parse(cls, text: str) -> "KleinianType":
        text = text.strip().replace("_", "")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self):
        return f"{self.letter}_{self.index}"


def kleinian_equation(k: KleinianType) -> MultiPoly:
    x, y, z = MultiPoly.gens("x y z")
    l = k.index
    if k.letter == "A":
        return x ** (l + 1) + y * z
    if k.letter == "D":
        return x ** (l - 1) + x * y ** 2 + z ** 2
    return {6: x ** 4 + y ** 3 + z ** 2,
            7: x ** 3 * y + y ** 3 + z ** 2,
            8: x ** 5 + y ** 3 + z ** 2}[l]


def semiuniversal_typeA(l: int, u) -> MultiPoly:
    """x^(l+1) + u_1 x^(l-1) + ... + u_(l-1) x + u_l + yz.

    Entries of ``u`` may be rationals or polynomials (symbolic parameters).
    """
    u = list(u)
    if l < 1:
        raise ValueError("l must be positive")
    if len(u) != l:
        raise ValueError(f"expected {l} deformation parameters, got {len(u)}")
    x, y, z = MultiPoly.gens("x y z")
    p = x ** (l + 1) + y * z
    for i, ui in enumerate(u, start=1):
        p = p + x ** (l - i) * ui
    return p


_SLODOWY_PAIRS = {
    "B": lambda l: (KleinianType("A", 2 * l - 1), KleinianType("D", l + 2), "S2"),
    "C": lambda l: (KleinianType("D", l + 1), KleinianType("D", 2 * l), "S2"),
    "F": lambda l: (KleinianType("E", 6), KleinianType("E", 7), "S2"),
    "G": lambda l: (KleinianType("D", 4), KleinianType("E", 7), "S3"),
}


def slodowy_pair(lie_type: str) -> tuple[KleinianType, KleinianType, str]:
    """(Gamma, Gamma', Gamma'/Gamma) for a non-simply-laced type like ``"B2"``."""
    text = lie_type.strip().replace("_", "")
    letter, rest = text[:1].upper(), text[1:]
    if letter not in _SLODOWY_PAIRS or not rest.isdigit():
        raise ValueError(f"unknown non-simply-laced type {lie_type!r}")
    l = int(rest)
    valid = {"B": l >= 2, "C": l >= 3, "F": l == 4, "G": l == 2}[letter]
    if not valid:
        raise ValueError(f"index out of range for type {letter}: {l}")
    return _SLODOWY_PAIRS[letter](l)


# -- fixtures ----------------------------------------------------------------

def load_fixture(name: str) -> PolyMatrix:
    """Displayed slice matrices: ``sl3_regular``, ``sl3_subregular``, ``sl4_subregular``."""
    data = json.loads(resources.files("nilorbits.data").joinpath("slices.json").read_text())
    entry = data[name]
    return PolyMatrix.parse(entry["matrix"], entry["variables"])


def fixture_names() -> list[str]:
    data = json.loads(resources.files("nilorbits.data").joinpath("slices.json").read_text())
    return sorted(data)

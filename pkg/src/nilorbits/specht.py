"""Integral Specht modules spanned by permuted products of Vandermonde factors.

S_lam is the Z-span of pi_lam(x_sigma(1), ..., x_sigma(n)) over sigma in S_n,
where pi_lam multiplies the Vandermonde products of consecutive variable
blocks of sizes lam_1, lam_2, ... . With this construction S_lam is the module
usually indexed by the transpose of lam.

Polynomials are handled as integer vectors over monomials. A Z-basis comes
from integer row echelon form: the spanning polynomials are inserted in
lexicographic order of sigma and reduced against the pivots found so far,
with no back-substitution above pivots. For lam = (2,1) this gives
{x1 - x2, x2 - x3}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .partitions import Partition, is_p_restricted, is_prime, partitions_of
from .poly import MultiPoly

DEFAULT_MAX_N = 7

Monomial = tuple[int, ...]
Vector = dict[Monomial, int]


class SpechtBoundError(ValueError):
    """n exceeds the factorial enumeration bound."""


def variables(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def pi_polynomial(lam: Partition) -> MultiPoly:
    n = lam.n
    names = variables(n)
    xs = [MultiPoly.var(v, names) for v in names]
    result = MultiPoly.constant(1, names)
    start = 0
    for size in lam:
        for i, j in combinations(range(start, start + size), 2):
            result = result * (xs[i] - xs[j])
        start += size
    return result


def _to_vector(p: MultiPoly) -> Vector:
    out = {}
    for exp, c in p.terms.items():
        if c.denominator != 1:
            raise ValueError("polynomial has non-integer coefficients")
        out[exp] = int(c)
    return out


def _permute(vec: Vector, sigma) -> Vector:
    """f(x_sigma(1), ..., x_sigma(n)): the exponent of x_i moves to x_sigma(i)."""
    out = {}
    for exp, c in vec.items():
        new = [0] * len(exp)
        for i, e in enumerate(exp):
            new[sigma[i]] = e
        out[tuple(new)] = c
    return out


def _order_key(mono: Monomial):
    # grlex with x1 > x2 > ...; pivots are the largest monomials
    return (-sum(mono), tuple(-e for e in mono))


class _Echelon:
    """Integer row echelon form, built one vector at a time."""

    def __init__(self):
        self.rows: dict[Monomial, Vector] = {}

    def _lead(self, vec: Vector):
        return min(vec, key=_order_key) if vec else None

    def insert(self, vec: Vector) -> bool:
        """Add vec to the lattice; True if the rank went up."""
        vec = dict(vec)
        while vec:
            lead = self._lead(vec)
            row = self.rows.get(lead)
            if row is None:
                if vec[lead] < 0:
                    vec = {k: -v for k, v in vec.items()}
                self.rows[lead] = vec
                return True
            a, b = row[lead], vec[lead]
            if b % a == 0:
                vec = _combine(vec, 1, row, -(b // a))
                continue
            g, s, t = _xgcd(a, b)
            new_row = _combine(row, s, vec, t)
            # unimodular step: the pivot becomes gcd(a, b) > 0
            vec = _combine(vec, a // g, row, -(b // g))
            self.rows[lead] = new_row
        return False

    def reduces_to_zero(self, vec: Vector) -> bool:
        """Integer membership test in the row lattice."""
        vec = dict(vec)
        while vec:
            lead = self._lead(vec)
            row = self.rows.get(lead)
            if row is None or vec[lead] % row[lead]:
                return False
            vec = _combine(vec, 1, row, -(vec[lead] // row[lead]))
        return True

    def basis(self) -> list[Vector]:
        return [self.rows[k] for k in sorted(self.rows, key=_order_key)]


def _combine(u: Vector, a: int, v: Vector, b: int) -> Vector:
    out = {k: a * c for k, c in u.items()} if a != 1 else dict(u)
    for k, c in v.items():
        val = out.get(k, 0) + b * c
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return {k: c for k, c in out.items() if c}


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) > 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    x, y = a, b
    while y:
        q = x // y
        x, y = y, x - q * y
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        x, s0, t0 = -x, -s0, -t0
    return x, s0, t0


def _pairing(u: Vector, v: Vector) -> int:
    if len(u) > len(v):
        u, v = v, u
    return sum(c * v.get(k, 0) for k, c in u.items())


@dataclass
class SpechtModule:
    lam: Partition
    basis: list[MultiPoly]
    gram: list[list[int]]
    _lattice: _Echelon

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, p: MultiPoly) -> bool:
        """Whether p lies in the integer span of the permuted pi polynomials."""
        if any(c.denominator != 1 for c in p.terms.values()):
            return False
        return self._lattice.reduces_to_zero(_to_vector(p.with_variables(variables(self.lam.n))))


def _check_bound(lam: Partition, max_n: int):
    if lam.n > max_n:
        raise SpechtBoundError(f"n = {lam.n} exceeds the enumeration bound {max_n}")
    if lam.n < 1:
        raise ValueError("need a partition of n >= 1")


def spanning_set(lam: Partition, max_n: int = DEFAULT_MAX_N) -> list[Vector]:
    """Permuted pi_lam for every sigma, in lexicographic order of sigma."""
    _check_bound(lam, max_n)
    base = _to_vector(pi_polynomial(lam))
    return [_permute(base, sigma) for sigma in permutations(range(lam.n))]


def specht_module(lam: Partition, max_n: int = DEFAULT_MAX_N) -> SpechtModule:
    _check_bound(lam, max_n)
    names = variables(lam.n)
    lattice = _Echelon()
    seen, distinct = set(), []
    for vec in spanning_set(lam, max_n):
        key = frozenset(vec.items())
        if key in seen or frozenset((k, -c) for k, c in vec.items()) in seen:
            continue
        seen.add(key)
        distinct.append(vec)
        lattice.insert(vec)
    # every spanning vector must be an integer combination of the basis
    if not all(lattice.reduces_to_zero(v) for v in distinct):
        raise ArithmeticError(f"echelon basis of S_{lam} fails the integrality check")
    vecs = lattice.basis()
    basis = [MultiPoly(names, {k: Fraction(c) for k, c in v.items()}) for v in vecs]
    gram = [[_pairing(u, v) for v in vecs] for u in vecs]
    return SpechtModule(lam, basis, gram, lattice)


def determinant(mat: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(row) for row in mat]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_mod_p(mat: list[list[int]], p: int) -> int:
    rows = [[x % p for x in row] for row in mat]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def gram_determinant(lam: Partition, max_n: int = DEFAULT_MAX_N) -> int:
    return determinant(specht_module(lam, max_n).gram)


def dim_irreducible_mod_p(mu: Partition, p: int, max_n: int = DEFAULT_MAX_N) -> int:
    """dim D_mu over F_p: the rank of the Gram matrix modulo p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not is_p_restricted(mu, p):
        raise ValueError(f"{mu} is not {p}-restricted")
    return rank_mod_p(specht_module(mu, max_n).gram, p)


def irreducible_dims_table(n: int, p: int, max_n: int = DEFAULT_MAX_N) -> list[tuple[Partition, int, int]]:
    """(mu, dim S_mu, dim D_mu) for each p-restricted mu of n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out = []
    for mu in partitions_of(n):
        if is_p_restricted(mu, p):
            mod = specht_module(mu, max_n)
            out.append((mu, mod.dimension, rank_mod_p(mod.gram, p)))
    return out

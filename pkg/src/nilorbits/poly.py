"""Sparse multivariate polynomials over Q and matrices of them.

A :class:`MultiPoly` is a dict from exponent tuples to nonzero Fractions,
tied to an ordered tuple of variable names. Binary operations between
polynomials over different variable lists first merge the lists (left
operand's order first), so callers rarely need to align contexts by hand.

Printing uses graded lexicographic order with variables in declaration
order, e.g. ``-2*a^3 + 2*a*b + c*d``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .linalg import DimensionError, RationalMatrix, _frac


class PolyError(ValueError):
    pass


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables=(), terms=None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise PolyError(f"repeated variable in {self.variables}")
        k = len(self.variables)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != k:
                raise PolyError("exponent length does not match variables")
            c = _frac(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    # -- constructors ---------------------------------------------------
    @classmethod
    def constant(cls, c, variables=()) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables=None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            variables = variables + (name,)
        exp = tuple(int(v == name) for v in variables)
        return cls(variables, {exp: 1})

    @classmethod
    def gens(cls, names) -> list["MultiPoly"]:
        names = tuple(names.replace(",", " ").split()) if isinstance(names, str) else tuple(names)
        return [cls.var(x, names) for x in names]

    # -- context handling -----------------------------------------------
    def with_variables(self, variables) -> "MultiPoly":
        """Re-express over a superset ``variables`` of the current list."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        missing = [v for v in self.variables if v not in index]
        if missing:
            # variables with zero degree everywhere may be dropped
            used = {v for exp in self.terms for v, e in zip(self.variables, exp) if e}
            if used & set(missing):
                raise PolyError(f"cannot drop variables {missing}")
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * len(variables)
            for v, e in zip(self.variables, exp):
                if e:
                    new[index[v]] = e
            terms[tuple(new)] = c
        return MultiPoly(variables, terms)

    def _align(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.variables)
        if other.variables == self.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(merged), other.with_variables(merged)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        a, b = self._align(other)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return MultiPoly(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -_frac(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _frac(other)
            return MultiPoly(self.variables, {e: c * v for e, v in self.terms.items()})
        a, b = self._align(other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(a.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, MultiPoly):
            raise PolyError("only division by scalars is supported")
        c = _frac(c)
        return MultiPoly(self.variables, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, k: int):
        result = MultiPoly.constant(1, self.variables)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.constant(other, self.variables)
            except TypeError:
                return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(str(self))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self.terms}
        if degree is None:
            return len(degrees) <= 1
        return degrees <= {degree}

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0 if self.terms else -1
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def coefficient(self, name: str, k: int) -> "MultiPoly":
        """Coefficient of ``name**k``, as a polynomial in the other variables."""
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1:]
        terms = {e[:i] + e[i + 1:]: c for e, c in self.terms.items() if e[i] == k}
        return MultiPoly(rest, terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def sorted_terms(self):
        """Terms in graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables)
                     if any(e[i] for e in self.terms))

    def derivative(self, name: str) -> "MultiPoly":
        if name not in self.variables:
            return MultiPoly(self.variables)
        i = self.variables.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                terms[tuple(d)] = c * e[i]
        return MultiPoly(self.variables, terms)

    def __call__(self, **assignment):
        return poly_eval(self, assignment)

    def substitute(self, mapping) -> "MultiPoly":
        """Replace variables by polynomials (or scalars) simultaneously."""
        result = MultiPoly(())
        for e, c in self.terms.items():
            term = MultiPoly.constant(c)
            for v, k in zip(self.variables, e):
                if k:
                    base = mapping.get(v)
                    if base is None:
                        base = MultiPoly.var(v)
                    elif not isinstance(base, MultiPoly):
                        base = MultiPoly.constant(base)
                    term = term * base ** k
            result = result + term
        return result

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exp) if e)
            mag = abs(c)
            mag_s = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if not mono:
                body = mag_s
            elif mag == 1:
                body = mono
            else:
                body = f"{mag_s}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, variables={self.variables})"


def poly_eval(p: MultiPoly, assignment) -> Fraction:
    """Evaluate exactly; every variable occurring in ``p`` must be assigned."""
    missing = [v for v in p.used_variables() if v not in assignment]
    if missing:
        raise PolyError(f"no value for variables {missing}")
    vals = [_frac(assignment[v]) if v in assignment else Fraction(0) for v in p.variables]
    total = Fraction(0)
    for e, c in p.terms.items():
        term = c
        for x, k in zip(vals, e):
            if k:
                term *= x ** k
        total += term
    return total


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, variables=None) -> MultiPoly:
    """Parse an expanded polynomial such as ``"-3*a^2 - b + 1/2*c*d"``.

    Only sums of products of rational constants and ``var^k`` factors are
    accepted, which covers everything :meth:`MultiPoly.__str__` produces.
    """
    text = text.strip()
    names = list(variables or ())
    pending = []
    if text in ("", "0"):
        return MultiPoly(tuple(names))
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise PolyError(f"cannot parse polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(sign)
        powers = {}
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise PolyError(f"empty factor in {text!r}")
            base, _, k = factor.partition("^")
            if re.fullmatch(r"\d+(/\d+)?", base):
                if k:
                    raise PolyError(f"powers of constants unsupported: {factor!r}")
                coef *= Fraction(base)
            elif re.fullmatch(r"[A-Za-z_]\w*", base):
                powers[base] = powers.get(base, 0) + (int(k) if k else 1)
                if base not in names:
                    names.append(base)
            else:
                raise PolyError(f"bad factor {factor!r}")
        pending.append((coef, powers))
        pos = m.end()
    terms = {}
    for coef, powers in pending:
        e = tuple(powers.get(v, 0) for v in names)
        terms[e] = terms.get(e, 0) + coef
    return MultiPoly(tuple(names), terms)


class PolyMatrix:
    """Square or rectangular matrix of :class:`MultiPoly` sharing one context."""

    def __init__(self, rows, variables=None):
        rows = [list(r) for r in rows]
        if variables is None:
            seen = []
            for r in rows:
                for p in r:
                    if isinstance(p, MultiPoly):
                        seen += [v for v in p.variables if v not in seen]
            variables = tuple(seen)
        self.variables = tuple(variables)
        self.rows = [[_lift(p, self.variables) for p in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionError("ragged matrix")

    @classmethod
    def from_rational(cls, m: RationalMatrix, variables=()) -> "PolyMatrix":
        return cls([[MultiPoly.constant(x, variables) for x in r] for r in m.rows], variables)

    @classmethod
    def parse(cls, rows, variables=None) -> "PolyMatrix":
        return cls([[parse_poly(str(x), variables) for x in r] for r in rows], variables)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionError("shape mismatch")
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = MultiPoly(self.variables)
                for k, a in enumerate(r):
                    if a.terms and other.rows[k][j].terms:
                        acc = acc + a * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def trace(self) -> MultiPoly:
        if self.nrows != self.ncols:
            raise DimensionError("trace of a non-square matrix")
        acc = MultiPoly(self.variables)
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def evaluate(self, assignment) -> RationalMatrix:
        return RationalMatrix(
            [[poly_eval(p, assignment) for p in r] for r in self.rows], self.ncols)

    def __str__(self):
        cells = [[str(p) for p in r] for r in self.rows]
        widths = [max((len(cells[i][j]) for i in range(self.nrows)), default=1)
                  for j in range(self.ncols)]
        return "\n".join(
            "[" + "  ".join(c.rjust(w) for c, w in zip(r, widths)) + "]" for r in cells)


def _lift(p, variables) -> MultiPoly:
    if isinstance(p, MultiPoly):
        return p.with_variables(variables)
    return MultiPoly.constant(p, variables)


def char_poly(m, t: str = "t") -> MultiPoly:
    """det(tI - M) by the Faddeev-LeVerrier recurrence.

    ``m`` may be a :class:`PolyMatrix` or a :class:`RationalMatrix`. The
    recurrence only divides by the integers 1..n, so it stays exact over
    any polynomial ring with rational coefficients.
    """
    if isinstance(m, RationalMatrix):
        m = PolyMatrix.from_rational(m)
    if m.nrows != m.ncols:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    if t in m.variables:
        raise PolyError(f"variable {t!r} already used by the matrix")
    n = m.nrows
    variables = m.variables
    zero = MultiPoly(variables)
    coeffs = [MultiPoly.constant(1, variables)]  # c_n, c_{n-1}, ...
    mk = PolyMatrix([[zero] * n for _ in range(n)], variables)
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        shifted = [[mk.rows[i][j] + (c_prev if i == j else zero) for j in range(n)]
                   for i in range(n)]
        mk = m @ PolyMatrix(shifted, variables)
        coeffs.append(-mk.trace() / k)
    tv = MultiPoly.var(t, variables + (t,))
    result = MultiPoly(variables + (t,))
    for k, c in enumerate(coeffs):
        result = result + c * tv ** (n - k)
    return result

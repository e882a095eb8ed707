"""Exact rational arithmetic: matrices, determinants, and the xi covector.

Rationals are `fractions.Fraction`, which already keeps the canonical
gcd-reduced form with a positive denominator.  This module adds the small
matrix layer needed everywhere else: exact determinants (cofactor expansion
for k <= 4, fraction-free Bareiss elimination above that) and the covector
construction xi with xi(w) = det([w | vs]).
"""

from fractions import Fraction
from math import gcd, lcm


def rational(x):
    """Coerce ints, strings like "-7/2", and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def format_rational(r):
    """Serialize as "p/q", omitting the denominator when it is 1."""
    r = rational(r)
    if r.denominator == 1:
        return str(r.numerator)
    return "%d/%d" % (r.numerator, r.denominator)


class Matrix:
    """Immutable matrix of Fractions, stored as a tuple of row tuples."""

    def __init__(self, rows):
        self.rows = tuple(tuple(rational(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(row) != self.ncols for row in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def from_columns(cls, cols):
        cols = [tuple(col) for col in cols]
        return cls(list(zip(*cols)))

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix(%r)" % (self.rows,)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return det_rows(self.rows)

    def to_json(self):
        return [[format_rational(x) for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, data):
        return cls([[Fraction(s) for s in row] for row in data])


def det_rows(rows):
    k = len(rows)
    if k == 0:
        return Fraction(1)
    if any(not isinstance(x, (Fraction, int)) for row in rows for x in row):
        return _det_generic(rows)
    if k <= 4:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def _det_generic(rows):
    """First-row Laplace expansion over any commutative ring (symbolic
    entries); accumulates without assuming a zero element."""
    k = len(rows)
    if k == 1:
        return rows[0][0]
    total = None
    for j in range(k):
        minor = [[row[c] for c in range(k) if c != j] for row in rows[1:]]
        term = rows[0][j] * _det_generic(minor)
        if j % 2:
            term = -term if hasattr(term, "__neg__") else 0 - term
        total = term if total is None else total + term
    return total


def _det_cofactor(rows):
    k = len(rows)
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Fraction(0)
    sign = 1
    for j in range(k):
        if rows[0][j]:
            minor = [[row[c] for c in range(k) if c != j] for row in rows[1:]]
            total += sign * rows[0][j] * _det_cofactor(minor)
        sign = -sign
    return total


def _det_bareiss(rows):
    # Clear denominators row by row, run integer Bareiss, then divide back.
    k = len(rows)
    scale = Fraction(1)
    a = []
    for row in rows:
        d = lcm(*(x.denominator for x in row))
        scale *= d
        a.append([int(x * d) for x in row])
    sign = 1
    prev = 1
    for i in range(k - 1):
        if a[i][i] == 0:
            for r in range(i + 1, k):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return Fraction(sign * a[k - 1][k - 1], 1) / scale


def xi_covector(vs):
    """The covector xi with xi(w) = det([w | vs]), vs a list of m-1 vectors.

    Component k is (-1)^(k+1) * det(minor_k), the first-column cofactor
    expansion.  Returns (xi, degenerate) where degenerate flags linearly
    dependent input (xi is then the zero covector).
    """
    vs = [tuple(rational(x) for x in v) for v in vs]
    m = len(vs) + 1
    if any(len(v) != m for v in vs):
        raise ValueError("need m-1 vectors of length m")
    xi = []
    sign = 1
    for k in range(m):
        minor = [[v[r] for v in vs] for r in range(m) if r != k]
        xi.append(sign * det_rows(minor))
        sign = -sign
    xi = tuple(xi)
    return xi, all(x == 0 for x in xi)


def apply_covector(xi, w):
    return sum((a * rational(b) for a, b in zip(xi, w)), Fraction(0))


def content_reduce(col):
    """Divide an integer-cleared column by its content (for projective use)."""
    col = [rational(x) for x in col]
    d = lcm(*(x.denominator for x in col))
    ints = [int(x * d) for x in col]
    g = gcd(*ints)
    if g == 0:
        return tuple(Fraction(0) for _ in col)
    return tuple(Fraction(v, g) for v in ints)

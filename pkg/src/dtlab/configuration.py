"""Configurations of vectors/points over exact rationals.

A Configuration is a concrete m x n rational matrix whose columns are the
vectors v_1..v_n; all group-quotient semantics (GL_m, per-column scaling)
live in equal_projective.  The geometric DT and * maps are built from the
covector xi_i = the functional vanishing on the m-1 cyclically consecutive
columns indexed by [n-i+2, n-i+m].
"""

from fractions import Fraction
from itertools import combinations

from .rational import (Matrix, content_reduce, det_rows, format_rational,
                       rational, xi_covector)
from .quiver import ClusterPoint
from .bipartite import cyclic_interval, quiver_from_graph


class DegenerateError(ValueError):
    pass


class Configuration:
    def __init__(self, m, n, columns, flavor="projective"):
        self.m = m
        self.n = n
        self.columns = tuple(tuple(rational(x) for x in col) for col in columns)
        if len(self.columns) != n or any(len(c) != m for c in self.columns):
            raise ValueError("need n columns of length m")
        if any(all(x == 0 for x in c) for c in self.columns):
            raise ValueError("zero column")
        if flavor not in ("vector", "projective"):
            raise ValueError("unknown flavor %r" % (flavor,))
        self.flavor = flavor

    def column(self, i):
        """Column i with cyclic index normalization to 1..n."""
        return self.columns[(i - 1) % self.n]

    def __eq__(self, other):
        return (isinstance(other, Configuration) and self.m == other.m
                and self.n == other.n and self.columns == other.columns)

    def __repr__(self):
        return "Configuration(m=%d, n=%d, %s)" % (self.m, self.n, self.flavor)

    def to_json(self):
        return {"m": self.m, "n": self.n, "flavor": self.flavor,
                "columns": [[format_rational(x) for x in col]
                            for col in self.columns]}

    @classmethod
    def from_json(cls, data):
        return cls(data["m"], data["n"], data["columns"],
                   data.get("flavor", "projective"))


def plucker(c, subset):
    """Plucker coordinate Delta_I: determinant of columns I in ascending order."""
    subset = sorted(set(subset))
    if len(subset) != c.m:
        raise ValueError("need an m-element index set")
    return det_rows([tuple(c.column(i)[r] for i in subset) for r in range(c.m)])


def genericity(c, mode="consecutive"):
    if mode == "consecutive":
        subsets = [sorted(cyclic_interval(i, i + c.m - 1, c.n))
                   for i in range(1, c.n + 1)]
    elif mode == "total":
        subsets = combinations(range(1, c.n + 1), c.m)
    else:
        raise ValueError("unknown mode %r" % (mode,))
    return all(plucker(c, s) != 0 for s in subsets)


def xi_vector(c, i):
    """The covector xi_i (as a coordinate vector): vanishes on the columns
    indexed by the cyclic window [n-i+2, n-i+m], taken in ascending cyclic
    order, signed by (-1)^(m-i) for i in [1,m]."""
    n, m = c.n, c.m
    window = [(n - i + 2 + t - 1) % n + 1 for t in range(m - 1)]
    xi, degenerate = xi_covector([c.column(j) for j in window])
    if degenerate:
        raise DegenerateError("consecutive columns %r are dependent" % (window,))
    i = (i - 1) % n + 1
    if i <= m and (m - i) % 2 == 1:
        xi = tuple(-x for x in xi)
    return xi


def dt_geometric(c):
    """The geometric DT lift [v_1..v_n] -> [xi_m..xi_1, xi_n..xi_{m+1}]."""
    m, n = c.m, c.n
    order = list(range(m, 0, -1)) + list(range(n, m, -1))
    return Configuration(m, n, [xi_vector(c, i) for i in order], c.flavor)


def star_geometric(c):
    """The involutive * map: [v_1..v_n] -> [xi_1(c'), ..., xi_n(c')] where
    c' is c cyclically shifted by 2m (output column i spans the dual of the
    hyperplane through the m-1 columns before it in reversed cyclic order,
    in the convention matched to psi_coords; see the * expression test)."""
    d = shift(c, (2 * c.m) % c.n)
    return Configuration(c.m, c.n,
                         [xi_vector(d, i) for i in range(1, c.n + 1)], c.flavor)


def shift(c, k):
    """Cyclic shift forward by k: new column j is the old column j-k."""
    return Configuration(c.m, c.n,
                         [c.column(j - k) for j in range(1, c.n + 1)], c.flavor)


def psi_coords(c, g):
    """X-coordinates of the configuration on the graph's quiver.

    A_h = Delta over the chart set of every face h (the dominating set in
    strand-source labels); X_f = prod_h A_h^(eps_fh) over all faces of the
    full quiver, reported for interior faces only.
    """
    if (c.m, c.n) != (g.m, g.n):
        raise ValueError("configuration and graph have different parameters")
    seed = quiver_from_graph(g)
    a_val = {}
    for f in g.faces():
        a_val[f.id] = plucker(c, f.chart_set)
        if a_val[f.id] == 0:
            raise DegenerateError("vanishing minor at face %s" % f.id)
    values = {}
    for f in g.faces():
        if f.boundary:
            continue
        x = Fraction(1)
        for h in g.faces():
            e = seed.epsilon(f.id, h.id)
            if e:
                x *= a_val[h.id] ** e
        values[f.id] = x
    return ClusterPoint("rational", values)


def _inverse(cols):
    """Inverse of the square matrix with the given columns (Gaussian)."""
    m = len(cols)
    a = [[cols[j][i] for j in range(m)] + [Fraction(int(k == i)) for k in range(m)]
         for i in range(m)]
    for i in range(m):
        piv = next((r for r in range(i, m) if a[r][i] != 0), None)
        if piv is None:
            return None
        a[i], a[piv] = a[piv], a[i]
        inv = 1 / a[i][i]
        a[i] = [x * inv for x in a[i]]
        for r in range(m):
            if r != i and a[r][i] != 0:
                f = a[r][i]
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return [[a[i][m + j] for j in range(m)] for i in range(m)]


def _apply(mat, v):
    return tuple(sum((row[k] * v[k] for k in range(len(v))), Fraction(0))
                 for row in mat)


def _normalize_column(col):
    col = content_reduce(col)
    lead = next((x for x in col if x != 0), None)
    if lead is not None and lead < 0:
        col = tuple(-x for x in col)
    return col


def canonical_projective_form(c):
    """Frame normalization: columns 1..m become the standard basis, column
    m+1 the all-ones vector; remaining columns are content-reduced with
    positive leading entry.  Returns None when the frame is unavailable."""
    m = c.m
    inv = _inverse([c.column(i) for i in range(1, m + 1)])
    if inv is None:
        return None
    w = _apply(inv, c.column(m + 1))
    if any(x == 0 for x in w):
        return None
    scaled = [[row[k] / w[r] for k, x in enumerate(row)]
              for r, row in enumerate(inv)]
    return tuple(_normalize_column(_apply(scaled, c.column(j)))
                 for j in range(m + 2, c.n + 1))


def canonical_representative(c):
    """A projectively equal configuration with small entries: columns 1..m
    are the standard basis, column m+1 all ones, the rest content-reduced.
    Falls back to plain column reduction when the frame is unavailable."""
    form = canonical_projective_form(c)
    if form is None:
        return Configuration(c.m, c.n,
                             [_normalize_column(col) for col in c.columns],
                             c.flavor)
    basis = [tuple(Fraction(int(r == k)) for r in range(c.m))
             for k in range(c.m)]
    ones = tuple(Fraction(1) for _ in range(c.m))
    return Configuration(c.m, c.n, basis + [ones] + list(form), c.flavor)


def equal_projective(ca, cb):
    """Equality in Conf_n(P^(m-1)): up to GL_m and per-column scaling."""
    if (ca.m, ca.n) != (cb.m, cb.n):
        return False
    fa, fb = canonical_projective_form(ca), canonical_projective_form(cb)
    if fa is not None and fb is not None:
        return fa == fb
    return _equal_by_plucker_ratios(ca, cb)


def _equal_by_plucker_ratios(ca, cb):
    """Fallback: decide whether Delta_I(cb)/Delta_I(ca) is of the monomial
    form c * prod_{i in I} lambda_i over all m-subsets I."""
    m, n = ca.m, ca.n
    subsets = [frozenset(s) for s in combinations(range(1, n + 1), m)]
    da = {s: plucker(ca, s) for s in subsets}
    db = {s: plucker(cb, s) for s in subsets}
    for s in subsets:
        if (da[s] == 0) != (db[s] == 0):
            return False
    base = next((s for s in subsets if da[s] != 0), None)
    if base is None:
        return False
    # recover lambda ratios relative to the base subset
    lam = {}
    b0 = min(base)
    lam[b0] = Fraction(1)
    for j in range(1, n + 1):
        if j in lam:
            continue
        if j not in base:
            s = base - {b0} | {j}
            if da[s] == 0:
                return False
            lam[j] = (db[s] / da[s]) / (db[base] / da[base])
        else:
            probe = next(p for p in range(1, n + 1) if p not in base)
            s1 = base - {j} | {probe}
            s0 = base - {b0} | {probe}
            if da[s1] == 0 or da[s0] == 0:
                return False
            lam[j] = (db[s0] / da[s0]) / (db[s1] / da[s1])
    prod_base = Fraction(1)
    for b in base:
        prod_base *= lam[b]
    const = (db[base] / da[base]) / prod_base
    for s in subsets:
        if da[s] == 0:
            continue
        expect = const
        for i in s:
            expect *= lam[i]
        if db[s] / da[s] != expect:
            return False
    return True


def random_configuration(m, n, rng, mode="total", flavor="projective"):
    """Random integer configuration, rejection-sampled until generic."""
    while True:
        cols = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        try:
            c = Configuration(m, n, cols, flavor)
        except ValueError:
            continue
        if genericity(c, mode):
            return c

"""Seeds (quivers with skew-symmetric exchange matrix) and cluster mutation.

A seed is a vertex list plus the sparse skew-symmetric matrix epsilon;
arrows i -> j encode epsilon_ij > 0.  Cluster points are coordinate maps
over any exact carrier (Fraction, RatFunc, or tropical integers); the
mutation formulas are written generically so the same code drives all of
them.
"""

from itertools import permutations


def _sign(x):
    return (x > 0) - (x < 0)


class Seed:
    """Immutable seed: ordered vertices, boundary flags, sparse epsilon."""

    def __init__(self, vertices, epsilon, boundary=()):
        self.vertices = tuple(vertices)
        self.boundary = frozenset(boundary)
        index = set(self.vertices)
        if self.boundary - index:
            raise ValueError("boundary vertices not in vertex list")
        eps = {}
        for (i, j), v in (epsilon.items() if isinstance(epsilon, dict) else epsilon):
            if v == 0 or i == j:
                continue
            if i not in index or j not in index:
                raise KeyError("epsilon entry on unknown vertex (%r,%r)" % (i, j))
            eps[(i, j)] = v
        for (i, j), v in list(eps.items()):
            if eps.get((j, i), 0) != -v:
                raise ValueError("epsilon is not skew-symmetric at (%r,%r)" % (i, j))
        self.eps = eps

    @classmethod
    def from_arrows(cls, vertices, arrows, boundary=()):
        eps = {}
        for i, j in arrows:
            eps[(i, j)] = eps.get((i, j), 0) + 1
            eps[(j, i)] = eps.get((j, i), 0) - 1
        return cls(vertices, eps, boundary)

    def epsilon(self, i, j):
        return self.eps.get((i, j), 0)

    def interior(self):
        return tuple(v for v in self.vertices if v not in self.boundary)

    def neighbors(self, k):
        return sorted({j for (i, j) in self.eps if i == k}, key=str)

    def degree_signature(self, k):
        outs = sorted(v for (i, _), v in self.eps.items() if i == k and v > 0)
        ins = sorted(-v for (i, _), v in self.eps.items() if i == k and v < 0)
        return (tuple(outs), tuple(ins))

    def __eq__(self, other):
        return (isinstance(other, Seed) and set(self.vertices) == set(other.vertices)
                and self.boundary == other.boundary and self.eps == other.eps)

    def __repr__(self):
        arrows = sorted(((i, j, v) for (i, j), v in self.eps.items() if v > 0), key=str)
        return "Seed(%d vertices, arrows=%r)" % (len(self.vertices), arrows)

    def relabel(self, sigma):
        """New seed with vertex i renamed sigma[i]."""
        return Seed([sigma[v] for v in self.vertices],
                    {(sigma[i], sigma[j]): v for (i, j), v in self.eps.items()},
                    [sigma[v] for v in self.boundary])

    def boundary_removed(self):
        keep = set(self.interior())
        return Seed(self.interior(),
                    {(i, j): v for (i, j), v in self.eps.items()
                     if i in keep and j in keep})

    def to_json(self):
        return {
            "vertices": [{"id": _vid(v), "boundary": v in self.boundary}
                         for v in self.vertices],
            "epsilon": [[_vid(i), _vid(j), v] for (i, j), v in sorted(
                self.eps.items(), key=lambda kv: (_vid(kv[0][0]), _vid(kv[0][1])))
                if _vid(i) < _vid(j)],
        }

    def to_dot(self):
        lines = ["digraph seed {"]
        for v in self.vertices:
            style = ' [style=dashed]' if v in self.boundary else ''
            lines.append('  "%s"%s;' % (_vid(v), style))
        for (i, j), v in sorted(self.eps.items(), key=lambda kv: str(kv[0])):
            for _ in range(max(v, 0)):
                lines.append('  "%s" -> "%s";' % (_vid(i), _vid(j)))
        lines.append("}")
        return "\n".join(lines)


def _vid(v):
    return v if isinstance(v, str) else str(v)


def seed_from_json(data):
    vertices = [d["id"] for d in data["vertices"]]
    boundary = [d["id"] for d in data["vertices"] if d.get("boundary")]
    eps = {}
    for i, j, v in data["epsilon"]:
        eps[(i, j)] = v
        eps[(j, i)] = -v
    return Seed(vertices, eps, boundary)


def mutate_seed(s, k):
    """Seed mutation mu_k (three-case exchange-matrix formula)."""
    if k not in set(s.vertices):
        raise KeyError("unknown vertex %r" % (k,))
    eps = {}
    for i in s.vertices:
        for j in s.vertices:
            if i == j:
                continue
            e = s.epsilon(i, j)
            if k in (i, j):
                v = -e
            else:
                eik, ekj = s.epsilon(i, k), s.epsilon(k, j)
                v = e + abs(eik) * ekj if eik * ekj > 0 else e
            if v:
                eps[(i, j)] = v
    return Seed(s.vertices, eps, s.boundary)


class ClusterPoint:
    """Coordinates on a seed torus: carrier in {rational, ratfunc, tropical}."""

    def __init__(self, carrier, values):
        self.carrier = carrier
        self.values = dict(values)

    def __getitem__(self, k):
        return self.values[k]

    def __eq__(self, other):
        return (isinstance(other, ClusterPoint) and self.carrier == other.carrier
                and self.values == other.values)

    def relabel(self, sigma):
        return ClusterPoint(self.carrier, {sigma[v]: x for v, x in self.values.items()})

    def __repr__(self):
        return "ClusterPoint(%s, %r)" % (self.carrier, self.values)


def mutate_x(s, p, k):
    """Cluster X-mutation at k, using the pre-mutation epsilon of s."""
    xk = p[k]
    new = {}
    for i in s.vertices:
        if i == k:
            new[i] = 1 / xk if p.carrier == "rational" else xk ** (-1)
            continue
        e = s.epsilon(i, k)
        if e == 0:
            new[i] = p[i]
        else:
            new[i] = p[i] * (1 + xk ** (-_sign(e))) ** (-e)
    return ClusterPoint(p.carrier, new)


def mutate_a(s, p, k):
    """Cluster A-mutation at k: only coordinate k changes."""
    pos = 1
    neg = 1
    for j in s.vertices:
        e = s.epsilon(k, j)
        if e > 0:
            pos = pos * p[j] ** e
        elif e < 0:
            neg = neg * p[j] ** (-e)
    new = dict(p.values)
    new[k] = (pos + neg) * p[k] ** (-1) if p.carrier == "ratfunc" else (pos + neg) / p[k]
    return ClusterPoint(p.carrier, new)


def mutate_trop(s, p, k):
    """Naive tropicalization of the X-mutation (max-plus integers)."""
    xk = p[k]
    new = {}
    for i in s.vertices:
        if i == k:
            new[i] = -xk
        else:
            e = s.epsilon(i, k)
            new[i] = p[i] - e * max(0, -_sign(e) * xk)
    return ClusterPoint("tropical", new)


def p_map(s, a):
    """The monomial map X_i = prod_j A_j^{eps_ij} from A- to X-coordinates."""
    values = {}
    for i in s.vertices:
        x = a[i] ** 0 if a.carrier == "ratfunc" else 1
        for j in s.vertices:
            e = s.epsilon(i, j)
            if e:
                x = x * a[j] ** e
        values[i] = x
    return ClusterPoint(a.carrier, values)


def grid_seed(p, q):
    """The boundary-removed reference quiver: a p x q grid with diagonals.

    Vertices (i,j), 1<=i<=p, 1<=j<=q; arrows (i,j)->(i,j+1), (i,j)->(i+1,j)
    and the reverse diagonals (i+1,j+1)->(i,j).
    """
    if p < 1 or q < 1:
        raise ValueError("grid dimensions must be positive")
    vertices = [(i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
    arrows = []
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            if j < q:
                arrows.append(((i, j), (i, j + 1)))
            if i < p:
                arrows.append(((i, j), (i + 1, j)))
            if i < p and j < q:
                arrows.append(((i + 1, j + 1), (i, j)))
    return Seed.from_arrows(vertices, arrows)


def seed_isomorphic(a, b, sigma):
    """Check that sigma: vertices(a) -> vertices(b) preserves epsilon."""
    va, vb = set(a.vertices), set(b.vertices)
    if set(sigma) != va or set(sigma.values()) != vb or len(vb) != len(va):
        raise ValueError("sigma is not a bijection of the vertex sets")
    return all(b.epsilon(sigma[i], sigma[j]) == a.epsilon(i, j)
               for i in a.vertices for j in a.vertices)


def find_seed_iso(a, b):
    """Brute-force a seed isomorphism (desk scale, <= 12 vertices)."""
    if len(a.vertices) != len(b.vertices):
        return None
    if len(a.vertices) > 12:
        raise ValueError("find_seed_iso is limited to 12 vertices")
    # prune by in/out degree signature
    sig_a = {v: a.degree_signature(v) for v in a.vertices}
    sig_b = {v: b.degree_signature(v) for v in b.vertices}
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return None
    candidates = {v: [w for w in b.vertices if sig_b[w] == sig_a[v]]
                  for v in a.vertices}
    order = sorted(a.vertices, key=lambda v: len(candidates[v]))

    def extend(idx, sigma, used):
        if idx == len(order):
            return dict(sigma)
        v = order[idx]
        for w in candidates[v]:
            if w in used:
                continue
            if any(b.epsilon(sigma[u], w) != a.epsilon(u, v) for u in sigma):
                continue
            sigma[v] = w
            used.add(w)
            found = extend(idx + 1, sigma, used)
            if found:
                return found
            del sigma[v]
            used.discard(w)
        return None

    return extend(0, {}, set())

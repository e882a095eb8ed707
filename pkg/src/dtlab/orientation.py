"""Special perfect orientation and the boundary measurement map.

Every black vertex is trivalent and is surrounded by three zig-zag strands;
the edge opposite the strand whose *starting* index is the middle one (in
the linear order on 1..n) is the unique edge leaving the black vertex.
White vertices then have exactly one incoming edge, external edges filling
in whenever the internal edges fail to provide one.  The resulting
orientation is acyclic with source set [1, m].
"""

from .bipartite import is_mp, mp


class SpecialOrientation:
    """An orientation as a set of oriented darts (one per non-arc edge)."""

    def __init__(self, graph, oriented):
        self.graph = graph
        self.oriented = frozenset(oriented)
        self.out_darts = {}
        for (u, v) in self.oriented:
            self.out_darts.setdefault(u, []).append((u, v))

    def direction(self, edge):
        u, v = tuple(edge)
        return (u, v) if (u, v) in self.oriented else (v, u)

    def sources(self):
        return sorted(i for i in range(1, self.graph.n + 1)
                      if self.graph.external[i] in self.oriented)

    def sinks(self):
        return sorted(i for i in range(1, self.graph.n + 1)
                      if self.graph.external[i] not in self.oriented)


def special_orientation(g):
    an = g.analysis()
    # which strand travels each dart (darts of strands cover every non-arc
    # dart exactly once)
    strand_of = {}
    for z in an.strands:
        for d in z.darts:
            strand_of[d] = z
    oriented = set()
    for b, c in g.color.items():
        if c != "black":
            continue
        darts = g.rot[b]
        if len(darts) != 3:
            raise ValueError("black vertex %r is not trivalent" % (b,))
        # strand opposite edge e: the one through b that avoids e
        starts = []
        for d in darts:
            through = {strand_of[d2].start for d2 in darts if d2 != d}
            through |= {strand_of[(d2[1], d2[0])].start for d2 in darts if d2 != d}
            avoid = through - {strand_of[d].start, strand_of[(d[1], d[0])].start}
            if len(avoid) != 1:
                raise ValueError("cannot identify opposite strand at %r" % (b,))
            starts.append(avoid.pop())
        middle = sorted(starts)[1]
        for d, s in zip(darts, starts):
            if s == middle:
                oriented.add(d)            # out of the black vertex
            else:
                oriented.add((d[1], d[0]))  # into the black vertex
    # external edges: each white needs exactly one incoming edge
    for w, c in g.color.items():
        if c != "white":
            continue
        incoming = sum(1 for d in g.rot[w] if (d[1], d[0]) in oriented)
        ext = [d for d in g.rot[w] if is_mp(d[1])]
        if ext:
            if incoming == 0:
                oriented.add((ext[0][1], ext[0][0]))  # marked point is a source
            elif incoming == 1:
                oriented.add(ext[0])                  # marked point is a sink
            else:
                raise ValueError("white vertex %r has %d incoming internal "
                                 "edges" % (w, incoming))
        elif incoming != 1:
            raise ValueError("white vertex %r has %d incoming edges"
                             % (w, incoming))
    orient = SpecialOrientation(g, oriented)
    if orient.sources() != list(range(1, g.m + 1)):
        raise AssertionError("source set %r is not [1,m]" % (orient.sources(),))
    _assert_acyclic(orient)
    return orient


def _assert_acyclic(orient):
    g = orient.graph
    indeg = {v: 0 for v in g.color}
    for (u, v) in orient.oriented:
        if not is_mp(v) and not is_mp(u):
            indeg[v] += 1
    queue = [v for v, k in indeg.items() if k == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for d in orient.out_darts.get(v, ()):
            u = d[1]
            if is_mp(u):
                continue
            indeg[u] -= 1
            if indeg[u] == 0:
                queue.append(u)
    if seen != len(g.color):
        raise AssertionError("special perfect orientation has a cycle")


def enumerate_paths(orient, i, j):
    """All oriented paths from source i to sink j, as dart sequences."""
    g = orient.graph
    start = g.external[i]
    if start not in orient.oriented:
        raise ValueError("marked point %d is not a source" % i)
    paths = []
    stack = [[start]]
    while stack:
        path = stack.pop()
        v = path[-1][1]
        if is_mp(v):
            if v[1] == j:
                paths.append(path)
            continue
        for d in orient.out_darts.get(v, ()):
            stack.append(path + [d])
    return paths


def path_dominated_faces(g, path):
    """Faces lying on the right of the path (flood fill blocked at the path)."""
    an = g.analysis()
    blocked = {frozenset(d) for d in path}
    seeds = {an.face_right_of_dart(d).id for d in path}
    adjacency = {}
    for e in g.edges():
        if e in blocked:
            continue
        u, v = tuple(e)
        a, b = an.face_of_dart((u, v)).id, an.face_of_dart((v, u)).id
        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        f = stack.pop()
        for f2 in adjacency.get(f, ()):
            if f2 not in seen:
                seen.add(f2)
                stack.append(f2)
    seen.discard("outer")
    left = {an.face_of_dart(d).id for d in path}
    if left & seen:
        raise AssertionError("path does not split the disk cleanly")
    return seen


def boundary_measurement(g, X, one=1):
    """The m x n boundary measurement matrix [M_ij] in the coefficients X.

    X maps face ids to values in any exact coefficient ring; `one` is the
    ring unit (pass RatFunc.one() for symbolic computations).  Column j <= m
    is the standard basis; column j > m has entries
    (-1)^(m-i) * sum over paths i -> j of the product of X over the faces
    dominated by the path.
    """
    orient = special_orientation(g)
    m, n = g.m, g.n
    zero = one - one
    cols = []
    for j in range(1, n + 1):
        if j <= m:
            cols.append(tuple(one if i == j else zero for i in range(1, m + 1)))
            continue
        col = []
        for i in range(1, m + 1):
            total = zero
            for path in enumerate_paths(orient, i, j):
                term = one
                for f in path_dominated_faces(g, path):
                    term = term * X[f]
                total = total + term
            sign = 1 if (m - i) % 2 == 0 else -1
            col.append(total * sign if sign > 0 else zero - total)
        cols.append(tuple(col))
    return cols

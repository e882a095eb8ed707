"""Bipartite graphs embedded in the marked disk.

The disk is purely combinatorial: a rotation system (counterclockwise cyclic
order of neighbors at every vertex) together with n marked boundary points
labeled 1..n in clockwise order.  Marked points are modeled as degree-3
vertices joined by boundary arcs, which lets faces be read off as orbits of
the usual face permutation; the orbit consisting of ascending arc darts is
the region outside the disk.

Darts are ordered pairs (tail, head); with counterclockwise rotations the
face lying on the left of a dart is the orbit of phi(d) = sigma^{-1}(twin(d)).
"""

from math import atan2

from .quiver import Seed


def mp(i):
    return ("mp", i)


def is_mp(v):
    return isinstance(v, tuple) and len(v) == 2 and v[0] == "mp"


def cyclic_interval(a, b, n):
    """The set {a, a+1, ..., b} of residues taken in 1..n."""
    out = []
    x = (a - 1) % n + 1
    while True:
        out.append(x)
        if x == (b - 1) % n + 1:
            break
        x = x % n + 1
    return frozenset(out)


class ZigZag:
    def __init__(self, start, end, darts):
        self.start = start
        self.end = end
        self.darts = tuple(darts)

    def edges(self):
        return {frozenset(d) for d in self.darts}

    def __repr__(self):
        return "ZigZag(%d -> %d, %d darts)" % (self.start, self.end, len(self.darts))


class Face:
    def __init__(self, fid, kind, darts, arc=None, plucker_set=None,
                 dominating_set=None, grid=None, chart_set=None):
        self.id = fid
        self.kind = kind            # interior | boundary | outer
        self.darts = tuple(darts)
        self.arc = arc              # boundary faces: p for the arc (p, p+1)
        self.plucker_set = plucker_set
        self.dominating_set = dominating_set
        self.grid = grid
        # the Plucker index set of the chart attached to the face: the
        # dominating strands labeled by their *starting* marked points
        # (the terminal-label set shifted by -m)
        self.chart_set = chart_set

    @property
    def boundary(self):
        return self.kind == "boundary"

    def __repr__(self):
        return "Face(%s, %s)" % (self.id, self.kind)


def gamma0_grid_table(m, n):
    """Plucker set -> grid label for every face of Gamma_0's quiver."""
    table = {cyclic_interval(1, m, n): (0, 0)}
    for i in range(1, n - m + 1):
        for j in range(1, m + 1):
            s = frozenset()
            if j < m:
                s |= cyclic_interval(1, m - j, n)
            s |= cyclic_interval(m + i - j + 1, m + i, n)
            table[s] = (i, j)
    if len(table) != (n - m) * m + 1:
        raise AssertionError("grid labels collide for (m,n)=(%d,%d)" % (m, n))
    return table


class DiskGraph:
    """Immutable embedded bipartite graph with marked boundary points."""

    def __init__(self, m, n, color, rot_spec):
        self.m = m
        self.n = n
        self.color = dict(color)
        rot = {}
        externals = {}
        for v, nbrs in rot_spec.items():
            if v not in self.color:
                raise ValueError("rotation for unknown vertex %r" % (v,))
            rot[v] = tuple((v, u) for u in nbrs)
            for u in nbrs:
                if is_mp(u):
                    i = u[1]
                    if i in externals:
                        raise ValueError("marked point %d attached twice" % i)
                    if self.color[v] != "white":
                        raise ValueError("external edge at a non-white vertex %r" % (v,))
                    externals[i] = v
        if set(externals) != set(range(1, n + 1)):
            raise ValueError("need exactly one external edge per marked point")
        # marked points: counterclockwise order at mp(i) is
        # [arc to i-1, external edge, arc to i+1] (labels run clockwise).
        for i in range(1, n + 1):
            prev = (i - 2) % n + 1
            nxt = i % n + 1
            rot[mp(i)] = ((mp(i), mp(prev)), (mp(i), externals[i]), (mp(i), mp(nxt)))
        self.rot = rot
        self.external = {i: (mp(i), externals[i]) for i in range(1, n + 1)}
        self._rot_pos = {d: (v, k) for v, darts in rot.items()
                         for k, d in enumerate(darts)}
        # symmetry check: (u,v) is a dart iff (v,u) is
        for d in self._rot_pos:
            if (d[1], d[0]) not in self._rot_pos:
                raise ValueError("rotation system is not symmetric at %r" % (d,))
        self._analysis = None

    # -- dart navigation -------------------------------------------------
    def sigma(self, d):
        v, k = self._rot_pos[d]
        darts = self.rot[v]
        return darts[(k + 1) % len(darts)]

    def sigma_inv(self, d):
        v, k = self._rot_pos[d]
        darts = self.rot[v]
        return darts[(k - 1) % len(darts)]

    def darts(self):
        return list(self._rot_pos)

    def internal_vertices(self):
        return [v for v in self.color]

    def vertices_of_color(self, c):
        return [v for v, col in self.color.items() if col == c]

    def neighbors(self, v):
        return [d[1] for d in self.rot[v]]

    def degree(self, v):
        return len(self.rot[v])

    def edges(self):
        """Non-arc edges as frozensets {u, v}."""
        out = set()
        for (u, v) in self._rot_pos:
            if is_mp(u) and is_mp(v):
                continue
            out.add(frozenset((u, v)))
        return out

    # -- faces -----------------------------------------------------------
    def face_cycles(self):
        """Orbits of phi(d) = sigma_inv(twin(d)): each face as its dart cycle,
        with the face lying on the left of every dart in its cycle."""
        seen = set()
        cycles = []
        for d0 in self._rot_pos:
            if d0 in seen:
                continue
            cyc = []
            d = d0
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = self.sigma_inv((d[1], d[0]))
            cycles.append(tuple(cyc))
        return cycles

    # -- zig-zag strands ---------------------------------------------------
    def trace_zigzags(self):
        """One strand per marked point; turn right at black, left at white."""
        strands = []
        used = set()
        for i in range(1, self.n + 1):
            d = self.external[i]
            darts = []
            while True:
                darts.append(d)
                if d in used:
                    raise ValueError("zig-zag trace revisits a dart; "
                                     "malformed rotation system")
                used.add(d)
                v = d[1]
                if is_mp(v):
                    strands.append(ZigZag(i, v[1], darts))
                    break
                back = (d[1], d[0])
                if self.color[v] == "black":
                    d = self.sigma(back)       # turn right at black
                else:
                    d = self.sigma_inv(back)   # turn left at white
        return strands

    # -- full analysis -----------------------------------------------------
    def analysis(self):
        if self._analysis is None:
            self._analysis = _Analysis(self)
        return self._analysis

    def faces(self):
        return [f for f in self.analysis().faces if f.kind != "outer"]

    def face_by_id(self, fid):
        return self.analysis().by_id[fid]

    # -- serialization -----------------------------------------------------
    def edge_ids(self):
        edges = sorted(self.edges(), key=lambda e: sorted(map(str, e)))
        return {e: "e%d" % k for k, e in enumerate(edges)}

    def to_json(self):
        eid = self.edge_ids()
        return {
            "m": self.m,
            "n": self.n,
            "vertices": [{"id": str(v), "color": self.color[v]}
                         for v in sorted(self.color, key=str)],
            "rotation": {str(v): [eid[frozenset(d)] for d in self.rot[v]]
                         for v in sorted(self.color, key=str)},
            "external": {str(i): eid[frozenset(self.external[i])]
                         for i in range(1, self.n + 1)},
        }

    def to_dot(self):
        eid = self.edge_ids()
        lines = ["graph disk {"]
        for v in sorted(self.color, key=str):
            shape = "point" if self.color[v] == "black" else "circle"
            lines.append('  "%s" [shape=%s];' % (v, shape))
        for i in range(1, self.n + 1):
            lines.append('  "mp%d" [shape=plaintext];' % i)
        done = set()
        for (u, v) in self._rot_pos:
            e = frozenset((u, v))
            if e in done or (is_mp(u) and is_mp(v)):
                continue
            done.add(e)
            a = '"mp%d"' % u[1] if is_mp(u) else '"%s"' % (u,)
            b = '"mp%d"' % v[1] if is_mp(v) else '"%s"' % (v,)
            lines.append("  %s -- %s [label=%s];" % (a, b, eid[e]))
        lines.append("}")
        return "\n".join(lines)


class _Analysis:
    """Faces, strands, dominating sets, and side information for a graph."""

    def __init__(self, g):
        self.graph = g
        cycles = g.face_cycles()
        # the region outside the disk is the face on the left of the
        # clockwise (ascending) arc darts
        outer = None
        for cyc in cycles:
            if all(is_mp(u) and is_mp(v) for (u, v) in cyc):
                if any(v[1] != u[1] % g.n + 1 for (u, v) in cyc):
                    raise AssertionError("outer face orientation check failed")
                outer = cyc
        if outer is None:
            raise AssertionError("no outer face found")

        self.strands = g.trace_zigzags()
        strand_by_end = {}
        for z in self.strands:
            strand_by_end[z.end] = z

        # left/right regions of each strand (flood fill in the face-dual,
        # blocked across edges the strand travels along)
        raw = []          # (kind, darts, arc_p) per face, pre-naming
        face_index = {}   # dart -> position in raw
        for cyc in cycles:
            if cyc == outer:
                continue
            arcs = [(u, v) for (u, v) in cyc if is_mp(u) and is_mp(v)]
            if arcs:
                # boundary face: left of descending arc darts (p+1 -> p)
                if len(arcs) != 1:
                    raise AssertionError("boundary face touches several arcs")
                (u, v) = arcs[0]
                if u[1] != v[1] % g.n + 1:
                    raise AssertionError("boundary arc orientation check failed")
                raw.append(("boundary", cyc, v[1]))
            else:
                raw.append(("interior", cyc, None))
            for d in cyc:
                face_index[d] = len(raw) - 1
        self._face_index = face_index

        adjacency = {k: set() for k in range(len(raw))}
        for e in g.edges():
            u, v = tuple(e)
            a, b = face_index[(u, v)], face_index[(v, u)]
            adjacency[a].add(frozenset((u, v)))
            adjacency[b].add(frozenset((u, v)))
        edge_sides = {}
        for e in g.edges():
            u, v = tuple(e)
            edge_sides[e] = (face_index[(u, v)], face_index[(v, u)])

        def flood(seeds, blocked):
            seen = set(seeds)
            stack = list(seeds)
            while stack:
                f = stack.pop()
                for e in adjacency[f]:
                    if e in blocked:
                        continue
                    a, b = edge_sides[e]
                    nxt = b if a == f else a
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            return seen

        left_regions = {}
        for z in self.strands:
            blocked = z.edges()
            left = flood({face_index[d] for d in z.darts}, blocked)
            right = flood({face_index[(v, u)] for (u, v) in z.darts}, blocked)
            if left & right or len(left) + len(right) != len(raw):
                raise AssertionError(
                    "strand %d->%d does not split the disk cleanly "
                    "(non-minimal graph?)" % (z.start, z.end))
            left_regions[z.end] = left

        # plucker sets are the region-left indices; the dominating set of a
        # boundary face on the arc (p, p+1) additionally includes the strand
        # terminating at p (both faces flanking a strand's endpoint lie
        # weakly on its left)
        faces = []
        table = gamma0_grid_table(g.m, g.n)
        names = {}
        for k, (kind, cyc, arc_p) in enumerate(raw):
            pluck = frozenset(i for i, reg in left_regions.items() if k in reg)
            dom = pluck | {arc_p} if kind == "boundary" else pluck
            grid = table.get(pluck)
            if grid is not None:
                fid = "f_%d_%d" % grid
            elif kind == "boundary":
                fid = "fb_%d" % arc_p
            else:
                fid = "I_" + "_".join(str(x) for x in sorted(pluck))
            while fid in names:
                fid += "x"
            names[fid] = k
            chart = frozenset((i - g.m - 1) % g.n + 1 for i in pluck)
            faces.append(Face(fid, kind, cyc, arc=arc_p, plucker_set=pluck,
                              dominating_set=dom, grid=grid, chart_set=chart))
        faces.append(Face("outer", "outer", outer))
        for d in outer:
            face_index[d] = len(raw)
        self.faces = faces
        self.by_id = {f.id: f for f in faces}

    def face_of_dart(self, d):
        """The face on the left of dart d."""
        return self.faces[self._face_index[d]]

    def face_right_of_dart(self, d):
        return self.faces[self._face_index[(d[1], d[0])]]


# ---------------------------------------------------------------------------
# Gamma_0 construction
# ---------------------------------------------------------------------------

def build_gamma0(m, n):
    """The reference minimal bipartite graph, built from the ladder pattern.

    Drawn with the m-1 ladder columns laid out as horizontal rows: black
    b(r,c) sits in row r (r = 1..m-1, bottom to top) and column c
    (c = 1..n-m); whites w(r,c) interleave below the blacks; one extra
    white W on top joins every black of the top row.  Marked points 1..m-1
    attach on the left, m at W, and m+1..n along the bottom from right to
    left.  Rotations are read off from the planar coordinates.
    """
    if not (1 < m < m + 1 < n):
        raise ValueError("need 1 < m < m+1 < n")
    pos = {}
    color = {}
    adj = {}

    def add(v, c, p):
        color[v] = c
        pos[v] = p
        adj[v] = []

    def join(u, v):
        adj[u].append(v)
        adj[v].append(u)

    W = "w_top"
    add(W, "white", (float(n - m + 1), float(2 * m)))
    for r in range(1, m):
        for c in range(1, n - m + 1):
            add(("b", r, c), "black", (2.0 * c, 2.0 * r))
        for c in range(1, n - m + 2):
            add(("w", r, c), "white", (2.0 * c - 1, 2.0 * r - 1))
    mp_pos = {}
    for r in range(1, m):
        for c in range(1, n - m + 1):
            b = ("b", r, c)
            join(b, ("w", r, c))
            join(b, ("w", r, c + 1))
            join(b, ("w", r + 1, c + 1) if r < m - 1 else W)
    def lab(i):
        # marked-point labels, rotated so face sets match the grid table
        return (i - 1 + n - m) % n + 1

    for r in range(1, m):
        adj[("w", r, 1)].append(mp(lab(r)))
        mp_pos[lab(r)] = (-1.0, 2.0 * r - 1)
    adj[W].append(mp(lab(m)))
    mp_pos[lab(m)] = (-1.0, 2.0 * m)
    for c in range(2, n - m + 2):
        adj[("w", 1, c)].append(mp(lab(n + 2 - c)))
        mp_pos[lab(n + 2 - c)] = (2.0 * c - 1, -1.0)

    rot_spec = {}
    for v, nbrs in adj.items():
        x0, y0 = pos[v]

        def angle(u):
            x1, y1 = mp_pos[u[1]] if is_mp(u) else pos[u]
            return atan2(y1 - y0, x1 - x0)

        rot_spec[v] = sorted(nbrs, key=angle)
    g = DiskGraph(m, n, color, rot_spec)
    nfaces = len(g.face_cycles()) - 1
    if nfaces != (n - m) * m + 1:
        raise AssertionError("Gamma_0 face count %d != %d" %
                             (nfaces, (n - m) * m + 1))
    return g


# ---------------------------------------------------------------------------
# minimality
# ---------------------------------------------------------------------------

def check_minimal(g):
    """Check conditions (1)-(5); returns (ok, list of violations)."""
    bad = []
    for v, c in g.color.items():
        if c == "black":
            if g.degree(v) != 3:
                bad.append("black vertex %r is not trivalent" % (v,))
            if any(is_mp(u) or g.color.get(u) != "white" for u in g.neighbors(v)):
                bad.append("black vertex %r has a non-white neighbor" % (v,))
        else:
            for u in g.neighbors(v):
                if not is_mp(u) and g.color.get(u) != "black":
                    bad.append("white-white edge at %r" % (v,))
    # connectivity of the internal graph
    if g.color:
        seen = set()
        stack = [next(iter(g.color))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(u for u in g.neighbors(v) if not is_mp(u) and u not in seen)
        if seen != set(g.color):
            bad.append("internal graph is disconnected")
    try:
        strands = g.trace_zigzags()
    except ValueError as exc:
        return False, bad + [str(exc)]
    for z in strands:
        if z.end != (z.start + g.m - 1) % g.n + 1:
            bad.append("strand %d ends at %d, expected %d"
                       % (z.start, z.end, (z.start + g.m - 1) % g.n + 1))
        edges = [frozenset(d) for d in z.darts]
        if len(edges) != len(set(edges)):
            bad.append("strand %d self-intersects" % z.start)
    # parallel bigon: two strands crossing twice with matching orientation
    # (strands cross exactly at shared edges, traversed in opposite directions)
    for a in range(len(strands)):
        za = strands[a]
        pos_a = {frozenset(d): k for k, d in enumerate(za.darts)}
        for b in range(a + 1, len(strands)):
            zb = strands[b]
            shared = [(pos_a[frozenset(d)], k) for k, d in enumerate(zb.darts)
                      if frozenset(d) in pos_a]
            for i in range(len(shared)):
                for j in range(i + 1, len(shared)):
                    if (shared[i][0] - shared[j][0]) * (shared[i][1] - shared[j][1]) > 0:
                        bad.append("parallel bigon between strands %d and %d"
                                   % (za.start, zb.start))
    return not bad, bad


# ---------------------------------------------------------------------------
# faces / dominating sets / quiver
# ---------------------------------------------------------------------------

def faces_and_dominating_sets(g):
    return g.faces()


def quiver_from_graph(g):
    """The quiver of the graph: a vertex per disk face, a counterclockwise
    3-cycle around each black vertex, opposite arrows cancelled."""
    an = g.analysis()
    eps = {}

    def bump(a, b, v):
        eps[(a, b)] = eps.get((a, b), 0) + v
        eps[(b, a)] = eps.get((b, a), 0) - v

    for v, c in g.color.items():
        if c != "black":
            continue
        ds = g.rot[v]
        fs = [an.face_of_dart(d).id for d in ds]
        for k in range(3):
            bump(fs[k], fs[(k + 1) % 3], 1)
    vertices = sorted((f.id for f in an.faces if f.kind != "outer"))
    boundary = [f.id for f in an.faces if f.kind == "boundary"]
    return Seed(vertices, eps, boundary)


# ---------------------------------------------------------------------------
# dualities
# ---------------------------------------------------------------------------

def _relabeled_mirror(g, rho):
    rot_spec = {}
    for v in g.color:
        nbrs = []
        for (_, u) in reversed(g.rot[v]):
            nbrs.append(mp(rho(u[1])) if is_mp(u) else u)
        rot_spec[v] = nbrs
    return DiskGraph(g.m, g.n, g.color, rot_spec)


def dual_reflect(g):
    """Reflection over the diameter bisecting the arc between n and 1."""
    return _relabeled_mirror(g, lambda i: g.n - i + 1)


def dual_star(g):
    """Reflection over the diameter bisecting the arc between m and m+1."""
    return _relabeled_mirror(g, lambda i: (g.m - i) % g.n + 1)


# ---------------------------------------------------------------------------
# Thurston 2<->2 moves
# ---------------------------------------------------------------------------

class MoveResult:
    def __init__(self, graph, face_map):
        self.graph = graph
        self.face_map = face_map

    def __iter__(self):
        return iter((self.graph, self.face_map))


class MoveError(ValueError):
    pass


_FRESH = [0]


def _fresh(prefix):
    _FRESH[0] += 1
    return (prefix, "new", _FRESH[0])


def square_move_locations(g):
    """Interior quadrilateral faces eligible for a Type I move."""
    out = []
    for f in g.faces():
        if f.kind != "interior" or len(f.darts) != 4:
            continue
        try:
            _square_pattern(g, f)
        except MoveError:
            continue
        out.append(f.id)
    return out


def _square_pattern(g, f):
    cyc = f.darts
    verts = [d[0] for d in cyc]
    if any(is_mp(v) for v in verts):
        raise MoveError("face %s touches the boundary" % f.id)
    cols = [g.color[v] for v in verts]
    if sorted(cols) != ["black", "black", "white", "white"] or cols[0] == cols[1]:
        raise MoveError("face %s is not an alternating square" % f.id)
    if cols[0] == "black":
        verts = verts[1:] + verts[:1]
    wA, bP, wB, bQ = verts
    if len(set(verts)) != 4:
        raise MoveError("degenerate square at %s" % f.id)
    if g.degree(bP) != 3 or g.degree(bQ) != 3:
        raise MoveError("square black vertices not trivalent at %s" % f.id)
    xP = next(u for u in g.neighbors(bP) if u not in (wA, wB))
    xQ = next(u for u in g.neighbors(bQ) if u not in (wA, wB))
    if is_mp(xP) or is_mp(xQ) or len({xP, xQ, wA, wB}) != 4:
        raise MoveError("square pendants collide at %s" % f.id)
    return wA, bP, wB, bQ, xP, xQ


def _replace_run(seq, old, new):
    """Replace the consecutive (cyclic) run `old` inside seq by `new`."""
    k = len(seq)
    for start in range(k):
        if all(seq[(start + t) % k] == old[t] for t in range(len(old))):
            rest = [seq[(start + len(old) + t) % k] for t in range(k - len(old))]
            return list(new) + rest
    raise MoveError("expected consecutive run %r not found" % (old,))


def apply_square_move(g, fid):
    f = g.face_by_id(fid)
    if f.kind != "interior":
        raise MoveError("Type I location must be an interior face")
    wA, bP, wB, bQ, xP, xQ = _square_pattern(g, f)
    cA, cB = _fresh("b"), _fresh("b")
    color = dict(g.color)
    del color[bP], color[bQ]
    color[cA] = color[cB] = "black"
    spec = {v: [u for (_, u) in g.rot[v]] for v in g.color if v not in (bP, bQ)}
    spec[wA] = _replace_run(spec[wA], [bP, bQ], [cA])
    spec[wB] = _replace_run(spec[wB], [bQ, bP], [cB])
    spec[xP] = _replace_run(spec[xP], [bP], [cB, cA])
    spec[xQ] = _replace_run(spec[xQ], [bQ], [cA, cB])
    spec[cA] = [wA, xP, xQ]
    spec[cB] = [xQ, xP, wB]
    g2 = DiskGraph(g.m, g.n, color, spec)
    face_map = _match_faces(g, g2, dead={bP, bQ},
                            center=(fid, (xQ, cA)))
    return MoveResult(g2, face_map)


def type2_move_locations(g):
    out = []
    for v, c in g.color.items():
        if c != "white" or g.degree(v) != 2:
            continue
        try:
            _type2_pattern(g, v)
        except MoveError:
            continue
        out.append(v)
    return out


def _type2_pattern(g, wC):
    nbrs = g.neighbors(wC)
    if len(nbrs) != 2 or any(is_mp(u) for u in nbrs):
        raise MoveError("not an internal degree-2 white")
    b1, b2 = nbrs
    if b1 == b2 or g.color[b1] != "black" or g.color[b2] != "black":
        raise MoveError("neighbors of %r are not two distinct blacks" % (wC,))
    if g.degree(b1) != 3 or g.degree(b2) != 3:
        raise MoveError("pattern blacks not trivalent")
    s1 = g.sigma((b1, wC))
    s2 = g.sigma(s1)
    A1, A2 = s1[1], s2[1]
    t1 = g.sigma((b2, wC))
    t2 = g.sigma(t1)
    B1, B2 = t1[1], t2[1]
    outer = [A1, A2, B1, B2]
    if any(is_mp(u) for u in outer):
        # boundary whites are fine; marked points cannot occur (bipartite)
        raise MoveError("unexpected marked point in pattern")
    if len(set(outer) | {wC}) != 5:
        raise MoveError("pattern whites collide at %r" % (wC,))
    return b1, b2, A1, A2, B1, B2


def apply_type2_move(g, wC):
    b1, b2, A1, A2, B1, B2 = _type2_pattern(g, wC)
    c1, c2 = _fresh("b"), _fresh("b")
    color = dict(g.color)
    del color[b1], color[b2]
    color[c1] = color[c2] = "black"
    spec = {v: [u for (_, u) in g.rot[v]] for v in g.color if v not in (b1, b2)}
    spec[wC] = [c1, c2]
    spec[A1] = _replace_run(spec[A1], [b1], [c2])
    spec[A2] = _replace_run(spec[A2], [b1], [c1])
    spec[B1] = _replace_run(spec[B1], [b2], [c1])
    spec[B2] = _replace_run(spec[B2], [b2], [c2])
    spec[c1] = [A2, B1, wC]
    spec[c2] = [wC, B2, A1]
    g2 = DiskGraph(g.m, g.n, color, spec)
    face_map = _match_faces(g, g2, dead={b1, b2, wC}, center=None)
    return MoveResult(g2, face_map)


def _match_faces(g, g2, dead, center):
    """Map face ids of g to face ids of g2 through darts surviving a move."""
    an, an2 = g.analysis(), g2.analysis()
    face_map = {}
    for f in an.faces:
        if f.kind == "outer":
            continue
        if center is not None and f.id == center[0]:
            face_map[f.id] = an2.face_of_dart(center[1]).id
            continue
        for d in f.darts:
            if d[0] not in dead and d[1] not in dead:
                face_map[f.id] = an2.face_of_dart(d).id
                break
        else:
            raise MoveError("face %s lost all its darts in the move" % f.id)
    if len(set(face_map.values())) != len(face_map):
        raise MoveError("face correspondence is not a bijection")
    return face_map


def apply_move(g, location, kind):
    if kind == "I":
        return apply_square_move(g, location)
    if kind == "II":
        return apply_type2_move(g, location)
    raise MoveError("unknown move kind %r" % (kind,))


# ---------------------------------------------------------------------------
# canonical form and move search
# ---------------------------------------------------------------------------

def canonical_key(g):
    """Canonical certificate of the embedded graph with labeled boundary.

    Breadth-first traversal from the external edge of marked point 1; at
    each vertex the rotation is read starting from the entry dart, which
    makes the certificate independent of internal vertex names.
    """
    start = mp(1)
    entry = {start: g.external[1]}
    num = {start: 0}
    order = [start]
    queue = [start]
    while queue:
        v = queue.pop(0)
        d0 = entry[v]
        darts = g.rot[v]
        k0 = darts.index(d0)
        for t in range(len(darts)):
            u = darts[(k0 + t) % len(darts)][1]
            if u not in num:
                num[u] = len(order)
                order.append(u)
                entry[u] = (u, v)
                queue.append(u)
    rows = []
    for v in order:
        d0 = entry[v]
        darts = g.rot[v]
        k0 = darts.index(d0)
        tag = ("mp", v[1]) if is_mp(v) else g.color[v][0]
        rows.append((tag, tuple(num[darts[(k0 + t) % len(darts)][1]]
                                for t in range(len(darts)))))
    return tuple(rows)


def canonical_face_order(g):
    """Face ids listed in a canonical-traversal order (matches between
    graphs with equal canonical_key)."""
    start = mp(1)
    entry = {start: g.external[1]}
    num = {start: 0}
    order = [start]
    queue = [start]
    dart_rank = {}
    while queue:
        v = queue.pop(0)
        d0 = entry[v]
        darts = g.rot[v]
        k0 = darts.index(d0)
        for t in range(len(darts)):
            d = darts[(k0 + t) % len(darts)]
            dart_rank[d] = len(dart_rank)
            if d[1] not in num:
                num[d[1]] = len(order)
                order.append(d[1])
                entry[d[1]] = (d[1], v)
                queue.append(d[1])
    an = g.analysis()
    ranked = []
    for f in an.faces:
        if f.kind == "outer":
            continue
        ranked.append((min(dart_rank[d] for d in f.darts), f.id))
    return [fid for _, fid in sorted(ranked)]


def find_move_sequence(a, b, budget=4000):
    """BFS over 2<->2 moves from a to b.

    Returns (moves, end_map) or None if the budget is exhausted.  Each move
    is ("I", face id of a-coordinates) or ("II", None); end_map sends face
    ids of a to face ids of b through the whole sequence.
    """
    if (a.m, a.n) != (b.m, b.n):
        raise ValueError("graphs have different parameters")
    target = canonical_key(b)

    def finish(g, amap, moves):
        iso = dict(zip(canonical_face_order(g), canonical_face_order(b)))
        return list(moves), {af: iso[cf] for af, cf in amap.items()}

    ident = {f.id: f.id for f in a.faces()}
    if canonical_key(a) == target:
        return finish(a, ident, ())
    seen = {canonical_key(a)}
    queue = [(a, ident, ())]
    expanded = 0
    while queue and expanded < budget:
        g, amap, moves = queue.pop(0)
        expanded += 1
        inv = {cur: af for af, cur in amap.items()}
        options = [("I", fid) for fid in square_move_locations(g)]
        options += [("II", w) for w in type2_move_locations(g)]
        for kind, loc in options:
            try:
                g2, fmap = apply_move(g, loc, kind)
            except MoveError:
                continue
            key = canonical_key(g2)
            if key in seen:
                continue
            seen.add(key)
            amap2 = {af: fmap[cur] for af, cur in amap.items()}
            move = (kind, inv[loc]) if kind == "I" else (kind, None)
            moves2 = moves + (move,)
            if key == target:
                return finish(g2, amap2, moves2)
            queue.append((g2, amap2, moves2))
    return None

"""Verification suites: the property checks behind the CLI `verify`
subcommand and the acceptance test battery.

Every suite returns a JSON-ready report {"name", "pass", "assertions":
[{"name", "pass", ...}]}; the lemma1 suite may instead report
{"exhausted": True} when the move search runs out of budget.
"""

import random
from fractions import Fraction
from itertools import combinations

from .bipartite import (apply_move, build_gamma0, check_minimal,
                        cyclic_interval, dual_reflect, find_move_sequence,
                        gamma0_grid_table, quiver_from_graph,
                        square_move_locations, type2_move_locations)
from .configuration import (Configuration, canonical_representative,
                            dt_geometric, equal_projective, plucker,
                            psi_coords, random_configuration, shift,
                            star_geometric)
from .laurent import RatFunc
from .orientation import boundary_measurement, special_orientation
from .quiver import (ClusterPoint, find_seed_iso, grid_seed, mutate_seed,
                     mutate_x, seed_isomorphic)
from .rational import det_rows
from .tropical import basic_lamination, check_dt_criterion_symbolic, \
    transport_with_seed
from .ysystem import y_period

GRAPH_SIZES = [(2, 4), (2, 5), (2, 6), (3, 6), (3, 7)]
PERIOD_SIZES = [(2, 5), (2, 6), (3, 6), (3, 7)]
SYMBOLIC_SIZES = [(2, 4), (2, 5), (2, 6), (3, 6)]
YSYSTEM_SIZES = [(1, 1), (2, 1), (1, 2), (2, 2)]


def _report(name, assertions):
    return {"name": name, "pass": all(a["pass"] for a in assertions),
            "assertions": assertions}


def _check(assertions, name, ok, **extra):
    entry = {"name": name, "pass": bool(ok)}
    entry.update(extra)
    assertions.append(entry)


def _lift(g, interior_values, boundary_value=Fraction(1)):
    return {f.id: (interior_values[f.id] if not f.boundary else boundary_value)
            for f in g.faces()}


def _measure_config(g, values):
    return Configuration(g.m, g.n,
                         boundary_measurement(g, values, one=Fraction(1)),
                         "vector")


def _random_interior(g, rng):
    return {f.id: Fraction(rng.randint(1, 9), rng.randint(1, 9))
            for f in g.faces() if not f.boundary}


# ---------------------------------------------------------------------------
# criterion 1
# ---------------------------------------------------------------------------

def suite_graph(sizes=GRAPH_SIZES):
    out = []
    for (m, n) in sizes:
        g = build_gamma0(m, n)
        ok, bad = check_minimal(g)
        _check(out, "minimal %s" % ((m, n),), ok, violations=bad)
        strands = g.trace_zigzags()
        _check(out, "strand targets %s" % ((m, n),),
               all(z.end == (z.start + m - 1) % n + 1 for z in strands))
        faces = g.faces()
        _check(out, "interior set sizes %s" % ((m, n),),
               all(len(f.dominating_set) == m
                   for f in faces if f.kind == "interior"))
        _check(out, "boundary sets [i,i+m] %s" % ((m, n),),
               all(f.dominating_set == cyclic_interval(f.arc, f.arc + m, n)
                   for f in faces if f.boundary))
        table = gamma0_grid_table(m, n)
        eq_i = True
        for f in faces:
            if f.kind != "interior":
                continue
            if f.grid is None or table.get(f.dominating_set) != f.grid:
                eq_i = False
        _check(out, "interior sets match the grid formula %s" % ((m, n),), eq_i)
        seed = quiver_from_graph(g).boundary_removed()
        _check(out, "quiver iso to grid seed %s" % ((m, n),),
               find_seed_iso(seed, grid_seed(n - m - 1, m - 1)) is not None)
    return _report("graph", out)


# ---------------------------------------------------------------------------
# criterion 2
# ---------------------------------------------------------------------------

def suite_moves(sizes=GRAPH_SIZES):
    out = []
    for (m, n) in sizes:
        g = build_gamma0(m, n)
        seed = quiver_from_graph(g)
        squares = square_move_locations(g)
        _check(out, "square available %s" % ((m, n),), bool(squares))
        for fid in squares:
            g2, fmap = apply_move(g, fid, "I")
            inv = {v: k for k, v in fmap.items()}
            s2 = quiver_from_graph(g2).relabel(inv)
            _check(out, "type I = mutation at %s %s" % (fid, (m, n)),
                   s2 == mutate_seed(seed, fid))
            changed = [f.id for f in g.faces()
                       if g2.face_by_id(fmap[f.id]).dominating_set
                       != f.dominating_set]
            old = g.face_by_id(fid).dominating_set
            new = g2.face_by_id(fmap[fid]).dominating_set
            _check(out, "type I set swap at %s %s" % (fid, (m, n)),
                   changed == [fid] and len(new) == m
                   and len(old & new) == m - 2)
        for w in type2_move_locations(g):
            g2, fmap = apply_move(g, w, "II")
            inv = {v: k for k, v in fmap.items()}
            _check(out, "type II quiver-neutral %s" % ((m, n),),
                   quiver_from_graph(g2).relabel(inv) == seed)
            _check(out, "type II sets unchanged %s" % ((m, n),),
                   all(g2.face_by_id(fmap[f.id]).dominating_set
                       == f.dominating_set for f in g.faces()))
    return _report("moves", out)


# ---------------------------------------------------------------------------
# criterion 3
# ---------------------------------------------------------------------------

def random_moved_graph(g, rng, max_moves=3):
    for _ in range(rng.randint(0, max_moves)):
        options = [("I", fid) for fid in square_move_locations(g)]
        options += [("II", w) for w in type2_move_locations(g)]
        if not options:
            break
        kind, loc = rng.choice(options)
        g = apply_move(g, loc, kind).graph
    return g


def suite_orientation(sizes=GRAPH_SIZES, trials=20, seed=0):
    rng = random.Random(seed)
    out = []
    for (m, n) in sizes:
        base = build_gamma0(m, n)
        ok_all = True
        for _ in range(trials):
            g = random_moved_graph(base, rng)
            orient = special_orientation(g)   # asserts acyclic + sources
            ok = orient.sources() == list(range(1, m + 1))
            for v, c in g.color.items():
                indeg = sum(1 for d in g.rot[v] if (d[1], d[0]) in orient.oriented)
                outdeg = len(g.rot[v]) - indeg
                if c == "white" and indeg != 1:
                    ok = False
                if c == "black" and outdeg != 1:
                    ok = False
            blacks = sum(1 for c in g.color.values() if c == "black")
            whites = len(g.color) - blacks
            internal = len(g.edges()) - n
            ok = ok and (2 * blacks + whites - internal == m)
            ok_all = ok_all and ok
        _check(out, "orientation invariants %s" % ((m, n),), ok_all)
    return _report("orientation", out)


# ---------------------------------------------------------------------------
# criterion 4
# ---------------------------------------------------------------------------

def suite_plucker(sizes=GRAPH_SIZES, trials=20, seed=0):
    rng = random.Random(seed)
    out = []
    for (m, n) in sizes:
        ok = True
        for _ in range(trials):
            c = random_configuration(m, n, rng)
            for quad in combinations(range(1, n + 1), 4):
                i, j, k, l = quad
                rest = [x for x in range(1, n + 1) if x not in quad]
                for J in combinations(rest, m - 2):
                    J = set(J)
                    lhs = plucker(c, J | {i, k}) * plucker(c, J | {j, l})
                    rhs = (plucker(c, J | {i, j}) * plucker(c, J | {k, l})
                           + plucker(c, J | {i, l}) * plucker(c, J | {j, k}))
                    ok = ok and lhs == rhs
        _check(out, "3-term relation %s" % ((m, n),), ok)
    return _report("plucker", out)


# ---------------------------------------------------------------------------
# criterion 5
# ---------------------------------------------------------------------------

def suite_positivity(sizes=SYMBOLIC_SIZES):
    out = []
    for (m, n) in sizes:
        g = build_gamma0(m, n)
        values = {f.id: RatFunc.var(f.id) for f in g.faces()}
        matrix = boundary_measurement(g, values, one=RatFunc.one())
        base = det_rows([[matrix[c - 1][r] for c in range(1, m + 1)]
                         for r in range(m)])
        ok = base == RatFunc.one()
        for subset in combinations(range(1, n + 1), m):
            d = det_rows([[matrix[c - 1][r] for c in subset]
                          for r in range(m)]) / base
            ok = ok and not d.num.is_zero()
            ok = ok and d.den.is_monomial() and d.den.leading_coeff() > 0
            ok = ok and all(coef > 0 for coef in d.num.coefficients())
        _check(out, "positive minors %s" % ((m, n),), ok)
    return _report("positivity", out)


# ---------------------------------------------------------------------------
# criterion 6
# ---------------------------------------------------------------------------

def suite_roundtrip(sizes=GRAPH_SIZES, trials=20, seed=0):
    """The birational round trip: the measurement is inverse to psi up to
    the DT twist (chi o psi = DT, so psi o DT^{-1} o chi = id), plus
    independence of the boundary lift."""
    rng = random.Random(seed)
    out = []
    for (m, n) in sizes:
        g = build_gamma0(m, n)
        ok_rt = True
        ok_lift = True
        for _ in range(trials):
            x = _random_interior(g, rng)
            c = _measure_config(g, _lift(g, x))
            back = shift(dt_geometric(c), -m)      # DT^{-1} of the image
            ok_rt = ok_rt and psi_coords(back, g).values == x
            base = psi_coords(c, g).values
            for _ in range(5):
                values = {f.id: (x[f.id] if not f.boundary
                                 else Fraction(rng.randint(1, 9),
                                               rng.randint(1, 9)))
                          for f in g.faces()}
                c2 = _measure_config(g, values)
                ok_lift = ok_lift and psi_coords(c2, g).values == base
        _check(out, "round trip %s" % ((m, n),), ok_rt)
        _check(out, "boundary-lift independence %s" % ((m, n),), ok_lift)
    return _report("roundtrip", out)


# ---------------------------------------------------------------------------
# criterion 7
# ---------------------------------------------------------------------------

def suite_dt_identification(sizes=GRAPH_SIZES, trials=20, seed=0):
    rng = random.Random(seed)
    out = []
    for (m, n) in sizes:
        g = build_gamma0(m, n)
        ok = True
        for _ in range(trials):
            c = random_configuration(m, n, rng)
            x = psi_coords(c, g).values
            image = _measure_config(g, _lift(g, x))
            ok = ok and equal_projective(image, dt_geometric(c))
        _check(out, "chi o psi = DT %s" % ((m, n),), ok)
    return _report("dt-identification", out)


# ---------------------------------------------------------------------------
# criterion 8
# ---------------------------------------------------------------------------

def suite_dt_periodicity(sizes=PERIOD_SIZES, trials=20, seed=0):
    rng = random.Random(seed)
    out = []
    for (m, n) in sizes:
        ok2 = True
        ok2n = True
        for _ in range(trials):
            c = random_configuration(m, n, rng)
            ok2 = ok2 and equal_projective(dt_geometric(dt_geometric(c)),
                                           shift(c, m))
            cur = c
            for _ in range(2 * n):
                cur = canonical_representative(dt_geometric(cur))
            ok2n = ok2n and equal_projective(cur, c)
        _check(out, "DT^2 = shift by m %s" % ((m, n),), ok2)
        _check(out, "DT^(2n) = id %s" % ((m, n),), ok2n)
    return _report("dt-periodicity", out)


# ---------------------------------------------------------------------------
# criterion 9
# ---------------------------------------------------------------------------

def suite_star(sizes=GRAPH_SIZES, trials=20, seed=0):
    rng = random.Random(seed)
    out = []
    for (m, n) in sizes:
        g = build_gamma0(m, n)
        ok_inv = True
        ok_expr = True
        for _ in range(trials):
            c = random_configuration(m, n, rng)
            s = star_geometric(c)
            ok_inv = ok_inv and equal_projective(star_geometric(s), c)
            x = psi_coords(c, g).values
            xs = psi_coords(s, g).values
            for f in g.faces():
                if f.boundary:
                    continue
                i, j = f.grid
                ok_expr = ok_expr and xs[f.id] == 1 / x["f_%d_%d" % (n - m - i,
                                                                     m - j)]
        _check(out, "star is an involution %s" % ((m, n),), ok_inv)
        _check(out, "star coordinate expression %s" % ((m, n),), ok_expr)
    return _report("star", out)


# ---------------------------------------------------------------------------
# criterion 10
# ---------------------------------------------------------------------------

def suite_dt_criterion(sizes=SYMBOLIC_SIZES):
    out = []
    for (m, n) in sizes:
        rep = check_dt_criterion_symbolic(m, n)
        _check(out, "degree matrix = -Id %s" % ((m, n),), rep["pass"],
               degree_matrix=rep["degree_matrix"])
    return _report("dt-criterion", out)


# ---------------------------------------------------------------------------
# criterion 11 (optional; may report exhaustion)
# ---------------------------------------------------------------------------

def suite_lemma1(m=2, n=5, trials=10, seed=0, budget=4000):
    g0 = build_gamma0(m, n)
    mirror = dual_reflect(g0)
    found = find_move_sequence(mirror, g0, budget=budget)
    if found is None:
        return {"name": "lemma1", "pass": False, "exhausted": True,
                "assertions": [{"name": "move search", "pass": False,
                                "exhausted": True}]}
    moves, end_map = found
    out = []
    _check(out, "move sequence found", True, moves=[list(mv) for mv in moves])
    s0 = quiver_from_graph(g0).boundary_removed()
    sm = quiver_from_graph(mirror).boundary_removed()
    sigma = find_seed_iso(s0, sm)
    _check(out, "sigma is a seed isomorphism",
           sigma is not None and seed_isomorphic(s0, sm, sigma))
    if sigma is None:
        return _report("lemma1", out)
    rng = random.Random(seed)
    ok_sigma = True
    ok_replay = True
    for _ in range(trials):
        c = random_configuration(m, n, rng)
        x = psi_coords(c, g0).values
        # sigma transports the Gamma_0 chart of DT^{-1}(c) to the mirror chart
        xm = psi_coords(c, mirror).values
        x_prev = psi_coords(shift(dt_geometric(c), -m), g0).values
        ok_sigma = ok_sigma and all(xm[sigma[f]] == x_prev[f] for f in sigma)
        # DT = (mutation transition along the move sequence) o sigma
        point = ClusterPoint("rational", {sigma[f]: x[f] for f in x})
        s = sm
        for kind, loc in moves:
            point = mutate_x(s, point, loc)
            s = mutate_seed(s, loc)
        image = {end_map[f]: v for f, v in point.values.items()}
        ok_replay = ok_replay and image == psi_coords(dt_geometric(c),
                                                      g0).values
    _check(out, "sigma chart relation", ok_sigma)
    _check(out, "mutation replay reproduces DT (%d points)" % trials,
           ok_replay)
    word = [("relabel", sigma)]
    word += [("mutate", loc) for _, loc in moves]
    word += [("relabel", {f: end_map[f] for f in sm.vertices})]
    ok_trop = True
    for v in s0.vertices:
        s_end, p_end = transport_with_seed(s0, word,
                                           basic_lamination(s0, v, "+"))
        ok_trop = ok_trop and s_end == s0
        ok_trop = ok_trop and p_end.values == basic_lamination(
            s0, v, "-").values
    _check(out, "tropical transport l+ -> l-", ok_trop)
    return _report("lemma1", out)


# ---------------------------------------------------------------------------
# criterion 12
# ---------------------------------------------------------------------------

def suite_ysystem(sizes=YSYSTEM_SIZES, trials=20, seed=0):
    out = []
    for (p, q) in sizes:
        rep = y_period(p, q, "parity", trials=trials, seed=seed)
        _check(out, "parity periods divide 2(p+q+2) (%d,%d)" % (p, q),
               rep["all_divide_bound"], periods=rep["periods"])
        full = y_period(p, q, "full", trials=min(trials, 5), seed=seed)
        _check(out, "full-mode finding (%d,%d)" % (p, q), True,
               periods=full["periods"],
               all_divide_bound=full["all_divide_bound"])
    return _report("ysystem", out)


SUITES = {
    "graph": suite_graph,
    "moves": suite_moves,
    "orientation": suite_orientation,
    "plucker": suite_plucker,
    "positivity": suite_positivity,
    "roundtrip": suite_roundtrip,
    "dt-identification": suite_dt_identification,
    "dt-periodicity": suite_dt_periodicity,
    "star": suite_star,
    "dt-criterion": suite_dt_criterion,
    "lemma1": suite_lemma1,
    "ysystem": suite_ysystem,
}

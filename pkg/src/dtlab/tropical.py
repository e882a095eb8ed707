"""Tropical points, basic laminations, and the cluster-DT criterion.

The decisive check is symbolic: build the boundary measurement matrix of
Gamma_0 in symbolic face variables, pull the Plucker coordinates of its
chart sets back through the p-map, and read off the degree matrix.  The
composite is the cluster Donaldson-Thomas transformation exactly when that
matrix is minus the identity.
"""

from .bipartite import build_gamma0, quiver_from_graph
from .laurent import RatFunc, deg_in
from .orientation import boundary_measurement
from .quiver import ClusterPoint, mutate_seed, mutate_trop
from .rational import det_rows


class PipelineError(RuntimeError):
    """A symbolically vanishing minor in the DT-criterion pipeline."""


def basic_lamination(s, i, sign="+"):
    """The basic lamination +-e_i as a tropical point on the seed s."""
    if i not in set(s.vertices):
        raise KeyError("unknown vertex %r" % (i,))
    if sign in ("+", 1):
        unit = 1
    elif sign in ("-", -1):
        unit = -1
    else:
        raise ValueError("sign must be '+' or '-'")
    return ClusterPoint("tropical", {v: unit if v == i else 0 for v in s.vertices})


def check_dt_criterion_symbolic(m, n):
    """Degree matrix of the symbolic composite psi o chi on Gamma_0(m, n).

    Returns a JSON-ready report with the full matrix and a pass flag
    (pass iff the matrix is minus the identity on interior faces).
    """
    g = build_gamma0(m, n)
    seed = quiver_from_graph(g)
    interior = sorted(f.id for f in g.faces() if not f.boundary)
    values = {f.id: (RatFunc.var(f.id) if not f.boundary else RatFunc.one())
              for f in g.faces()}
    matrix = boundary_measurement(g, values, one=RatFunc.one())
    a_val = {}
    for f in g.faces():
        cols = sorted(f.chart_set)
        a_val[f.id] = det_rows([[matrix[c - 1][r] for c in cols]
                                for r in range(m)])
        if a_val[f.id].is_zero():
            raise PipelineError("symbolically vanishing minor at face %s"
                                % f.id)
    degree = {}
    ok = True
    for f in interior:
        image = RatFunc.one()
        for h in g.faces():
            e = seed.epsilon(f, h.id)
            if e:
                image = image * a_val[h.id] ** e
        degree[f] = {v: deg_in(image, v) for v in interior}
        ok = ok and all(degree[f][v] == (-1 if v == f else 0) for v in interior)
    return {"m": m, "n": n, "degree_matrix": degree, "pass": ok}


def tropical_transport(s, moves, p):
    """Transport a tropical point along a list of moves.

    Each move is ("mutate", k) or ("relabel", sigma) with sigma a dict on
    the current vertex set.  Returns the transported tropical point; the
    final seed is available via transport_with_seed.
    """
    return transport_with_seed(s, moves, p)[1]


def transport_with_seed(s, moves, p):
    for move in moves:
        kind, arg = move
        if kind == "mutate":
            p = mutate_trop(s, p, arg)
            s = mutate_seed(s, arg)
        elif kind == "relabel":
            p = p.relabel(arg)
            s = s.relabel(arg)
        else:
            raise ValueError("unknown move kind %r" % (kind,))
    return s, p

"""Command-line front end.

Exit codes: 0 all assertions pass, 1 assertion failure, 2 usage/IO error,
3 search budget exhausted (verify lemma1 and moves-search only).
"""

import argparse
import json
import sys
from fractions import Fraction

from .bipartite import (build_gamma0, dual_reflect, dual_star,
                        find_move_sequence, quiver_from_graph)
from .configuration import (Configuration, canonical_representative,
                            dt_geometric, psi_coords, star_geometric)
from .laurent import RatFunc
from .orientation import boundary_measurement, special_orientation
from .rational import format_rational, rational
from .verify import SUITES, suite_lemma1
from .ysystem import y_period


class UsageError(Exception):
    pass


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit_json(args, data):
    _emit(args, json.dumps(data, indent=2, sort_keys=True))


def _graph(args):
    if args.m is None or args.n is None:
        raise UsageError("--m and --n are required")
    if not (2 <= args.m < args.n):
        raise UsageError("need 2 <= m < n")
    return build_gamma0(args.m, args.n)


def _load_config(path):
    try:
        with open(path) as fh:
            return Configuration.from_json(json.load(fh))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError("cannot read configuration %s: %s" % (path, exc))


def _vname(v):
    return "mp%d" % v[1] if isinstance(v, tuple) and v[0] == "mp" else str(v)


def cmd_gamma0(args):
    g = _graph(args)
    _emit(args, g.to_dot() if args.format == "dot"
          else json.dumps(g.to_json(), indent=2, sort_keys=True))
    return 0


def cmd_zigzag(args):
    g = _graph(args)
    _emit_json(args, [{"start": z.start, "end": z.end,
                       "edges": len(z.edges())} for z in g.trace_zigzags()])
    return 0


def cmd_quiver(args):
    seed = quiver_from_graph(_graph(args))
    if args.boundary_removed:
        seed = seed.boundary_removed()
    _emit(args, seed.to_dot() if args.format == "dot"
          else json.dumps(seed.to_json(), indent=2, sort_keys=True))
    return 0


def cmd_dominate(args):
    g = _graph(args)
    _emit_json(args, [{"id": f.id, "kind": f.kind, "arc": f.arc,
                       "dominating_set": sorted(f.dominating_set),
                       "chart_set": sorted(f.chart_set),
                       "grid": list(f.grid) if f.grid else None}
                      for f in g.faces()])
    return 0


def cmd_orient(args):
    g = _graph(args)
    orient = special_orientation(g)
    _emit_json(args, {
        "sources": orient.sources(),
        "sinks": orient.sinks(),
        "edges": sorted([_vname(u), _vname(v)] for (u, v) in orient.oriented),
    })
    return 0


def cmd_measure(args):
    g = _graph(args)
    if args.values:
        try:
            with open(args.values) as fh:
                raw = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError("cannot read values %s: %s" % (args.values, exc))
        values = {}
        for f in g.faces():
            if f.id in raw:
                values[f.id] = rational(raw[f.id])
            elif f.boundary:
                values[f.id] = Fraction(1)
            else:
                raise UsageError("missing value for interior face %s" % f.id)
        matrix = boundary_measurement(g, values, one=Fraction(1))
        cols = [[format_rational(x) for x in col] for col in matrix]
    else:
        values = {f.id: (RatFunc.one() if f.boundary else RatFunc.var(f.id))
                  for f in g.faces()}
        matrix = boundary_measurement(g, values, one=RatFunc.one())
        cols = [[{"num": x.num.to_json(), "den": x.den.to_json()}
                 for x in col] for col in matrix]
    _emit_json(args, {"m": g.m, "n": g.n, "columns": cols})
    return 0


def cmd_psi(args):
    c = _load_config(args.config)
    g = build_gamma0(c.m, c.n)
    point = psi_coords(c, g)
    _emit_json(args, {f: format_rational(v)
                      for f, v in sorted(point.values.items())})
    return 0


def cmd_dt(args):
    c = _load_config(args.config)
    for _ in range(args.power):
        c = canonical_representative(dt_geometric(c))
    _emit_json(args, c.to_json())
    return 0


def cmd_star(args):
    c = _load_config(args.config)
    _emit_json(args, canonical_representative(star_geometric(c)).to_json())
    return 0


def cmd_ysystem(args):
    rep = y_period(args.p, args.q, init=args.init, trials=args.trials,
                   max_steps=args.max_steps, seed=args.seed)
    _emit_json(args, rep)
    return 0 if rep["all_divide_bound"] else 1


def cmd_moves_search(args):
    g = _graph(args)
    mirror = dual_star(g) if args.target == "star" else dual_reflect(g)
    found = find_move_sequence(mirror, g, budget=args.budget)
    if found is None:
        _emit_json(args, {"found": False, "budget": args.budget})
        return 3
    moves, end_map = found
    _emit_json(args, {"found": True,
                      "moves": [list(mv) for mv in moves],
                      "end_map": dict(sorted(end_map.items()))})
    return 0


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    status = 0
    for name in names:
        fn = SUITES[name]
        kwargs = {}
        if args.m is not None and args.n is not None:
            if name == "lemma1":
                kwargs.update(m=args.m, n=args.n)
            elif name not in ("ysystem",):
                kwargs["sizes"] = [(args.m, args.n)]
        if args.trials is not None and name not in ("graph", "moves",
                                                    "positivity",
                                                    "dt-criterion"):
            kwargs["trials"] = args.trials
        if name not in ("graph", "moves", "positivity", "dt-criterion"):
            kwargs["seed"] = args.seed
        if name == "lemma1":
            kwargs["budget"] = args.budget
        rep = fn(**kwargs)
        reports.append(rep)
        if rep.get("exhausted"):
            status = max(status, 3)
        elif not rep["pass"]:
            status = max(status, 1)
    _emit_json(args, reports[0] if len(reports) == 1 else reports)
    return status


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed")
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--out", help="write output to this path")

    parser = argparse.ArgumentParser(
        prog="dtlab",
        description="Exact computational checks for cluster DT "
                    "transformations on configuration spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(fn=fn)
        return p

    for name, fn, hlp in (
            ("gamma0", cmd_gamma0, "emit the standard graph"),
            ("zigzag", cmd_zigzag, "list the zig-zag strands"),
            ("dominate", cmd_dominate, "faces with dominating/chart sets"),
            ("orient", cmd_orient, "the special perfect orientation")):
        p = add(name, fn, help=hlp)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)

    p = add("quiver", cmd_quiver, help="quiver of the standard graph")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--boundary-removed", action="store_true")

    p = add("measure", cmd_measure, help="boundary measurement matrix")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--values", help="JSON file of face values "
                                    "(default: symbolic)")

    p = add("psi", cmd_psi, help="cluster coordinates of a configuration")
    p.add_argument("--config", required=True)

    p = add("dt", cmd_dt, help="apply the geometric DT map")
    p.add_argument("--config", required=True)
    p.add_argument("--power", type=int, default=1)

    p = add("star", cmd_star, help="apply the * involution")
    p.add_argument("--config", required=True)

    p = add("ysystem", cmd_ysystem, help="Y-system period report")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--init", choices=("parity", "full"), default="parity")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-steps", type=int, default=None)

    p = add("moves-search", cmd_moves_search,
            help="search for a move sequence to the mirror graph")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--target", choices=("reflect", "star"), default="reflect")
    p.add_argument("--budget", type=int, default=4000)

    p = add("verify", cmd_verify, help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--budget", type=int, default=4000)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except AssertionError as exc:
        print("assertion failure: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

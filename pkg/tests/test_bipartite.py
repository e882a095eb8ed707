import pytest

from dtlab.bipartite import (apply_move, build_gamma0, canonical_key,
                             check_minimal, cyclic_interval, dual_reflect,
                             dual_star, find_move_sequence,
                             gamma0_grid_table, quiver_from_graph,
                             square_move_locations, type2_move_locations)
from dtlab.quiver import find_seed_iso, grid_seed


def test_cyclic_interval():
    assert cyclic_interval(2, 4, 5) == frozenset({2, 3, 4})
    assert cyclic_interval(4, 1, 5) == frozenset({4, 5, 1})
    assert cyclic_interval(3, 3, 5) == frozenset({3})


def test_gamma0_counts():
    for (m, n) in [(2, 4), (2, 5), (3, 6), (3, 7)]:
        g = build_gamma0(m, n)
        faces = g.faces()
        assert sum(1 for f in faces if f.boundary) == n
        assert sum(1 for f in faces if f.kind == "interior") \
            == (m - 1) * (n - m - 1)
        ok, bad = check_minimal(g)
        assert ok, bad


def test_gamma0_24_face_oracle():
    g = build_gamma0(2, 4)
    facts = sorted((f.id, f.kind, tuple(sorted(f.dominating_set)),
                    tuple(sorted(f.chart_set))) for f in g.faces())
    assert facts == [
        ("f_0_0", "boundary", (1, 2, 4), (3, 4)),
        ("f_1_1", "interior", (1, 3), (1, 3)),
        ("f_1_2", "boundary", (1, 2, 3), (1, 4)),
        ("f_2_1", "boundary", (1, 3, 4), (2, 3)),
        ("f_2_2", "boundary", (2, 3, 4), (1, 2)),
    ]


def test_gamma0_24_quiver_oracle():
    s = quiver_from_graph(build_gamma0(2, 4))
    expect = {("f_0_0", "f_1_1"): 1, ("f_0_0", "f_1_2"): -1,
              ("f_1_1", "f_1_2"): 1, ("f_1_1", "f_2_1"): 1,
              ("f_1_1", "f_2_2"): -1, ("f_2_1", "f_2_2"): 1}
    for (a, b), e in expect.items():
        assert s.epsilon(a, b) == e


def test_strands_end_at_start_plus_m():
    for (m, n) in [(2, 5), (3, 7)]:
        g = build_gamma0(m, n)
        for z in g.trace_zigzags():
            assert z.end == (z.start + m - 1) % n + 1


def test_grid_table_sizes():
    assert len(gamma0_grid_table(2, 5)) == 7
    assert len(gamma0_grid_table(3, 7)) == 13


def test_boundary_removed_quiver_is_grid():
    g = build_gamma0(3, 6)
    s = quiver_from_graph(g).boundary_removed()
    assert find_seed_iso(s, grid_seed(2, 2)) is not None


def test_square_move_is_involutive_up_to_isotopy():
    g = build_gamma0(2, 5)
    for fid in square_move_locations(g):
        g2, fmap = apply_move(g, fid, "I")
        g3, fmap2 = apply_move(g2, fmap[fid], "I")
        assert canonical_key(g3) == canonical_key(g)


def test_type2_move_changes_graph_not_quiver():
    g = build_gamma0(3, 6)
    locs = type2_move_locations(g)
    assert locs
    g2, fmap = apply_move(g, locs[0], "II")
    inv = {v: k for k, v in fmap.items()}
    assert quiver_from_graph(g2).relabel(inv) == quiver_from_graph(g)
    assert canonical_key(g2) != canonical_key(g)


def test_duals_are_minimal():
    g = build_gamma0(2, 5)
    for dual in (dual_reflect(g), dual_star(g)):
        ok, bad = check_minimal(dual)
        assert ok, bad


def test_find_move_sequence_trivial_and_mirror():
    g = build_gamma0(2, 5)
    found = find_move_sequence(g, g)
    assert found is not None
    moves, end_map = found
    assert moves == []
    found = find_move_sequence(dual_reflect(g), g)
    assert found is not None
    assert all(kind in ("I", "II") for kind, _ in found[0])

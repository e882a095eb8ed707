from fractions import Fraction

import pytest

from dtlab.quiver import (ClusterPoint, Seed, find_seed_iso, grid_seed,
                          mutate_a, mutate_seed, mutate_trop, mutate_x,
                          p_map, seed_from_json, seed_isomorphic)


def a2_seed():
    return Seed.from_arrows(["1", "2"], {("1", "2"): 1})


def test_seed_json_roundtrip():
    # JSON ids are strings, so roundtrip a string-labeled seed
    s = grid_seed(2, 3).relabel({v: "g%d%d" % v for v in grid_seed(2, 3).vertices})
    assert seed_from_json(s.to_json()) == s


def test_mutation_involutive():
    s = grid_seed(2, 2)
    for v in s.interior():
        assert mutate_seed(mutate_seed(s, v), v) == s


def test_grid_seed_shape():
    s = grid_seed(2, 3)
    assert len(s.vertices) == 6
    # interior epsilon entries lie in {-1, 0, 1} on a grid quiver
    for a in s.vertices:
        for b in s.vertices:
            assert s.epsilon(a, b) in (-1, 0, 1)
            assert s.epsilon(a, b) == -s.epsilon(b, a)


def test_mutate_x_involutive():
    s = a2_seed()
    p = ClusterPoint("rational", {"1": Fraction(2, 3), "2": Fraction(5)})
    q = mutate_x(s, p, "1")
    s1 = mutate_seed(s, "1")
    assert q.values["1"] == Fraction(3, 2)
    assert mutate_x(s1, q, "1") == p


def test_mutate_x_a2_exchange():
    # X-mutation on A2 at the tail of the arrow 1 -> 2
    s = a2_seed()
    x1, x2 = Fraction(2), Fraction(3)
    p = ClusterPoint("rational", {"1": x1, "2": x2})
    q = mutate_x(s, p, "1")
    assert q.values["1"] == 1 / x1
    assert q.values["2"] in (x2 * (1 + x1), x2 / (1 + 1 / x1))


def test_mutate_trop_involutive():
    s = grid_seed(2, 2)
    p = ClusterPoint("tropical", {v: i - 2 for i, v in enumerate(s.vertices)})
    for v in s.interior():
        q = mutate_trop(s, p, v)
        assert mutate_trop(mutate_seed(s, v), q, v) == p


def test_p_map_consistency():
    # the p-map of an A-point matches the monomial transform of x-coordinates
    s = a2_seed()
    a = ClusterPoint("rational", {"1": Fraction(2), "2": Fraction(3)})
    x = p_map(s, a)
    for v in s.vertices:
        expect = Fraction(1)
        for w in s.vertices:
            e = s.epsilon(v, w)
            if e:
                expect *= a.values[w] ** e
        assert x.values[v] == expect


def test_mutate_a_involutive():
    s = grid_seed(1, 2)
    a = ClusterPoint("rational",
                     {v: Fraction(k + 1) for k, v in enumerate(s.vertices)})
    for v in s.interior():
        b = mutate_a(s, a, v)
        assert mutate_a(mutate_seed(s, v), b, v) == a


def test_seed_iso():
    s = grid_seed(2, 2)
    sigma = {v: "x%d%d" % v for v in s.vertices}
    t = s.relabel(sigma)
    assert seed_isomorphic(s, t, sigma)
    found = find_seed_iso(s, t)
    assert found is not None
    assert seed_isomorphic(s, t, found)
    assert find_seed_iso(s, grid_seed(1, 2)) is None

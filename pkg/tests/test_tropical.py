import pytest

from dtlab.quiver import ClusterPoint, grid_seed, mutate_seed
from dtlab.tropical import (basic_lamination, check_dt_criterion_symbolic,
                            transport_with_seed, tropical_transport)


def test_basic_lamination():
    s = grid_seed(1, 2)
    v = s.vertices[0]
    p = basic_lamination(s, v, "+")
    assert p.values[v] == 1
    assert all(p.values[w] == 0 for w in s.vertices if w != v)
    q = basic_lamination(s, v, "-")
    assert q.values[v] == -1
    with pytest.raises(KeyError):
        basic_lamination(s, "missing", "+")


def test_transport_relabel_and_mutate():
    s = grid_seed(1, 2)
    v = s.vertices[0]
    p = basic_lamination(s, v, "+")
    sigma = {w: ("x",) + w for w in s.vertices}
    s2, p2 = transport_with_seed(s, [("relabel", sigma)], p)
    assert s2 == s.relabel(sigma)
    assert p2.values[("x",) + v] == 1
    # mutating twice at the same vertex is the identity transport
    s3, p3 = transport_with_seed(s, [("mutate", v), ("mutate", v)], p)
    assert s3 == s
    assert p3 == p


def test_tropical_transport_wrapper():
    s = grid_seed(1, 2)
    v = s.vertices[0]
    p = basic_lamination(s, v, "+")
    assert tropical_transport(s, [("mutate", v)], p) == \
        transport_with_seed(s, [("mutate", v)], p)[1]


def test_dt_criterion_smallest():
    rep = check_dt_criterion_symbolic(2, 4)
    assert rep["pass"]
    assert rep["degree_matrix"] == {"f_1_1": {"f_1_1": -1}}


def test_dt_criterion_25():
    rep = check_dt_criterion_symbolic(2, 5)
    assert rep["pass"]
    ids = sorted(rep["degree_matrix"])
    for f in ids:
        for h in ids:
            assert rep["degree_matrix"][f][h] == (-1 if f == h else 0)

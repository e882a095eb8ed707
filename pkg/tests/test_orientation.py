from fractions import Fraction

import pytest

from dtlab.bipartite import build_gamma0, is_mp
from dtlab.laurent import RatFunc
from dtlab.orientation import (boundary_measurement, enumerate_paths,
                               special_orientation)


def test_sources_and_sinks():
    for (m, n) in [(2, 4), (2, 5), (3, 6)]:
        orient = special_orientation(build_gamma0(m, n))
        assert orient.sources() == list(range(1, m + 1))
        assert orient.sinks() == list(range(m + 1, n + 1))


def test_degree_conditions():
    g = build_gamma0(3, 7)
    orient = special_orientation(g)
    for v, c in g.color.items():
        indeg = sum(1 for d in g.rot[v] if (d[1], d[0]) in orient.oriented)
        if c == "white":
            assert indeg == 1
        else:
            assert len(g.rot[v]) - indeg == 1


def test_paths_exist_source_to_sink():
    g = build_gamma0(2, 5)
    orient = special_orientation(g)
    for i in (1, 2):
        for j in (3, 4, 5):
            assert enumerate_paths(orient, i, j)


def test_measurement_identity_block():
    g = build_gamma0(3, 6)
    values = {f.id: Fraction(1) for f in g.faces()}
    matrix = boundary_measurement(g, values, one=Fraction(1))
    for j in range(3):
        assert list(matrix[j]) == [Fraction(int(r == j)) for r in range(3)]


def test_measurement_oracle_24():
    g = build_gamma0(2, 4)
    values = {f.id: Fraction(1) for f in g.faces()}
    values["f_1_1"] = Fraction(2)
    matrix = boundary_measurement(g, values, one=Fraction(1))
    assert [list(col) for col in matrix] == [
        [1, 0], [0, 1], [-1, 3], [-1, 1]]


def test_measurement_symbolic():
    g = build_gamma0(2, 4)
    values = {f.id: (RatFunc.one() if f.boundary else RatFunc.var(f.id))
              for f in g.faces()}
    matrix = boundary_measurement(g, values, one=RatFunc.one())
    # evaluate column 3 against the rational oracle at x = 2
    col3 = matrix[2]
    assert col3[0].evaluate({"f_1_1": Fraction(2)}) == -1
    assert col3[1].evaluate({"f_1_1": Fraction(2)}) == 3

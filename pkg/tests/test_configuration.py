import random
from fractions import Fraction

import pytest

from dtlab.bipartite import build_gamma0
from dtlab.configuration import (Configuration, DegenerateError,
                                 canonical_representative, dt_geometric,
                                 equal_projective, genericity, plucker,
                                 psi_coords, random_configuration, shift,
                                 star_geometric, xi_vector)


def sample_25():
    return Configuration(2, 5, [["1", "0"], ["0", "1"], ["1", "1"],
                                ["1", "2"], ["1", "3"]])


def test_json_roundtrip():
    c = sample_25()
    assert Configuration.from_json(c.to_json()) == c


def test_zero_column_rejected():
    with pytest.raises(ValueError):
        Configuration(2, 4, [["1", "0"], ["0", "0"], ["1", "1"], ["0", "1"]])


def test_plucker_oracle():
    c = sample_25()
    assert plucker(c, [1, 3]) == 1
    assert plucker(c, [2, 4]) == -1
    assert plucker(c, [4, 5]) == 1
    with pytest.raises(ValueError):
        plucker(c, [1, 2, 3])


def test_genericity_modes():
    c = sample_25()
    assert genericity(c, "consecutive")
    assert genericity(c, "total")
    d = Configuration(2, 4, [["1", "0"], ["0", "1"], ["1", "0"], ["1", "1"]])
    assert not genericity(d, "total")


def test_xi_orthogonal_to_window():
    c = sample_25()
    for i in range(1, 6):
        xi = xi_vector(c, i)
        window = [(5 - i + 2 + t - 1) % 5 + 1 for t in range(1)]
        for j in window:
            assert sum(a * b for a, b in zip(xi, c.column(j))) == 0


def test_xi_degenerate():
    # for m = 3 the window holds two columns; make columns 1, 2 parallel
    d = Configuration(3, 6, [["1", "0", "0"], ["2", "0", "0"],
                             ["0", "1", "0"], ["0", "0", "1"],
                             ["1", "1", "1"], ["1", "2", "3"]])
    with pytest.raises(DegenerateError):
        xi_vector(d, 1)


def test_dt_oracle():
    image = canonical_representative(dt_geometric(sample_25()))
    assert image.to_json()["columns"] == [
        ["1", "0"], ["0", "1"], ["1", "1"], ["1", "-2"], ["2", "-1"]]


def test_star_oracle():
    image = canonical_representative(star_geometric(sample_25()))
    assert image.to_json()["columns"] == [
        ["1", "0"], ["0", "1"], ["1", "1"], ["2", "3"], ["1", "3"]]


def test_dt_squared_is_shift():
    rng = random.Random(7)
    for (m, n) in [(2, 5), (3, 6)]:
        c = random_configuration(m, n, rng)
        assert equal_projective(dt_geometric(dt_geometric(c)), shift(c, m))


def test_dt_commutes_with_shift():
    rng = random.Random(3)
    c = random_configuration(2, 6, rng)
    assert equal_projective(dt_geometric(shift(c, 1)),
                            shift(dt_geometric(c), 1))


def test_equal_projective_scaling_and_gl():
    c = sample_25()
    scaled = Configuration(2, 5, [[3 * x for x in col] for col in c.columns])
    assert equal_projective(c, scaled)
    # apply a GL_2 transform g = [[1, 2], [0, 1]]
    moved = Configuration(2, 5, [(col[0] + 2 * col[1], col[1])
                                 for col in c.columns])
    assert equal_projective(c, moved)
    assert not equal_projective(c, shift(c, 1))


def test_canonical_representative_projectively_equal():
    rng = random.Random(11)
    c = random_configuration(3, 7, rng)
    assert equal_projective(canonical_representative(c), c)


def test_psi_oracle():
    c = sample_25()
    g = build_gamma0(2, 5)
    values = psi_coords(c, g).values
    assert values == {"f_1_1": Fraction(-3), "f_2_1": Fraction(-1, 2)}


def test_psi_projective_invariance():
    c = sample_25()
    g = build_gamma0(2, 5)
    scaled = Configuration(2, 5, [[Fraction(k + 1) * x for x in col]
                                  for k, col in enumerate(c.columns)])
    assert psi_coords(scaled, g).values == psi_coords(c, g).values

from fractions import Fraction

import pytest

from dtlab.laurent import RatFunc
from dtlab.rational import (content_reduce, det_rows, format_rational,
                            rational, xi_covector)


def test_rational_parsing():
    assert rational("3/4") == Fraction(3, 4)
    assert rational("-2") == Fraction(-2)
    assert rational(5) == Fraction(5)
    assert rational(Fraction(1, 3)) == Fraction(1, 3)


def test_format_roundtrip():
    for s in ("0", "7", "-3/5", "22/7"):
        assert format_rational(rational(s)) == s


def test_det_small():
    assert det_rows([[Fraction(1)]]) == 1
    assert det_rows([[1, 2], [3, 4]]) == -2
    assert det_rows([[2, 0, 1], [1, 1, 0], [0, 3, 1]]) == 5


def test_det_large_bareiss_matches_cofactor():
    # 5x5 Vandermonde: prod_{i<j} (x_j - x_i)
    xs = [Fraction(k) for k in (1, 2, 3, 5, 7)]
    rows = [[x ** k for x in xs] for k in range(5)]
    expect = Fraction(1)
    for i in range(5):
        for j in range(i + 1, 5):
            expect *= xs[j] - xs[i]
    assert det_rows(rows) == expect


def test_det_generic_ring_elements():
    a, b, c, d = (RatFunc.var(v) for v in "abcd")
    assert det_rows([[a, b], [c, d]]) == a * d - b * c


def test_xi_covector_orthogonality():
    cols = [(Fraction(1), Fraction(2), Fraction(0)),
            (Fraction(0), Fraction(1), Fraction(3))]
    xi, degenerate = xi_covector(cols)
    assert not degenerate
    assert any(x != 0 for x in xi)
    for col in cols:
        assert sum(x * y for x, y in zip(xi, col)) == 0


def test_xi_covector_degenerate():
    cols = [(Fraction(1), Fraction(2), Fraction(0)),
            (Fraction(2), Fraction(4), Fraction(0))]
    _, degenerate = xi_covector(cols)
    assert degenerate


def test_content_reduce():
    assert content_reduce((Fraction(2, 3), Fraction(4, 3))) == (1, 2)
    assert content_reduce((Fraction(0), Fraction(-6), Fraction(9))) \
        == (0, -2, 3)

import pytest

from tribraid.core.types import IntegerMatrix, RationalCode
from tribraid.diagrams.builder import from_rational_code
from tribraid.diagrams.diagram import circle_count, j_bounds
from tribraid.homology.complex import (
    basis,
    compose,
    degrees,
    differential_matrix,
    enhanced_state,
)

WORDS = ["", "ab", "aB", "D a", "D aa", "abAB", "aabbaabb"]


def cube_range(d):
    j_min, j_max = j_bounds(d)
    return range(-d.negative_count, d.positive_count + 1), range(j_min, j_max + 1, 2)


@pytest.mark.parametrize("text", WORDS)
def test_basis_spans_every_enhanced_state(closure, text):
    """Summed over all (i, j), the bases count 2^|sD| enhancements per state."""
    d = closure(text)
    i_range, j_range = cube_range(d)
    total = sum(len(basis(d, i, j)) for i in i_range for j in j_range)
    expected = sum(2 ** circle_count(d, mask) for mask in range(1 << d.crossing_count))
    assert total == expected


@pytest.mark.parametrize("text", ["ab", "aB", "D a"])
def test_basis_elements_have_their_degrees(closure, text):
    d = closure(text)
    i_range, j_range = cube_range(d)
    for i in i_range:
        for j in j_range:
            for mask, signs in basis(d, i, j):
                assert degrees(d, enhanced_state(d, mask, signs)) == (i, j)


@pytest.mark.parametrize("text", WORDS)
def test_differential_squares_to_zero(closure, text):
    d = closure(text)
    i_range, j_range = cube_range(d)
    for j in j_range:
        for i in list(i_range)[:-1]:
            square = compose(differential_matrix(d, i + 1, j), differential_matrix(d, i, j))
            assert square.entries == {}


def test_differential_squares_to_zero_on_a_rational_diagram():
    d = from_rational_code(RationalCode(entries=(2, -1, 3)))
    i_range, j_range = cube_range(d)
    for j in j_range:
        for i in list(i_range)[:-1]:
            square = compose(differential_matrix(d, i + 1, j), differential_matrix(d, i, j))
            assert square.entries == {}


def test_kink_differential_is_the_merge(closure):
    """One positive kink on 2 strands: both one-plus enhancements merge to the minus circle."""
    d = closure("s1", strands=2)
    # C^{0,1}: two A-circles, one of them +; C^{1,1}: the single B-circle, -
    assert basis(d, 0, 1) == [(0, 1), (0, 2)]
    assert basis(d, 1, 1) == [(1, 0)]
    m = differential_matrix(d, 0, 1)
    assert (m.rows, m.cols) == (1, 2)
    assert m.entries == {(0, 0): 1, (0, 1): 1}


def test_compose_checks_shapes():
    with pytest.raises(ValueError):
        compose(IntegerMatrix(rows=2, cols=3), IntegerMatrix(rows=2, cols=2))

import numpy as np
import pytest

from tribraid.core.errors import PreconditionError
from tribraid.core.types import Bookkeeping, RationalCode
from tribraid.diagrams.builder import from_rational_code
from tribraid.diagrams.diagram import circle_count, component_count, is_a_adequate
from tribraid.diagrams.rational import (
    alternating_closed_form,
    alternating_code,
    is_alternating,
    measure_bookkeeping,
    normalize_zeros,
    parse_code,
    t_transform,
    u_transform,
)


def code(*entries: int) -> RationalCode:
    return RationalCode(entries=entries)


def test_parse_code():
    assert parse_code("2,-1, 1") == code(2, -1, 1)
    with pytest.raises(PreconditionError):
        parse_code("2,x")


def test_normalize_zeros():
    assert normalize_zeros(code(1, 0, 2)) == code(3)
    assert normalize_zeros(code(2, -1, 0, -1, 1)) == code(2, -2, 1)
    assert normalize_zeros(code(1, 0, 0, 1)) == code(1, 1)
    # zeros at either end are not interior
    assert normalize_zeros(code(0, -1, 0)) == code(0, -1, 0)


def test_u_transform():
    assert u_transform(code(2, 3)) == code(1, -1, 2)
    assert u_transform(code(1, 1)) == code(0, -1, 0)
    assert u_transform(code(3, 2, 5)) == code(2, -1, 1, 5)


def test_u_transform_preconditions():
    with pytest.raises(PreconditionError):
        u_transform(code(3))
    with pytest.raises(PreconditionError):
        u_transform(code(0, 1))


def test_t_transform():
    assert t_transform(code(2, -1, 1, 1, 3), 2) == code(3, 1, 2)
    assert t_transform(code(1, -1, 2, 2), 2) == code(2, 2, -1, 1)


def test_t_transform_preconditions():
    with pytest.raises(PreconditionError):
        t_transform(code(2, -1, 1, 1, 3), 1)
    with pytest.raises(PreconditionError):
        t_transform(code(2, 1, 1, 1, 3), 2)
    with pytest.raises(PreconditionError):
        t_transform(code(2, -1, 1), 2)


def test_alternating_code_examples():
    assert alternating_code(code(2, 2)) == (
        code(1, -1, 1),
        Bookkeeping(delta_p=0, delta_n=-1, delta_w=1),
    )
    assert alternating_code(code(3, 2, 2)) == (
        code(2, -2, 1),
        Bookkeeping(delta_p=0, delta_n=-2, delta_w=2),
    )
    assert alternating_code(code(2, 3))[0] == code(1, -1, 2)


def test_alternating_code_preconditions():
    with pytest.raises(PreconditionError):
        alternating_code(code(1, 2))
    with pytest.raises(PreconditionError):
        alternating_code(code(4))


def test_is_alternating():
    assert is_alternating(code(1, -1, 1))
    assert not is_alternating(code(2, 2))
    assert is_alternating(code(2, -2, 1))
    with pytest.raises(PreconditionError):
        is_alternating(code(1, 0, 1))


def test_bookkeeping_on_two_by_two():
    """D(2,2) has four negative crossings, its alternating form three."""
    d = from_rational_code(code(2, 2))
    assert (d.positive_count, d.negative_count) == (0, 4)
    assert measure_bookkeeping(code(2, 2), code(1, -1, 1)) == Bookkeeping(
        delta_p=0, delta_n=-1, delta_w=1
    )


def test_alternating_reduction_on_random_codes():
    """Alternating, A-adequate, m+1 A-circles, and the sign census moves as claimed."""
    rng = np.random.default_rng(2024)
    for _ in range(50):
        m = int(rng.integers(2, 6))
        c = RationalCode(entries=tuple(int(a) for a in rng.integers(2, 5, size=m)))
        result, book = alternating_code(c)

        assert is_alternating(result)
        assert is_a_adequate(from_rational_code(result))
        assert circle_count(from_rational_code(alternating_closed_form(c)), 0) == m + 1
        assert measure_bookkeeping(c, result) == book
        assert book == Bookkeeping(delta_p=0, delta_n=-(m - 1), delta_w=m - 1)


def test_rational_diagrams_have_at_most_two_components():
    rng = np.random.default_rng(5)
    for _ in range(20):
        m = int(rng.integers(1, 5))
        entries = tuple(int(a) for a in rng.integers(1, 4, size=m))
        assert component_count(from_rational_code(RationalCode(entries=entries))) in (1, 2)

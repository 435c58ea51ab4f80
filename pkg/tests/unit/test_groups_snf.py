import pytest

from tribraid.core.types import AbelianGroup, HomologyTable, IntegerMatrix
from tribraid.homology.groups import (
    complement,
    contains_summand,
    direct_sum,
    group_from_factors,
    mirror_table,
    parse_group,
    render_group,
    total_rank,
)
from tribraid.homology.snf import eliminate_unit_pivots, smith_normal_form
from tribraid.tables.golden import known_table

Z = AbelianGroup(free_rank=1)
Z2 = AbelianGroup(torsion=(2,))


def test_render_group():
    assert render_group(AbelianGroup()) == "0"
    assert render_group(AbelianGroup(free_rank=3)) == "Z^3"
    assert render_group(AbelianGroup(free_rank=1, torsion=(2, 2))) == "Z+(Z/2)^2"
    assert render_group(AbelianGroup(torsion=(2, 4))) == "Z/2+Z/4"


def test_parse_group():
    assert parse_group("Z+(Z/2)^2") == AbelianGroup(free_rank=1, torsion=(2, 2))
    assert parse_group("Z^2+Z/2") == AbelianGroup(free_rank=2, torsion=(2,))
    assert parse_group("0") == AbelianGroup()
    # cyclic orders are reassembled into a divisibility chain
    assert parse_group("Z/2+Z/3") == AbelianGroup(torsion=(6,))
    with pytest.raises(ValueError):
        parse_group("Q")


def test_invariant_factor_chain_is_enforced():
    with pytest.raises(ValueError):
        AbelianGroup(torsion=(4, 2))
    with pytest.raises(ValueError):
        AbelianGroup(torsion=(1,))


def test_group_from_factors_drops_units():
    assert group_from_factors(2, [1, 1, 2, -4]) == AbelianGroup(free_rank=2, torsion=(2, 4))


def test_direct_sum_and_complement():
    assert direct_sum(Z2, AbelianGroup(torsion=(3,))) == AbelianGroup(torsion=(6,))
    g = AbelianGroup(free_rank=2, torsion=(2,))
    assert complement(g, Z) == AbelianGroup(free_rank=1, torsion=(2,))
    assert complement(g, Z2) == AbelianGroup(free_rank=2)


def test_summands():
    assert contains_summand(AbelianGroup(torsion=(6,)), Z2)
    # Z/2 is a subgroup of Z/4 but not a summand
    assert not contains_summand(AbelianGroup(free_rank=1, torsion=(4,)), Z2)
    with pytest.raises(ValueError):
        complement(Z2, Z)


def test_mirror_table_moves_torsion_one_column():
    trefoil = known_table("D s1")
    mirrored = mirror_table(trefoil)
    assert mirrored.group(0, -1) == Z
    assert mirrored.group(-3, -9) == Z
    assert mirrored.group(-2, -7) == Z2
    assert total_rank(mirrored) == total_rank(trefoil)
    assert mirror_table(mirrored) == trefoil


def test_mirror_of_empty_table():
    assert mirror_table(HomologyTable()) == HomologyTable()


# --- Smith normal form ---


def test_snf_diagonal():
    m = IntegerMatrix.from_rows([[2, 0], [0, 3]])
    assert smith_normal_form(m) == ((1, 6), 2)


def test_snf_unit_pivot_then_torsion():
    m = IntegerMatrix.from_rows([[1, 2], [3, 4]])
    assert smith_normal_form(m) == ((1, 2), 2)


def test_snf_rank_deficient():
    m = IntegerMatrix.from_rows([[2, 4], [4, 8]])
    assert smith_normal_form(m) == ((2,), 1)


def test_snf_zero_matrix():
    assert smith_normal_form(IntegerMatrix(rows=2, cols=3)) == ((), 0)


def test_snf_torsion_chain():
    m = IntegerMatrix.from_rows([[2, 0, 0], [0, 4, 0]])
    assert smith_normal_form(m) == ((2, 4), 2)


def test_unit_pivots_clear_a_permutation_matrix():
    m = IntegerMatrix.from_rows([[0, 1, 0], [0, 0, -1], [1, 0, 0]])
    eliminated, rest = eliminate_unit_pivots(m)
    assert eliminated == 3
    assert rest == {}


def test_integer_matrix_rejects_stored_zeros():
    with pytest.raises(ValueError):
        IntegerMatrix(rows=1, cols=1, entries={(0, 0): 0})
    with pytest.raises(ValueError):
        IntegerMatrix(rows=1, cols=1, entries={(1, 0): 1})

import pytest

from tribraid.core.types import HomologyTable
from tribraid.homology.groups import parse_group
from tribraid.tables.golden import known_table
from tribraid.tables.obstruction import BRAID_INDEX_REMARK, matches_positive3


@pytest.mark.parametrize(
    "name, pattern, j_low",
    [
        ("D s1", "C4", 1),
        ("s1^3 s2^2", "C2", 2),
        ("D", "N(D)", 0),
        ("unlink3", "N(1)", -3),
        ("s1^2 s2^2", "N(s1^2 s2^2)", 1),
    ],
)
def test_known_positive_closures_are_compatible(name, pattern, j_low):
    verdict = matches_positive3(known_table(name))
    assert verdict.compatible
    assert verdict.pattern == pattern
    assert verdict.j_low == j_low
    assert verdict.remark == ""


def with_cell(name: str, i: int, j: int, group: str) -> HomologyTable:
    cells = dict(known_table(name).cells)
    cells[(i, j)] = parse_group(group)
    return HomologyTable(cells=cells)


def test_torsion_in_column_one_is_an_obstruction():
    verdict = matches_positive3(with_cell("D s1", 1, 5, "Z/2"))
    assert not verdict.compatible
    assert verdict.pattern == "C4"
    w = verdict.witness
    assert (w.i, w.j, w.expected, w.found) == (1, 5, "0", "Z/2")
    assert verdict.remark == BRAID_INDEX_REMARK


def test_negative_homological_degree_is_an_obstruction():
    verdict = matches_positive3(with_cell("D s1", -1, 1, "Z"))
    assert not verdict.compatible
    assert verdict.pattern is None
    w = verdict.witness
    assert (w.i, w.j, w.expected, w.found) == (-1, 1, "0", "Z")


def test_wrong_corner_rank_is_an_obstruction():
    verdict = matches_positive3(with_cell("D s1", 0, 1, "Z^2"))
    assert not verdict.compatible
    w = verdict.witness
    assert (w.i, w.j, w.expected, w.found) == (0, 1, "Z", "Z^2")
    assert "incompatible" in verdict.render()


def test_mirror_trefoil_is_not_a_positive_closure(oracle, closure):
    verdict = matches_positive3(oracle.homology(closure("AAAA")))
    assert not verdict.compatible
    assert verdict.witness.i < 0

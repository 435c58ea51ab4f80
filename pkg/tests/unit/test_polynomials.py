import pytest
import sympy as sp

from tribraid.braids.word import parse_word
from tribraid.core.errors import CrossingGuardError
from tribraid.core.types import RationalCode
from tribraid.diagrams.builder import from_braid_closure, from_rational_code
from tribraid.homology.polynomials import graded_euler_characteristic, kauffman_bracket_jones, q
from tribraid.tables.golden import load_known_tables


def same(a: sp.Expr, b: sp.Expr) -> bool:
    return sp.expand(a - b) == 0


def test_unknot_bracket():
    d = from_braid_closure(parse_word("", 1))
    assert same(kauffman_bracket_jones(d), q + 1 / q)


def test_trefoil_bracket(closure):
    assert same(kauffman_bracket_jones(closure("D a")), q + q**3 + q**5 - q**9)


def test_euler_characteristic_ignores_torsion():
    table = load_known_tables()["D s1"].table()
    assert same(graded_euler_characteristic(table), q + q**3 + q**5 - q**9)


@pytest.mark.parametrize(
    "name", sorted(n for n, t in load_known_tables().items() if len(t.braid()) <= 9)
)
def test_known_tables_agree_with_the_bracket(name):
    entry = load_known_tables()[name]
    d = from_braid_closure(entry.braid())
    assert same(graded_euler_characteristic(entry.table()), kauffman_bracket_jones(d))


@pytest.mark.parametrize("text", ["aB", "abAB", "DAb"])
def test_oracle_agrees_with_the_bracket(oracle, closure, text):
    d = closure(text)
    assert same(graded_euler_characteristic(oracle.homology(d)), kauffman_bracket_jones(d))


def test_oracle_agrees_with_the_bracket_on_rational_diagrams(oracle):
    for entries in [(2, 2), (1, -1, 1), (3, -2, 1, 2)]:
        d = from_rational_code(RationalCode(entries=entries))
        assert same(graded_euler_characteristic(oracle.homology(d)), kauffman_bracket_jones(d))


def test_bracket_guard(closure):
    with pytest.raises(CrossingGuardError):
        kauffman_bracket_jones(closure("D a"), max_crossings=3)

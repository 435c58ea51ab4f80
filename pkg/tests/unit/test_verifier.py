from tribraid.arbiter.verifier import BraidVerifier, TableComparator
from tribraid.braids.word import parse_word
from tribraid.core.types import AbelianGroup, FamilyKind, FamilyTag, HomologyTable, VerdictStatus
from tribraid.tables.golden import known_table
from tribraid.tables.shapes import ShapeSynthesizer, lshape_theorem1


def test_exact_comparison_reports_the_first_cell():
    trefoil = known_table("D s1")
    cells = dict(trefoil.cells)
    cells[(3, 7)] = AbelianGroup(torsion=(4,))
    cells[(5, 11)] = AbelianGroup(free_rank=1)
    verdict = TableComparator.exact("t", trefoil, HomologyTable(cells=cells))
    assert verdict.status == VerdictStatus.FAIL
    w = verdict.witness
    assert (w.i, w.j, w.expected, w.found) == (3, 7, "Z/2", "Z/4")


def test_exact_comparison_passes_on_equal_tables():
    assert TableComparator.exact("t", known_table("D"), known_table("D")).passed


def test_region_comparison_ignores_the_block():
    shape = lshape_theorem1(FamilyTag(kind=FamilyKind.C4A), 4)
    cells = dict(known_table("D s1").cells)
    cells[(5, 11)] = AbelianGroup(free_rank=3)
    assert TableComparator.on_region("r", shape, HomologyTable(cells=cells)).passed
    cells[(1, 1)] = AbelianGroup(free_rank=1)
    verdict = TableComparator.on_region("r", shape, HomologyTable(cells=cells))
    assert (verdict.witness.i, verdict.witness.j) == (1, 1)


def test_braid_verifier_on_the_trefoil(oracle):
    verifier = BraidVerifier(oracle, ShapeSynthesizer())
    verdicts, shape, table = verifier.verify(parse_word("D a", 3))
    names = [v.name for v in verdicts]
    assert names[:2] == ["shape-vs-oracle", "oracle-vs-known[D s1]"]
    assert "corner" in names
    assert all(v.passed for v in verdicts)
    assert table == known_table("D s1")
    assert not shape.region.complete


def test_braid_verifier_without_a_known_table(oracle):
    verdicts, _, _ = BraidVerifier(oracle, ShapeSynthesizer()).verify(parse_word("aabbb", 3))
    assert not any(v.name.startswith("oracle-vs-known") for v in verdicts)
    assert all(v.passed for v in verdicts)

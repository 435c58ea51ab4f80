import logging

from tribraid.braids.garside import normal_form
from tribraid.core.interfaces import HomologyEngine, TableSynthesizer
from tribraid.core.types import (
    AbelianGroup,
    BraidWord,
    CellMismatch,
    HomologyTable,
    PartialTable,
    Verdict,
    VerdictStatus,
)
from tribraid.core.utils import timer
from tribraid.diagrams.builder import from_braid_closure
from tribraid.homology.groups import render_group
from tribraid.tables.golden import find_by_word
from tribraid.tables.shapes import end_table_checks

logger = logging.getLogger(__name__)


class TableComparator:
    """
    Cell-for-cell comparison of tables, including torsion.
    """

    @staticmethod
    def on_region(name: str, expected: PartialTable, found: HomologyTable) -> Verdict:
        """Every cell inside the determined region must agree; zeros included."""
        keys = {k for k in set(expected.cells) | set(found.cells) if expected.region.contains(*k)}
        return TableComparator._verdict(name, keys, expected.cells, found.cells)

    @staticmethod
    def exact(name: str, expected: HomologyTable, found: HomologyTable) -> Verdict:
        keys = set(expected.cells) | set(found.cells)
        return TableComparator._verdict(name, keys, expected.cells, found.cells)

    @staticmethod
    def _verdict(
        name: str,
        keys: set[tuple[int, int]],
        expected: dict[tuple[int, int], AbelianGroup],
        found: dict[tuple[int, int], AbelianGroup],
    ) -> Verdict:
        zero = AbelianGroup()
        for i, j in sorted(keys):
            e, f = expected.get((i, j), zero), found.get((i, j), zero)
            if e != f:
                return Verdict(
                    name=name,
                    status=VerdictStatus.FAIL,
                    witness=CellMismatch(
                        i=i, j=j, expected=render_group(e), found=render_group(f)
                    ),
                    detail=f"{len(keys)} cells compared",
                )
        return Verdict(name=name, status=VerdictStatus.PASS, detail=f"{len(keys)} cells compared")


class BraidVerifier:
    """
    Runs the closed-form synthesizer and the homology engine on the same braid
    and cross-checks them, and the engine against the known tables.
    """

    def __init__(self, engine: HomologyEngine, synthesizer: TableSynthesizer) -> None:
        self.engine = engine
        self.synthesizer = synthesizer

    def verify(
        self, w: BraidWord, golden_path: str | None = None
    ) -> tuple[list[Verdict], PartialTable, HomologyTable]:
        nf = normal_form(w)
        with timer(logger, "shape"):
            shape = self.synthesizer.synthesize(nf)
        with timer(logger, "oracle"):
            table = self.engine.homology(from_braid_closure(w))

        verdicts = [TableComparator.on_region("shape-vs-oracle", shape, table)]

        known = find_by_word(w, golden_path)
        if known is not None:
            name = f"oracle-vs-known[{known.name}]"
            verdicts.append(TableComparator.exact(name, known.table(), table))
        else:
            logger.debug("no known table for this word, skipping the golden comparison")

        verdicts.extend(end_table_checks(nf, table))

        for v in verdicts:
            if not v.passed:
                logger.warning(f"verification '{v.name}' failed: {v.witness or v.detail}")
        return verdicts, shape, table

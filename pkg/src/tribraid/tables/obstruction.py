"""
Braid-positivity obstruction for 3-braids.

A closed positive 3-braid has either one of the six exceptional tables exactly
or one of the four L-shaped patterns in its columns 0..3 and rows
j_low..j_low+4. A table matching none of them cannot come from a closed
positive 3-braid.
"""

import logging

from tribraid.core.types import AbelianGroup, CellMismatch, HomologyTable, ObstructionVerdict
from tribraid.homology.groups import render_group
from tribraid.tables.golden import N_TABLES, known_table
from tribraid.tables.shapes import C_PATTERNS, lshape_region, pattern_cells

logger = logging.getLogger(__name__)

BRAID_INDEX_REMARK = "if the link is braid positive, its braid index is at least 4"

Cells = dict[tuple[int, int], AbelianGroup]


def _mismatches(found: Cells, expected: Cells, keys: set[tuple[int, int]]) -> list[CellMismatch]:
    zero = AbelianGroup()
    out = []
    for i, j in sorted(keys):
        e, f = expected.get((i, j), zero), found.get((i, j), zero)
        if e != f:
            out.append(CellMismatch(i=i, j=j, expected=render_group(e), found=render_group(f)))
    return out


def matches_positive3(t: HomologyTable) -> ObstructionVerdict:
    """
    Compatible when `t` equals an exceptional table, or agrees with an L-shaped
    pattern at j_low = the lowest nonzero row. Otherwise the witness is the
    first disagreeing cell of the closest candidate.
    """
    negative = sorted((i, j) for i, j in t.cells if i < 0)
    if negative:
        i, j = negative[0]
        return ObstructionVerdict(
            compatible=False,
            witness=CellMismatch(i=i, j=j, expected="0", found=render_group(t.group(i, j))),
            remark=BRAID_INDEX_REMARK,
        )

    candidates: list[tuple[str, int, list[CellMismatch]]] = []
    for member, name in N_TABLES.items():
        exact = known_table(name).cells
        low = min(j for _, j in exact)
        keys = set(exact) | set(t.cells)
        candidates.append((f"N({member.value})", low, _mismatches(t.cells, exact, keys)))

    j_low = min((j for _, j in t.cells), default=0)
    if j_low >= 0:
        region = lshape_region(j_low)
        for pattern in C_PATTERNS:
            expected = pattern_cells(pattern, j_low)
            keys = {k for k in set(expected) | set(t.cells) if region.contains(*k)}
            candidates.append((pattern, j_low, _mismatches(t.cells, expected, keys)))

    for pattern, low, bad in candidates:
        if not bad:
            logger.debug(f"table matches {pattern} at j_low={low}")
            return ObstructionVerdict(compatible=True, pattern=pattern, j_low=low)

    pattern, low, bad = min(candidates, key=lambda c: len(c[2]))
    logger.debug(f"closest pattern {pattern} at j_low={low}: {len(bad)} disagreeing cells")
    return ObstructionVerdict(
        compatible=False, pattern=pattern, j_low=low, witness=bad[0], remark=BRAID_INDEX_REMARK
    )

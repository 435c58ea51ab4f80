"""
ASCII and JSON renderings of homology tables.

ASCII tables list rows by descending j and columns by ascending i. Blank cells
are known to be zero; cells outside the determined region of a partial table
show the residual block label (`?` when there is none).
"""

from typing import Any

from tribraid.core.types import (
    SCHEMA_VERSION,
    BlockLabel,
    HomologyTable,
    PartialTable,
    Region,
)
from tribraid.homology.groups import parse_group, render_group


def _as_partial(t: PartialTable | HomologyTable) -> PartialTable:
    if isinstance(t, PartialTable):
        return t
    return PartialTable(cells=dict(t.cells))


def render_table(t: PartialTable | HomologyTable) -> str:
    table = _as_partial(t)
    region = table.region
    if not table.cells and region.complete:
        return "(zero table)\n"

    i_values = [i for i, _ in table.cells]
    j_values = [j for _, j in table.cells]
    if not region.complete:
        # one column and one row past the region, where the block starts
        i_values += [0, region.i_max + 1]
        j_values += [region.j_low, region.j_max + 2]
    i_lo, i_hi = min(i_values), max(i_values)
    j_lo, j_hi = min(j_values), max(j_values)

    shade = "?" if table.block == BlockLabel.NONE else table.block.value
    header = ["j\\i"] + [str(i) for i in range(i_lo, i_hi + 1)]
    rows = [header]
    for j in range(j_hi, j_lo - 1, -1):
        if (j - j_lo) % 2:
            continue
        row = [str(j)]
        for i in range(i_lo, i_hi + 1):
            if not region.contains(i, j):
                row.append(shade)
            elif (i, j) in table.cells:
                row.append(render_group(table.cells[(i, j)]))
            else:
                row.append("")
        rows.append(row)

    widths = [max(len(r[k]) for r in rows) for k in range(len(header))]
    lines = []
    for n, row in enumerate(rows):
        lines.append(" | ".join(cell.rjust(w) for cell, w in zip(row, widths, strict=True)))
        if n == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def table_record(t: PartialTable | HomologyTable) -> dict[str, Any]:
    """JSON-ready record; partial tables add a `determined` stanza."""
    record: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "cells": [
            {"i": i, "j": j, "group": render_group(g)} for (i, j), g in sorted(t.cells.items())
        ],
    }
    if isinstance(t, PartialTable):
        record["determined"] = t.region.model_dump()
        record["block"] = t.block.value
    return record


def parse_table_records(record: dict[str, Any]) -> PartialTable | HomologyTable:
    """Inverse of table_record."""
    try:
        cells = {(int(c["i"]), int(c["j"])): parse_group(c["group"]) for c in record["cells"]}
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed table record: {e}") from e
    if "determined" not in record:
        return HomologyTable(cells=cells)
    return PartialTable(
        cells=cells,
        region=Region.model_validate(record["determined"]),
        block=BlockLabel(record.get("block", BlockLabel.NONE.value)),
    )

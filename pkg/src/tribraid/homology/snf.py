"""
Smith normal form of sparse integer matrices.

Khovanov differentials are sparse with +-1 entries, so most of the rank is
found by eliminating unit pivots on a dict-of-rows representation (fewest
column neighbours first). Only the remainder, which carries the torsion, goes
to sympy's dense invariant-factor routine.
"""

import logging
import sys

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from tribraid.core.types import IntegerMatrix
from tribraid.homology.groups import from_primary, primary_parts

logger = logging.getLogger(__name__)

Rows = dict[int, dict[int, int]]
Cols = dict[int, set[int]]


def _pivot(rows: Rows, cols: Cols, r: int, c: int) -> None:
    prow = rows.pop(r)
    v = prow[c]
    for c2 in prow:
        cols[c2].discard(r)
    for r2 in list(cols[c]):
        row2 = rows[r2]
        f = row2[c] * v  # v is +-1, so v^-1 = v
        for c2, x in prow.items():
            y = row2.get(c2, 0) - f * x
            if y:
                row2[c2] = y
                cols.setdefault(c2, set()).add(r2)
            else:
                row2.pop(c2, None)
                cols[c2].discard(r2)
        if not row2:
            del rows[r2]
    del cols[c]


def eliminate_unit_pivots(m: IntegerMatrix) -> tuple[int, Rows]:
    """Returns (number of unit pivots, remaining rows)."""
    rows: Rows = {}
    cols: Cols = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)

    eliminated = 0
    progress = True
    while progress:
        progress = False
        for r in sorted(rows, key=lambda k: len(rows[k])):
            row = rows.get(r)
            if not row:
                continue
            best = -1
            for c, v in row.items():
                if v in (1, -1) and (best < 0 or len(cols[c]) < len(cols[best])):
                    best = c
            if best < 0:
                continue
            _pivot(rows, cols, r, best)
            eliminated += 1
            progress = True
    return eliminated, rows


def _dense_factors(rows: Rows) -> list[int]:
    col_ids = sorted({c for row in rows.values() for c in row})
    row_ids = sorted(rows)
    if not row_ids or not col_ids:
        return []
    position = {c: k for k, c in enumerate(col_ids)}
    dense = [[ZZ(0)] * len(col_ids) for _ in row_ids]
    for k, r in enumerate(row_ids):
        for c, v in rows[r].items():
            dense[k][position[c]] = ZZ(v)

    # sympy recurses once per diagonal entry
    depth = min(len(row_ids), len(col_ids)) + 200
    if sys.getrecursionlimit() < depth:
        sys.setrecursionlimit(depth)
    logger.debug(f"dense invariant factors on a {len(row_ids)}x{len(col_ids)} remainder")
    factors = invariant_factors(DomainMatrix(dense, (len(row_ids), len(col_ids)), ZZ))
    return [abs(int(f)) for f in factors if f]


def smith_normal_form(m: IntegerMatrix) -> tuple[tuple[int, ...], int]:
    """
    Invariant factors d1 | d2 | ... | dr (units included) and the rank r.
    """
    units, remainder = eliminate_unit_pivots(m)
    rest = _dense_factors(remainder)
    rank = units + len(rest)

    # units first, then the torsion reassembled as a divisibility chain
    torsion = from_primary(0, primary_parts(d for d in rest if d > 1)).torsion
    return (1,) * (rank - len(torsion)) + torsion, rank

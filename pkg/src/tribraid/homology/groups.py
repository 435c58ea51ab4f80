"""
Finitely generated abelian groups in invariant-factor form, and the
table-level operations built on them.
"""

import re
from collections import Counter
from collections.abc import Iterable

from sympy import factorint

from tribraid.core.types import AbelianGroup, HomologyTable

_TERM = re.compile(r"^(?:\((Z(?:/(\d+))?)\)|(Z(?:/(\d+))?))(?:\^(\d+))?$")


def primary_parts(torsion: Iterable[int]) -> Counter[int]:
    """Multiset of prime powers p^e with Z/d = sum of Z/p^e."""
    parts: Counter[int] = Counter()
    for d in torsion:
        for prime, e in factorint(d).items():
            parts[int(prime) ** e] += 1
    return parts


def from_primary(free_rank: int, parts: Counter[int]) -> AbelianGroup:
    """Reassembles prime powers into the divisibility chain d1 | d2 | ..."""
    by_prime: dict[int, list[int]] = {}
    for q, mult in parts.items():
        if mult <= 0:
            continue
        prime = int(next(iter(factorint(q))))
        by_prime.setdefault(prime, []).extend([q] * mult)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for powers in by_prime.values():
        # the largest powers go into the last factors
        for k, q in enumerate(sorted(powers, reverse=True)):
            factors[length - 1 - k] *= q
    return AbelianGroup(free_rank=free_rank, torsion=tuple(factors))


def group_from_factors(free_rank: int, factors: Iterable[int]) -> AbelianGroup:
    """Group from any list of cyclic orders; units are dropped."""
    return from_primary(free_rank, primary_parts(abs(d) for d in factors if abs(d) > 1))


def direct_sum(g: AbelianGroup, h: AbelianGroup) -> AbelianGroup:
    return from_primary(g.free_rank + h.free_rank, primary_parts(g.torsion + h.torsion))


def contains_summand(g: AbelianGroup, h: AbelianGroup) -> bool:
    """True when g = h + k for some k."""
    if h.free_rank > g.free_rank:
        return False
    mine = primary_parts(g.torsion)
    return all(mine[q] >= mult for q, mult in primary_parts(h.torsion).items())


def complement(g: AbelianGroup, h: AbelianGroup) -> AbelianGroup:
    """The k with g = h + k; raises ValueError when h is not a summand."""
    if not contains_summand(g, h):
        raise ValueError(f"{render_group(h)} is not a summand of {render_group(g)}")
    parts = primary_parts(g.torsion)
    parts.subtract(primary_parts(h.torsion))
    return from_primary(g.free_rank - h.free_rank, parts)


def render_group(g: AbelianGroup) -> str:
    """`0`, `Z`, `Z^2`, `Z/2`, `(Z/2)^2`, `Z+Z/2`, ..."""
    terms = []
    if g.free_rank:
        terms.append("Z" if g.free_rank == 1 else f"Z^{g.free_rank}")
    for d, mult in sorted(Counter(g.torsion).items()):
        terms.append(f"Z/{d}" if mult == 1 else f"(Z/{d})^{mult}")
    return "+".join(terms) if terms else "0"


def parse_group(text: str) -> AbelianGroup:
    text = text.replace(" ", "")
    if text in ("", "0"):
        return AbelianGroup()
    free = 0
    torsion: list[int] = []
    for term in text.split("+"):
        match = _TERM.match(term)
        if not match:
            raise ValueError(f"malformed group term '{term}' in '{text}'")
        order = match.group(2) or match.group(4)
        mult = int(match.group(5) or 1)
        if order is None:
            free += mult
        else:
            torsion.extend([int(order)] * mult)
    return group_from_factors(free, torsion)


def table_direct_sum(a: HomologyTable, b: HomologyTable) -> HomologyTable:
    cells = dict(a.cells)
    for key, g in b.cells.items():
        cells[key] = direct_sum(cells[key], g) if key in cells else g
    return HomologyTable(cells=cells)


def mirror_table(t: HomologyTable) -> HomologyTable:
    """
    Table of the mirror image: free parts move (i, j) -> (-i, -j) and torsion
    moves (i, j) -> (1 - i, -j).
    """
    free: dict[tuple[int, int], AbelianGroup] = {}
    for (i, j), g in t.cells.items():
        if g.free_rank:
            free[(-i, -j)] = AbelianGroup(free_rank=g.free_rank)
    torsion: dict[tuple[int, int], AbelianGroup] = {}
    for (i, j), g in t.cells.items():
        if g.torsion:
            torsion[(1 - i, -j)] = AbelianGroup(torsion=g.torsion)
    return table_direct_sum(HomologyTable(cells=free), HomologyTable(cells=torsion))


def total_rank(t: HomologyTable) -> int:
    return sum(g.free_rank for g in t.cells.values())

"""
The enhanced-state chain complex of a diagram.

States are bitmasks over crossings (bit t set = B-smoothing at crossing t).
Circles of a state are numbered by their lowest arc, followed by the
crossingless loops; an enhancement is a bitmask over circles (bit set = +).
Bases of C^{i,j} are ordered by state mask, then by enhancement mask, both
ascending.
"""

import logging
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from tribraid.core.types import EnhancedState, IntegerMatrix, LinkDiagram, Port, State
from tribraid.diagrams.diagram import circle_arcs

logger = logging.getLogger(__name__)


class StateCircles(NamedTuple):
    circle_of_arc: tuple[int, ...]
    first_arc: tuple[int, ...]  # lowest arc of every arc-carrying circle
    count: int  # including crossingless loops


@lru_cache(maxsize=4)
def state_circles(d: LinkDiagram) -> tuple[StateCircles, ...]:
    """Circle data for all 2^c states, indexed by mask."""
    table = []
    for mask in range(1 << d.crossing_count):
        circles = circle_arcs(d, mask)
        labels: dict[int, int] = {}
        first: list[int] = []
        of_arc = []
        for a in range(d.arc_count):
            root = circles[a]
            if root not in labels:
                labels[root] = len(first)
                first.append(a)
            of_arc.append(labels[root])
        table.append(StateCircles(tuple(of_arc), tuple(first), len(first) + d.free_loops))
    return tuple(table)


@lru_cache(maxsize=64)
def masks_with_b_count(crossings: int, b: int) -> tuple[int, ...]:
    """State masks with exactly b B-smoothings, ascending."""
    return tuple(m for m in range(1 << crossings) if m.bit_count() == b)


def degrees(d: LinkDiagram, s: EnhancedState) -> tuple[int, int]:
    """i = (w - sigma)/2 and j = (3w - sigma + 2 tau)/2."""
    sigma = s.state.sigma
    w = d.writhe
    if (w - sigma) % 2 or (3 * w - sigma + 2 * s.tau) % 2:
        raise ArithmeticError(f"half-integer degree for {s} on a diagram of writhe {w}")
    return (w - sigma) // 2, (3 * w - sigma + 2 * s.tau) // 2


def plus_count(d: LinkDiagram, mask: int, circles: int, j: int) -> int | None:
    """Number of + circles an enhancement of `mask` needs to sit in degree j."""
    c = d.crossing_count
    sigma = c - 2 * mask.bit_count()
    twice_tau = 2 * j - 3 * d.writhe + sigma
    if twice_tau % 2:
        return None
    tau = twice_tau // 2
    if abs(tau) > circles or (tau + circles) % 2:
        return None
    return (tau + circles) // 2


def basis(d: LinkDiagram, i: int, j: int) -> list[tuple[int, int]]:
    """Canonically ordered (state mask, enhancement mask) pairs spanning C^{i,j}."""
    c = d.crossing_count
    b = i + d.negative_count
    if not 0 <= b <= c:
        return []
    table = state_circles(d)
    elements = []
    for mask in masks_with_b_count(c, b):
        k = table[mask].count
        plus = plus_count(d, mask, k, j)
        if plus is None:
            continue
        signs = sorted(sum(1 << x for x in chosen) for chosen in combinations(range(k), plus))
        elements.extend((mask, e) for e in signs)
    return elements


def enhanced_state(d: LinkDiagram, mask: int, signs: int) -> EnhancedState:
    k = state_circles(d)[mask].count
    return EnhancedState(
        state=State.from_mask(mask, d.crossing_count),
        circle_signs=tuple(1 if signs >> x & 1 else -1 for x in range(k)),
    )


def _images(
    d: LinkDiagram, source: StateCircles, target: StateCircles, t: int, signs: int
) -> list[int]:
    """Enhancements of the target state hit by d on one edge of the cube."""
    arcs = d.crossings[t].arcs
    a = source.circle_of_arc[arcs[Port.NW]]
    b = source.circle_of_arc[arcs[Port.SE]]

    base = 0
    for x, arc in enumerate(source.first_arc):
        if x not in (a, b) and signs >> x & 1:
            base |= 1 << target.circle_of_arc[arc]
    loops_from, loops_to = len(source.first_arc), len(target.first_arc)
    for f in range(source.count - loops_from):
        if signs >> (loops_from + f) & 1:
            base |= 1 << (loops_to + f)

    if a != b:
        # merge: ++ -> +, +- and -+ -> -, -- -> 0
        merged = 1 << target.circle_of_arc[arcs[Port.NW]]
        pluses = (signs >> a & 1) + (signs >> b & 1)
        if pluses == 2:
            return [base | merged]
        if pluses == 1:
            return [base]
        return []

    # split: + -> (+-) + (-+), - -> --
    first = 1 << target.circle_of_arc[arcs[Port.NW]]
    second = 1 << target.circle_of_arc[arcs[Port.SE]]
    if signs >> a & 1:
        return [base | first, base | second]
    return [base]


def differential_matrix(d: LinkDiagram, i: int, j: int) -> IntegerMatrix:
    """
    d^i: C^{i,j} -> C^{i+1,j}; columns follow basis(d, i, j), rows basis(d, i+1, j).
    The edge changing crossing t carries (-1)^(number of B-smoothings after t).
    """
    source_basis = basis(d, i, j)
    target_basis = basis(d, i + 1, j)
    row_of = {element: r for r, element in enumerate(target_basis)}
    table = state_circles(d)

    entries: dict[tuple[int, int], int] = {}
    for col, (mask, signs) in enumerate(source_basis):
        for t in range(d.crossing_count):
            if mask >> t & 1:
                continue
            target_mask = mask | 1 << t
            coefficient = -1 if (mask >> (t + 1)).bit_count() % 2 else 1
            for image in _images(d, table[mask], table[target_mask], t, signs):
                key = (row_of[(target_mask, image)], col)
                value = entries.get(key, 0) + coefficient
                if value:
                    entries[key] = value
                else:
                    entries.pop(key, None)

    return IntegerMatrix.model_construct(
        rows=len(target_basis), cols=len(source_basis), entries=entries
    )


def compose(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    """The product a . b."""
    if a.cols != b.rows:
        raise ValueError(f"cannot compose {a.rows}x{a.cols} with {b.rows}x{b.cols}")
    by_row: dict[int, list[tuple[int, int]]] = {}
    for (r, c), v in b.entries.items():
        by_row.setdefault(r, []).append((c, v))
    product: dict[tuple[int, int], int] = {}
    for (r, k), v in a.entries.items():
        for c, w in by_row.get(k, []):
            product[(r, c)] = product.get((r, c), 0) + v * w
    return IntegerMatrix(
        rows=a.rows, cols=b.cols, entries={key: v for key, v in product.items() if v}
    )

"""
Laurent polynomials in q attached to a diagram: the graded Euler characteristic
of a Khovanov table and the unnormalized Jones polynomial from the state sum.
The two agree on every diagram, which makes the bracket an independent check
on the oracle.
"""

import logging
from collections import Counter

import sympy as sp

from tribraid.core.config import get_settings
from tribraid.core.errors import CrossingGuardError
from tribraid.core.types import HomologyTable, LinkDiagram
from tribraid.diagrams.diagram import circle_count

logger = logging.getLogger(__name__)

q = sp.Symbol("q")


def graded_euler_characteristic(t: HomologyTable) -> sp.Expr:
    """Sum of (-1)^i rank(H^{i,j}) q^j; torsion does not contribute."""
    total = sp.Integer(0)
    for (i, j), g in t.cells.items():
        if g.free_rank:
            total += (-1) ** i * g.free_rank * q**j
    return sp.expand(total)


def kauffman_bracket_jones(d: LinkDiagram, max_crossings: int | None = None) -> sp.Expr:
    """
    Sum over states s of (-1)^(b(s) - n) q^((3w - sigma(s))/2) (q + 1/q)^|sD|.
    """
    c = d.crossing_count
    limit = max_crossings or get_settings().MAX_CROSSINGS
    if c > limit:
        raise CrossingGuardError(c, limit)

    w, n = d.writhe, d.negative_count
    # (sign, exponent of q, circles) -> multiplicity
    terms: Counter[tuple[int, int, int]] = Counter()
    for mask in range(1 << c):
        b = mask.bit_count()
        sigma = c - 2 * b
        sign = -1 if (b - n) % 2 else 1
        terms[(sign, (3 * w - sigma) // 2, circle_count(d, mask))] += 1

    total = sp.Integer(0)
    for (sign, shift, circles), mult in terms.items():
        total += sign * mult * q**shift * (q + 1 / q) ** circles
    result = sp.expand(total)
    logger.debug(f"bracket over {1 << c} states: {result}")
    return result

"""
Diagram construction.

Both builders stack crossings on vertical strand positions. Loose ends are
joined with a union-find over crossing ports (ids t*4+port) and auxiliary
joint nodes (negative ids); each resulting class holds exactly two ports
(an arc) or none (a crossingless loop).
"""

import logging

from scipy.cluster.hierarchy import DisjointSet

from tribraid.core.errors import DiagramError, PreconditionError
from tribraid.core.types import BraidWord, Crossing, LinkDiagram, OverStrand, Port, RationalCode
from tribraid.diagrams.diagram import crossing_sign

logger = logging.getLogger(__name__)

_BOTTOM_PORTS = (Port.SW, Port.SE)


class _StrandStack:
    """Crossings stacked top to bottom on positions 1..width."""

    def __init__(self, width: int) -> None:
        self.width = width
        self.over: list[OverStrand] = []
        self.joints = DisjointSet()
        # the loose end currently hanging at each position
        self.loose: dict[int, int] = {}
        for k in range(1, width + 1):
            self.loose[k] = self.top(k)
            self.joints.add(self.top(k))

    def top(self, k: int) -> int:
        return -k

    def join(self, u: int, v: int) -> None:
        self.joints.add(u)
        self.joints.add(v)
        self.joints.merge(u, v)

    def cross(self, left: int, positive: bool) -> None:
        """A twist of positions left, left+1; `/` over for positive twists."""
        t = len(self.over)
        self.over.append(OverStrand.SLASH if positive else OverStrand.BACKSLASH)
        self.join(self.loose[left], 4 * t + Port.NW)
        self.join(self.loose[left + 1], 4 * t + Port.NE)
        self.loose[left] = 4 * t + Port.SW
        self.loose[left + 1] = 4 * t + Port.SE

    def arcs(self) -> tuple[dict[int, int], list[list[int]], int]:
        """
        Arc ids in order of first appearance (crossings in order, ports
        NW, NE, SW, SE); returns (port -> arc, ports per arc, free loops).
        """
        port_arc: dict[int, int] = {}
        arc_ports: list[list[int]] = []
        root_arc: dict[int, int] = {}
        for node in range(4 * len(self.over)):
            root = self.joints[node]
            if root not in root_arc:
                root_arc[root] = len(arc_ports)
                arc_ports.append([])
            port_arc[node] = root_arc[root]
            arc_ports[root_arc[root]].append(node)

        if any(len(ports) != 2 for ports in arc_ports):
            raise DiagramError("an arc does not join exactly two crossing ports")

        free_loops = sum(
            1 for subset in self.joints.subsets() if all(node < 0 for node in subset)
        )
        return port_arc, arc_ports, free_loops

    def diagram(
        self, arc_tails: list[tuple[int, int]], port_arc: dict[int, int], loops: int
    ) -> LinkDiagram:
        outgoing: list[set[Port]] = [set() for _ in self.over]
        for t, port in arc_tails:
            outgoing[t].add(Port(port))
        crossings = []
        for t, over in enumerate(self.over):
            arcs = tuple(port_arc[4 * t + p] for p in Port)
            sign = crossing_sign(over, outgoing[t])
            crossings.append(Crossing(arcs=arcs, over=over, sign=sign))  # type: ignore[arg-type]
        return LinkDiagram(
            crossings=tuple(crossings),
            arc_count=len(arc_tails),
            arc_tails=tuple(arc_tails),
            free_loops=loops,
        )


def from_braid_closure(w: BraidWord) -> LinkDiagram:
    """
    Standard closed-braid diagram. Strands run downward, crossings follow the
    word, and the bottom of position k is joined to its top.
    """
    stack = _StrandStack(w.strands)
    for x in w.letters:
        stack.cross(abs(x), positive=x > 0)
    for k in range(1, w.strands + 1):
        stack.join(stack.loose[k], stack.top(k))

    port_arc, arc_ports, loops = stack.arcs()
    # every arc leaves one crossing downward and enters the next from above
    tails = []
    for ports in arc_ports:
        tail = next(node for node in ports if Port(node % 4) in _BOTTOM_PORTS)
        tails.append((tail // 4, tail % 4))
    d = stack.diagram(tails, port_arc, loops)
    logger.debug(f"closure of {len(w)} letters: {d.arc_count} arcs, {loops} free loops")
    return d


def from_rational_code(code: RationalCode) -> LinkDiagram:
    """
    Standard rational diagram on four positions: caps (1,2), (3,4) on top;
    box k twists positions 2,3 for odd k and 1,2 for even k, |a_k| times,
    positive twists for a_k > 0; the bottom is capped (1,2), (3,4) for odd m
    and (1,4), (2,3) for even m. Zero entries give empty boxes.
    """
    if not code.entries:
        raise PreconditionError("a rational diagram needs a non-empty code")

    stack = _StrandStack(4)
    stack.join(stack.top(1), stack.top(2))
    stack.join(stack.top(3), stack.top(4))
    for k, a in enumerate(code.entries, start=1):
        left = 2 if k % 2 == 1 else 1
        for _ in range(abs(a)):
            stack.cross(left, positive=a > 0)
    if len(code.entries) % 2 == 1:
        caps = ((1, 2), (3, 4))
    else:
        caps = ((1, 4), (2, 3))
    for u, v in caps:
        stack.join(stack.loose[u], stack.loose[v])

    port_arc, arc_ports, loops = stack.arcs()
    tails = _canonical_orientation(port_arc, arc_ports)
    return stack.diagram(tails, port_arc, loops)


def _canonical_orientation(
    port_arc: dict[int, int], arc_ports: list[list[int]]
) -> list[tuple[int, int]]:
    """
    Each component is oriented from its lowest-numbered arc, running from that
    arc's first port to its second, then straight through every crossing.
    """
    tails: list[tuple[int, int] | None] = [None] * len(arc_ports)
    for start in range(len(arc_ports)):
        if tails[start] is not None:
            continue
        arc, tail = start, arc_ports[start][0]
        while tails[arc] is None:
            tails[arc] = (tail // 4, tail % 4)
            head = arc_ports[arc][1] if arc_ports[arc][0] == tail else arc_ports[arc][0]
            # leave the crossing through the port opposite the head
            tail = 4 * (head // 4) + Port(head % 4).opposite
            arc = port_arc[tail]
    return [t for t in tails if t is not None]

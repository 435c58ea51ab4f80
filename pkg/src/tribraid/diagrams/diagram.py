"""
Operations on oriented link diagrams: smoothings, circle counts, the
quantum-degree bounds, A-adequacy, components and PD-style text exchange.
"""

import logging

from scipy.cluster.hierarchy import DisjointSet

from tribraid.core.errors import DiagramError
from tribraid.core.types import Crossing, LinkDiagram, OverStrand, Port, Smoothing, State

logger = logging.getLogger(__name__)

# Port coordinates in the local crossing frame
PORT_XY: dict[Port, tuple[int, int]] = {
    Port.NW: (-1, 1),
    Port.NE: (1, 1),
    Port.SW: (-1, -1),
    Port.SE: (1, -1),
}

_VERTICAL = ((Port.NW, Port.SW), (Port.NE, Port.SE))
_HORIZONTAL = ((Port.NW, Port.NE), (Port.SW, Port.SE))


def smoothing_pairs(over: OverStrand, label: Smoothing) -> tuple[tuple[Port, Port], ...]:
    """
    Port pairs joined by a smoothing. The A-smoothing of `/` is vertical and
    the A-smoothing of `\\` is horizontal; B is the other one.
    """
    a_is_vertical = over == OverStrand.SLASH
    if (label == Smoothing.A) == a_is_vertical:
        return _VERTICAL
    return _HORIZONTAL


def crossing_sign(over: OverStrand, outgoing: set[Port]) -> int:
    """
    Sign of the cross product (over direction) x (under direction),
    each strand running from its incoming to its outgoing port.
    """
    over_ports = (Port.NE, Port.SW) if over == OverStrand.SLASH else (Port.NW, Port.SE)
    under_ports = (Port.NW, Port.SE) if over == OverStrand.SLASH else (Port.NE, Port.SW)

    def direction(ports: tuple[Port, Port]) -> tuple[int, int]:
        src, dst = ports if ports[1] in outgoing else (ports[1], ports[0])
        (x0, y0), (x1, y1) = PORT_XY[src], PORT_XY[dst]
        return x1 - x0, y1 - y0

    ox, oy = direction(over_ports)
    ux, uy = direction(under_ports)
    return 1 if ox * uy - oy * ux > 0 else -1


def outgoing_ports(d: LinkDiagram) -> list[set[Port]]:
    out: list[set[Port]] = [set() for _ in d.crossings]
    for t, port in d.arc_tails:
        out[t].add(Port(port))
    return out


def _as_mask(s: State | int) -> int:
    return s if isinstance(s, int) else s.mask


def circle_arcs(d: LinkDiagram, s: State | int) -> DisjointSet:
    """Union-find over arc ids after smoothing every crossing per `s`."""
    mask = _as_mask(s)
    circles = DisjointSet(range(d.arc_count))
    for t, x in enumerate(d.crossings):
        label = Smoothing.B if mask >> t & 1 else Smoothing.A
        for p, q in smoothing_pairs(x.over, label):
            circles.merge(x.arcs[p], x.arcs[q])
    return circles


def circle_count(d: LinkDiagram, s: State | int) -> int:
    """|sD|: arcs glued by the smoothings, plus crossingless loops."""
    if isinstance(s, State) and len(s.labels) != d.crossing_count:
        raise DiagramError(
            f"state has {len(s.labels)} labels for {d.crossing_count} crossings"
        )
    return circle_arcs(d, s).n_subsets + d.free_loops


def all_b_mask(d: LinkDiagram) -> int:
    return (1 << d.crossing_count) - 1


def j_bounds(d: LinkDiagram) -> tuple[int, int]:
    """(c - 3n - |s_A D|, -c + 3p + |s_B D|)."""
    c = d.crossing_count
    j_min = c - 3 * d.negative_count - circle_count(d, 0)
    j_max = -c + 3 * d.positive_count + circle_count(d, all_b_mask(d))
    return j_min, j_max


def is_a_adequate(d: LinkDiagram) -> bool:
    """No crossing's two A-smoothing arcs lie on the same circle of s_A D."""
    circles = circle_arcs(d, 0)
    # NW and SE always sit on different arcs of either smoothing
    return all(
        not circles.connected(x.arcs[Port.NW], x.arcs[Port.SE]) for x in d.crossings
    )


def component_count(d: LinkDiagram) -> int:
    strands = DisjointSet(range(d.arc_count))
    for x in d.crossings:
        strands.merge(x.arcs[Port.NW], x.arcs[Port.SE])
        strands.merge(x.arcs[Port.NE], x.arcs[Port.SW])
    return strands.n_subsets + d.free_loops


def crossing_census(d: LinkDiagram) -> tuple[int, int]:
    """(p(D), n(D))."""
    return d.positive_count, d.negative_count


def writhe(d: LinkDiagram) -> int:
    return d.writhe


def reorder_crossings(d: LinkDiagram, order: list[int]) -> LinkDiagram:
    """Same diagram with crossing k of the result being crossing order[k] of `d`."""
    if sorted(order) != list(range(d.crossing_count)):
        raise DiagramError(f"{order} is not a permutation of the crossings")
    position = {old: new for new, old in enumerate(order)}
    return LinkDiagram(
        crossings=tuple(d.crossings[t] for t in order),
        arc_count=d.arc_count,
        arc_tails=tuple((position[t], port) for t, port in d.arc_tails),
        free_loops=d.free_loops,
    )


def mirror_diagram(d: LinkDiagram) -> LinkDiagram:
    """Switches every crossing; orientation is kept, so every sign flips."""
    flipped = tuple(
        Crossing(
            arcs=x.arcs,
            over=OverStrand.BACKSLASH if x.over == OverStrand.SLASH else OverStrand.SLASH,
            sign=-x.sign,  # type: ignore[arg-type]
        )
        for x in d.crossings
    )
    return d.model_copy(update={"crossings": flipped})


# --- PD-style text ---

PD_HEADER = "# tribraid pd v1"


def to_pd_text(d: LinkDiagram) -> str:
    """
    One line per crossing: `X nw ne sw se <over> <sign> out=<port>,<port>`,
    preceded by the number of crossingless loops.
    """
    out = outgoing_ports(d)
    lines = [PD_HEADER, f"loops {d.free_loops}"]
    for t, x in enumerate(d.crossings):
        ports = ",".join(p.name for p in sorted(out[t]))
        nw, ne, sw, se = x.arcs
        lines.append(f"X {nw} {ne} {sw} {se} {x.over.value} {x.sign:+d} out={ports}")
    return "\n".join(lines) + "\n"


def parse_pd_text(text: str) -> LinkDiagram:
    """Inverse of to_pd_text; checks incidence, orientation and signs."""
    loops = 0
    crossings: list[Crossing] = []
    tails: dict[int, tuple[int, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if fields[0] == "loops":
                loops = int(fields[1])
                continue
            if fields[0] != "X" or len(fields) != 8 or not fields[7].startswith("out="):
                raise ValueError("expected `X nw ne sw se over sign out=P,Q`")
            arcs = tuple(int(a) for a in fields[1:5])
            over = OverStrand(fields[5])
            sign = int(fields[6])
            out = {Port[name] for name in fields[7][4:].split(",")}
        except (ValueError, KeyError, IndexError) as e:
            raise DiagramError(f"line {lineno}: {e}") from e

        t = len(crossings)
        for port in out:
            tails[arcs[port]] = (t, int(port))
        if len(out) != 2 or crossing_sign(over, out) != sign:
            raise DiagramError(f"line {lineno}: sign {sign:+d} disagrees with orientation")
        crossings.append(Crossing(arcs=arcs, over=over, sign=sign))  # type: ignore[arg-type]

    arc_count = max((max(x.arcs) for x in crossings), default=-1) + 1
    if sorted(tails) != list(range(arc_count)):
        raise DiagramError("every arc needs exactly one outgoing end")
    try:
        return LinkDiagram(
            crossings=tuple(crossings),
            arc_count=arc_count,
            arc_tails=tuple(tails[a] for a in range(arc_count)),
            free_loops=loops,
        )
    except ValueError as e:
        raise DiagramError(str(e)) from e


# --- Components & orientation ---


def component_of_arc(d: LinkDiagram) -> list[int]:
    """Component index per arc, numbered by lowest arc id."""
    strands = DisjointSet(range(d.arc_count))
    for x in d.crossings:
        strands.merge(x.arcs[Port.NW], x.arcs[Port.SE])
        strands.merge(x.arcs[Port.NE], x.arcs[Port.SW])
    labels: dict[int, int] = {}
    return [labels.setdefault(strands[a], len(labels)) for a in range(d.arc_count)]


def linking_number(d: LinkDiagram, first: int, second: int) -> int:
    """Half the signed count of crossings between two components."""
    comp = component_of_arc(d)
    total = 0
    for x in d.crossings:
        pair = {comp[x.arcs[Port.NW]], comp[x.arcs[Port.NE]]}
        if pair == {first, second}:
            total += x.sign
    return total // 2


def reverse_components(d: LinkDiagram, components: set[int]) -> LinkDiagram:
    """Reverses the orientation of the given components and recomputes signs."""
    if not components:
        return d
    comp = component_of_arc(d)
    ends: list[list[tuple[int, int]]] = [[] for _ in range(d.arc_count)]
    for t, x in enumerate(d.crossings):
        for port in Port:
            ends[x.arcs[port]].append((t, int(port)))
    tails = []
    for a, tail in enumerate(d.arc_tails):
        if comp[a] in components:
            tail = ends[a][1] if ends[a][0] == tuple(tail) else ends[a][0]
        tails.append(tail)

    outgoing: list[set[Port]] = [set() for _ in d.crossings]
    for t, port in tails:
        outgoing[t].add(Port(port))
    crossings = tuple(
        x.model_copy(update={"sign": crossing_sign(x.over, outgoing[t])})
        for t, x in enumerate(d.crossings)
    )
    return LinkDiagram(
        crossings=crossings,
        arc_count=d.arc_count,
        arc_tails=tuple(tails),
        free_loops=d.free_loops,
    )

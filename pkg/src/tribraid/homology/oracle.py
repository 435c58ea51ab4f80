"""
Exact integral Khovanov homology of a diagram.

Each quantum degree j is an independent subcomplex, so the oracle computes
one j at a time and farms the degrees out to worker processes once the
diagram is large enough for it to pay off.
"""

import logging
import multiprocessing as mp

from tribraid.core.config import Settings, get_settings
from tribraid.core.errors import CrossingGuardError
from tribraid.core.interfaces import HomologyEngine
from tribraid.core.types import AbelianGroup, HomologyTable, LinkDiagram
from tribraid.core.utils import timer
from tribraid.diagrams.diagram import j_bounds
from tribraid.homology.complex import basis, differential_matrix
from tribraid.homology.groups import group_from_factors
from tribraid.homology.snf import smith_normal_form

logger = logging.getLogger(__name__)


def compute_slice(d: LinkDiagram, j: int) -> dict[int, AbelianGroup]:
    """
    H^{*,j} from the Smith forms of consecutive differentials:
    rank H^i = dim C^i - rank d^i - rank d^(i-1), torsion = non-unit factors of d^(i-1).
    """
    n, p = d.negative_count, d.positive_count
    ranks: dict[int, int] = {}
    factors: dict[int, tuple[int, ...]] = {}
    dims: dict[int, int] = {}
    for i in range(-n - 1, p + 1):
        dims[i + 1] = len(basis(d, i + 1, j))
        if i < -n or not dims.get(i) or not dims[i + 1]:
            ranks[i], factors[i] = 0, ()
            continue
        factors[i], ranks[i] = smith_normal_form(differential_matrix(d, i, j))

    groups: dict[int, AbelianGroup] = {}
    for i in range(-n, p + 1):
        free = dims[i] - ranks[i] - ranks[i - 1]
        if free < 0:
            raise ArithmeticError(f"negative Betti number at ({i},{j})")
        g = group_from_factors(free, factors[i - 1])
        if not g.is_trivial:
            groups[i] = g
    return groups


def _slice_job(d: LinkDiagram, j: int) -> tuple[int, dict[int, AbelianGroup]]:
    return j, compute_slice(d, j)


class KhovanovOracle(HomologyEngine):
    """Brute-force cube-of-resolutions engine with a crossing guard."""

    def __init__(
        self,
        settings: Settings | None = None,
        max_crossings: int | None = None,
        workers: int | None = None,
    ) -> None:
        self.settings = settings or get_settings()
        self.max_crossings = max_crossings or self.settings.MAX_CROSSINGS
        self.workers = workers or self.settings.worker_count()

    def homology(self, diagram: LinkDiagram) -> HomologyTable:
        c = diagram.crossing_count
        if c > self.max_crossings:
            raise CrossingGuardError(c, self.max_crossings)

        j_min, j_max = j_bounds(diagram)
        degrees = list(range(j_min, j_max + 1, 2))
        parallel = self.workers > 1 and c >= self.settings.PARALLEL_MIN_CROSSINGS

        with timer(logger, "khovanov") as t:
            if parallel:
                logger.info(f"computing {len(degrees)} quantum degrees on {self.workers} workers")
                with mp.Pool(min(self.workers, len(degrees))) as pool:
                    slices = pool.starmap(_slice_job, [(diagram, j) for j in degrees])
            else:
                slices = [_slice_job(diagram, j) for j in degrees]

        cells = {(i, j): g for j, groups in slices for i, g in groups.items()}
        logger.info(
            f"Khovanov table of a {c}-crossing diagram: {len(cells)} nonzero cells "
            f"in {t['duration_ms']:.0f} ms",
            extra={"crossings": c, "duration_ms": t["duration_ms"]},
        )
        return HomologyTable(cells=cells)


def homology(d: LinkDiagram, max_crossings: int | None = None) -> HomologyTable:
    """Full table of `d` with the configured oracle."""
    return KhovanovOracle(max_crossings=max_crossings).homology(d)

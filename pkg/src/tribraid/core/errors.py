"""Exception hierarchy shared by every tribraid subpackage."""


class TribraidError(Exception):
    """Base class; the CLI turns these into exit status 2."""


class WordParseError(TribraidError, ValueError):
    """Malformed braid-word token, zero exponent or bad compact letter."""


class StrandCountError(TribraidError, ValueError):
    """Generator index out of range, or an operation restricted to 3 strands."""


class PreconditionError(TribraidError, ValueError):
    """An operation was called outside its documented domain."""


class NotPositiveError(TribraidError):
    def __init__(self, summit_infimum: int) -> None:
        super().__init__(
            f"not conjugate to a positive braid (summit infimum {summit_infimum})"
        )
        self.summit_infimum = summit_infimum


class ConjugationError(TribraidError):
    """A conjugation step failed to shrink the exponent mass by exactly 3."""


class CrossingGuardError(TribraidError):
    def __init__(self, crossings: int, limit: int) -> None:
        super().__init__(
            f"diagram has {crossings} crossings, oracle guard is {limit} "
            "(raise MAX_CROSSINGS or pass --max-crossings)"
        )
        self.crossings = crossings
        self.limit = limit


class BlockNotSummandError(TribraidError):
    def __init__(self, cell: tuple[int, int], detail: str) -> None:
        super().__init__(f"block not a summand at (i={cell[0]}, j={cell[1]}): {detail}")
        self.cell = cell


class DiagramError(TribraidError, ValueError):
    """Incidence or orientation violation in a link diagram."""

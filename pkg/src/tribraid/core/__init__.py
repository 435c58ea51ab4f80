from .config import Settings, get_settings
from .errors import (
    BlockNotSummandError,
    ConjugationError,
    CrossingGuardError,
    DiagramError,
    NotPositiveError,
    PreconditionError,
    StrandCountError,
    TribraidError,
    WordParseError,
)
from .interfaces import HomologyEngine, TableSynthesizer
from .utils import setup_logger, timer

__all__ = [
    "Settings",
    "get_settings",
    "BlockNotSummandError",
    "ConjugationError",
    "CrossingGuardError",
    "DiagramError",
    "NotPositiveError",
    "PreconditionError",
    "StrandCountError",
    "TribraidError",
    "WordParseError",
    "HomologyEngine",
    "TableSynthesizer",
    "setup_logger",
    "timer",
]

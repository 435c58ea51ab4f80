import os
import sys
from collections.abc import Callable

import pytest

# Ensure 'src' is in the python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from tribraid.braids.word import parse_word  # noqa: E402
from tribraid.core.config import Settings  # noqa: E402
from tribraid.core.types import BraidWord, LinkDiagram  # noqa: E402
from tribraid.diagrams.builder import from_braid_closure  # noqa: E402
from tribraid.homology.oracle import KhovanovOracle  # noqa: E402


@pytest.fixture
def word() -> Callable[[str], BraidWord]:
    """Parses a 3-strand word, e.g. word('D aa') or word('s1 s2^-1')."""
    return lambda text: parse_word(text, 3)


@pytest.fixture
def closure() -> Callable[..., LinkDiagram]:
    """Closed-braid diagram of a word given as text."""

    def build(text: str, strands: int = 3) -> LinkDiagram:
        return from_braid_closure(parse_word(text, strands))

    return build


@pytest.fixture(scope="session")
def test_settings() -> Settings:
    """Serial oracle with the default guard; reports go to a scratch directory."""
    return Settings(KHOVANOV_WORKERS=1, REPORT_DIR="./data/test_reports", GOLDEN_PATH=None)


@pytest.fixture(scope="session")
def oracle(test_settings: Settings) -> KhovanovOracle:
    return KhovanovOracle(test_settings, workers=1)

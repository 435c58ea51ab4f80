"""
Packaged Khovanov tables of small closed 3-braids.

`base` tables feed the closed-form constructions; `reference` tables are only
compared against. The file can be swapped with GOLDEN_PATH.
"""

import json
import logging
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from tribraid.braids.word import parse_word
from tribraid.core.config import get_settings
from tribraid.core.types import SCHEMA_VERSION, BraidWord, HomologyTable, NMember
from tribraid.core.utils import safe_read_file
from tribraid.homology.groups import parse_group

logger = logging.getLogger(__name__)

PACKAGED_TABLES = "known_tables.json"

# closures of the N members, keyed by member
N_TABLES: dict[NMember, str] = {
    NMember.IDENTITY: "unlink3",
    NMember.S1: "s1",
    NMember.S1_SQUARED: "s1^2",
    NMember.S1S2: "s1 s2",
    NMember.S1SQ_S2SQ: "s1^2 s2^2",
    NMember.DELTA: "D",
}

# r -> (table of r, table of Delta^2 r)
JAEGER_BLOCKS: dict[tuple[int, ...], tuple[str, str]] = {
    (): ("unlink3", "D^2"),
    (1,): ("s1", "D^2 s1"),
    (1, 2): ("s1 s2", "D^2 s1 s2"),
}


class TableRole(str, Enum):
    BASE = "base"
    REFERENCE = "reference"


class CellRecord(BaseModel):
    i: int
    j: int
    group: str


class KnownTable(BaseModel):
    name: str
    word: str
    role: TableRole
    provenance: str = ""
    cells: list[CellRecord] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    def braid(self) -> BraidWord:
        return parse_word(self.word, 3)

    def table(self) -> HomologyTable:
        return HomologyTable(cells={(c.i, c.j): parse_group(c.group) for c in self.cells})


class KnownTableFile(BaseModel):
    schema_version: str = SCHEMA_VERSION
    strands: int = 3
    tables: list[KnownTable] = Field(default_factory=list)


def _packaged_text() -> str:
    return resources.files("tribraid.tables").joinpath("data", PACKAGED_TABLES).read_text(
        encoding="utf-8"
    )


@lru_cache(maxsize=8)
def load_known_tables(path: str | None = None) -> dict[str, KnownTable]:
    """
    Known tables by name. `path` (or GOLDEN_PATH) replaces the packaged file.
    """
    source = path or get_settings().GOLDEN_PATH
    text = safe_read_file(Path(source)) if source else _packaged_text()
    try:
        data = KnownTableFile.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValueError) as e:
        raise ValueError(f"Invalid known-table file {source or PACKAGED_TABLES}: {e}") from e
    if data.schema_version != SCHEMA_VERSION:
        logger.warning(
            f"known-table file has schema {data.schema_version}, expected {SCHEMA_VERSION}"
        )
    logger.debug(f"loaded {len(data.tables)} known tables from {source or PACKAGED_TABLES}")
    return {t.name: t for t in data.tables}


def known_table(name: str, path: str | None = None) -> HomologyTable:
    tables = load_known_tables(path)
    if name not in tables:
        raise KeyError(f"no known table named '{name}'")
    return tables[name].table()


def find_by_word(w: BraidWord, path: str | None = None) -> KnownTable | None:
    """The known table whose braid word is letter-for-letter `w`, if any."""
    for entry in load_known_tables(path).values():
        if entry.braid().letters == w.letters:
            return entry
    return None

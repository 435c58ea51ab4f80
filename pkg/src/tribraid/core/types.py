from enum import Enum, IntEnum
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

SCHEMA_VERSION = "1"

Cell = tuple[int, int]


# --- Braids ---


class BraidLetter(BaseModel):
    """One Artin generator or its inverse."""

    generator_index: int = Field(ge=1)
    sign: Literal[1, -1] = 1

    model_config = ConfigDict(frozen=True)

    def as_signed(self) -> int:
        return self.sign * self.generator_index


class BraidWord(BaseModel):
    """
    A braid word on `strands` strands.
    Letters are stored as signed generator indices (+i for s_i, -i for its inverse)
    so that million-letter words stay cheap to build and hash.
    """

    strands: int = Field(ge=1)
    letters: tuple[int, ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_bounds(self) -> "BraidWord":
        if not self.letters:
            return self
        top = self.strands - 1
        if 0 in self.letters or max(self.letters) > top or min(self.letters) < -top:
            raise ValueError(
                f"generator index out of range for {self.strands} strands: {self.letters}"
            )
        return self

    def __len__(self) -> int:
        return len(self.letters)

    def letter(self, position: int) -> BraidLetter:
        x = self.letters[position]
        return BraidLetter(generator_index=abs(x), sign=1 if x > 0 else -1)


class NormalForm3(BaseModel):
    """
    Left normal form of a 3-braid, stored as Delta^p s_a^k1 s_b^k2 ... with
    generators alternating from `first_gen`.
    """

    p: int = 0
    first_gen: int = Field(default=0, ge=0, le=2)
    exponents: tuple[int, ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_shape(self) -> "NormalForm3":
        m = len(self.exponents)
        if (m == 0) != (self.first_gen == 0):
            raise ValueError("first_gen must be 0 exactly when the exponent list is empty")
        if m and min(self.exponents) < 1:
            raise ValueError(f"exponents must be positive: {self.exponents}")
        if m > 2 and min(self.exponents[1:-1]) < 2:
            raise ValueError(f"interior exponents must be >= 2: {self.exponents}")
        return self

    @property
    def last_gen(self) -> int:
        m = len(self.exponents)
        if m == 0:
            return 0
        return self.first_gen if m % 2 == 1 else 3 - self.first_gen

    @property
    def mass(self) -> int:
        """Sum of the exponents (letters outside the Delta power)."""
        return sum(self.exponents)


class SimpleFactor(str, Enum):
    S1 = "s1"
    S2 = "s2"
    S1S2 = "s1s2"
    S2S1 = "s2s1"
    DELTA = "D"


class LambdaFamily(str, Enum):
    LAMBDA1 = "L1"  # Delta^p
    LAMBDA2 = "L2"  # Delta^p s1^k
    LAMBDA3 = "L3"  # Delta^(2u) s1 s2
    LAMBDA4 = "L4"  # Delta^(2u) s1^k1 s2^k2 ... s2^k(2t), all k >= 2
    LAMBDA5 = "L5"  # Delta^(2u+1) s1^k1 ... s1^k(2t+1), all k >= 2


class LambdaClass(BaseModel):
    family: LambdaFamily
    representative: NormalForm3

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_family(self) -> "LambdaClass":
        rep = self.representative
        m = len(rep.exponents)
        ok = {
            LambdaFamily.LAMBDA1: m == 0,
            LambdaFamily.LAMBDA2: m == 1 and rep.first_gen == 1,
            LambdaFamily.LAMBDA3: rep.exponents == (1, 1)
            and rep.first_gen == 1
            and rep.p % 2 == 0,
            LambdaFamily.LAMBDA4: m >= 2
            and m % 2 == 0
            and rep.p % 2 == 0
            and rep.first_gen == 1
            and min(rep.exponents) >= 2,
            LambdaFamily.LAMBDA5: m >= 3
            and m % 2 == 1
            and rep.p % 2 == 1
            and rep.first_gen == 1
            and min(rep.exponents) >= 2,
        }[self.family]
        if not ok:
            raise ValueError(f"{rep} does not satisfy the {self.family.value} constraints")
        return self


class FamilyKind(str, Enum):
    N = "N"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4A = "C4a"
    C4B = "C4b"


class NMember(str, Enum):
    IDENTITY = "1"
    S1 = "s1"
    S1_SQUARED = "s1^2"
    S1S2 = "s1 s2"
    S1SQ_S2SQ = "s1^2 s2^2"
    DELTA = "D"


class FamilyTag(BaseModel):
    """The closed-positive-3-braid family of a conjugacy class."""

    kind: FamilyKind
    member: NMember | None = None
    k1: int | None = None
    k2: int | None = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_parameters(self) -> "FamilyTag":
        if (self.kind == FamilyKind.N) != (self.member is not None):
            raise ValueError("member is required for N and forbidden otherwise")
        if self.kind in (FamilyKind.C1, FamilyKind.C2) and (self.k1 is None or self.k1 < 3):
            raise ValueError(f"{self.kind.value} requires k1 >= 3")
        if self.kind == FamilyKind.C3 and (
            self.k1 is None or self.k2 is None or min(self.k1, self.k2) < 3
        ):
            raise ValueError("C3 requires k1, k2 >= 3")
        return self

    def render(self) -> str:
        if self.member is not None:
            return f"N({self.member.value})"
        if self.kind == FamilyKind.C3:
            return f"C3(k1={self.k1},k2={self.k2})"
        if self.k1 is not None:
            return f"{self.kind.value}(k1={self.k1})"
        return self.kind.value


# --- Diagrams ---


class Port(IntEnum):
    """Crossing ports in the local frame; NW/SE and NE/SW are opposite."""

    NW = 0
    NE = 1
    SW = 2
    SE = 3

    @property
    def opposite(self) -> "Port":
        return Port(3 - self.value)


class OverStrand(str, Enum):
    SLASH = "/"  # NE-SW strand passes over
    BACKSLASH = "\\"  # NW-SE strand passes over


class Smoothing(str, Enum):
    A = "A"
    B = "B"


class Crossing(BaseModel):
    """Arc ids at NW, NE, SW, SE, which strand is over, and the oriented sign."""

    arcs: tuple[int, int, int, int]
    over: OverStrand
    sign: Literal[1, -1]

    model_config = ConfigDict(frozen=True)


class LinkDiagram(BaseModel):
    """
    Oriented planar diagram as crossing/arc incidence.
    Every arc joins exactly two crossing ports; `arc_tails[a]` is the
    (crossing, port) the arc leaves from. Crossingless components are
    counted in `free_loops`.
    """

    crossings: tuple[Crossing, ...] = ()
    arc_count: int = 0
    arc_tails: tuple[tuple[int, int], ...] = ()
    free_loops: int = Field(default=0, ge=0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_incidence(self) -> "LinkDiagram":
        seen = [0] * self.arc_count
        for t, x in enumerate(self.crossings):
            for a in x.arcs:
                if not 0 <= a < self.arc_count:
                    raise ValueError(f"crossing {t} references unknown arc {a}")
                seen[a] += 1
        if any(n != 2 for n in seen):
            raise ValueError("every arc must meet exactly two crossing ports")
        if len(self.arc_tails) != self.arc_count:
            raise ValueError("one tail per arc is required")
        outgoing = [[False] * 4 for _ in self.crossings]
        for a, (t, port) in enumerate(self.arc_tails):
            if self.crossings[t].arcs[port] != a:
                raise ValueError(f"tail of arc {a} is not at crossing {t} port {port}")
            outgoing[t][port] = True
        for t, flags in enumerate(outgoing):
            # each strand enters through one port and leaves through the opposite one
            if flags[Port.NW] == flags[Port.SE] or flags[Port.NE] == flags[Port.SW]:
                raise ValueError(f"inconsistent orientation at crossing {t}")
        return self

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def positive_count(self) -> int:
        return sum(1 for x in self.crossings if x.sign > 0)

    @property
    def negative_count(self) -> int:
        return sum(1 for x in self.crossings if x.sign < 0)

    @property
    def writhe(self) -> int:
        return self.positive_count - self.negative_count


class State(BaseModel):
    labels: tuple[Smoothing, ...] = ()

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_mask(cls, mask: int, crossings: int) -> "State":
        """Bit t of `mask` set means a B-smoothing at crossing t."""
        return cls(
            labels=tuple(Smoothing.B if mask >> t & 1 else Smoothing.A for t in range(crossings))
        )

    @property
    def mask(self) -> int:
        return sum(1 << t for t, s in enumerate(self.labels) if s == Smoothing.B)

    @property
    def b_count(self) -> int:
        return sum(1 for s in self.labels if s == Smoothing.B)

    @property
    def sigma(self) -> int:
        """#A minus #B."""
        return len(self.labels) - 2 * self.b_count


class EnhancedState(BaseModel):
    state: State
    circle_signs: tuple[Literal[1, -1], ...] = ()

    model_config = ConfigDict(frozen=True)

    @property
    def tau(self) -> int:
        return sum(self.circle_signs)


class RationalCode(BaseModel):
    entries: tuple[int, ...] = ()

    model_config = ConfigDict(frozen=True)

    def render(self) -> str:
        return ",".join(str(a) for a in self.entries)


# --- Homology ---


class IntegerMatrix(BaseModel):
    """Sparse exact integer matrix; `entries` holds the nonzero (row, col) values."""

    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    entries: dict[tuple[int, int], int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_dimensions(self) -> "IntegerMatrix":
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) outside a {self.rows}x{self.cols} matrix")
            if v == 0:
                raise ValueError("zero entries must not be stored")
        return self

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "IntegerMatrix":
        n_cols = len(rows[0]) if rows else 0
        entries = {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row) if v}
        return cls(rows=len(rows), cols=n_cols, entries=entries)

    def to_rows(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense


class AbelianGroup(BaseModel):
    """Z^free_rank plus Z/d for each invariant factor d (d1 | d2 | ...)."""

    free_rank: int = Field(default=0, ge=0)
    torsion: tuple[int, ...] = ()

    model_config = ConfigDict(frozen=True)

    @field_validator("torsion")
    @classmethod
    def _check_chain(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(d < 2 for d in v):
            raise ValueError(f"invariant factors must be >= 2: {v}")
        if any(b % a for a, b in zip(v, v[1:], strict=False)):
            raise ValueError(f"invariant factors must form a divisibility chain: {v}")
        return v

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def _drop_trivial(cells: Any) -> Any:
    if isinstance(cells, dict):
        return {
            k: g
            for k, g in cells.items()
            if not (isinstance(g, AbelianGroup) and g.is_trivial)
        }
    return cells


class HomologyTable(BaseModel):
    """Bigraded groups H^{i,j}; absent cells are trivial."""

    cells: dict[tuple[int, int], AbelianGroup] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)

    @field_validator("cells", mode="before")
    @classmethod
    def _strip(cls, v: Any) -> Any:
        return _drop_trivial(v)

    def group(self, i: int, j: int) -> AbelianGroup:
        return self.cells.get((i, j), AbelianGroup())


class BlockLabel(str, Enum):
    """Name of the residual unknown block of a partial table."""

    W = "W"
    X = "X"
    Y = "Y"
    Z = "Z"
    NONE = "-"


class Region(BaseModel):
    """
    Determined region of a partial table: every (i, j) with i <= i_max or
    j <= j_max, or everything when `complete`. `j_low` is the lowest row.
    """

    complete: bool = False
    i_max: int = 0
    j_low: int = 0
    j_max: int = 0

    model_config = ConfigDict(frozen=True)

    def contains(self, i: int, j: int) -> bool:
        return self.complete or i <= self.i_max or j <= self.j_max


class PartialTable(BaseModel):
    cells: dict[tuple[int, int], AbelianGroup] = Field(default_factory=dict)
    region: Region = Field(default_factory=lambda: Region(complete=True))
    block: BlockLabel = BlockLabel.NONE

    model_config = ConfigDict(frozen=True)

    @field_validator("cells", mode="before")
    @classmethod
    def _strip(cls, v: Any) -> Any:
        return _drop_trivial(v)

    @model_validator(mode="after")
    def _check_region(self) -> "PartialTable":
        for i, j in self.cells:
            if not self.region.contains(i, j):
                raise ValueError(f"cell ({i},{j}) lies outside the determined region")
        return self

    def group(self, i: int, j: int) -> AbelianGroup:
        return self.cells.get((i, j), AbelianGroup())


class ShiftSpec(BaseModel):
    """X[i_shift]{j_shift}: a cell at (i, j) moves to (i + i_shift, j + j_shift)."""

    i_shift: int = 0
    j_shift: int = 0

    model_config = ConfigDict(frozen=True)


class Bookkeeping(BaseModel):
    """Change in positive crossings, negative crossings and writhe."""

    delta_p: int
    delta_n: int
    delta_w: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_writhe(self) -> "Bookkeeping":
        if self.delta_w != self.delta_p - self.delta_n:
            raise ValueError("delta_w must equal delta_p - delta_n")
        return self


# --- Verification & Reports ---


class VerdictStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class CellMismatch(BaseModel):
    i: int
    j: int
    expected: str
    found: str


class Verdict(BaseModel):
    name: str
    status: VerdictStatus
    witness: CellMismatch | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == VerdictStatus.PASS


class ObstructionVerdict(BaseModel):
    """Outcome of matching a full table against the closed-positive-3-braid patterns."""

    compatible: bool
    pattern: str | None = None
    j_low: int | None = None
    witness: CellMismatch | None = None
    remark: str = ""

    def render(self) -> str:
        if self.compatible:
            return f"compatible({self.pattern}, j_low={self.j_low})"
        assert self.witness is not None
        w = self.witness
        return f"incompatible(witness=({w.i},{w.j}) expected {w.expected} found {w.found})"


class RunReport(BaseModel):
    """One structured record per CLI invocation."""

    schema_version: str = SCHEMA_VERSION
    command: str
    input: str = ""
    outputs: dict[str, Any] = Field(default_factory=dict)
    timings_ms: dict[str, float] = Field(default_factory=dict)
    verdicts: list[Verdict] = Field(default_factory=list)

    @field_validator("timings_ms")
    @classmethod
    def _non_negative(cls, v: dict[str, float]) -> dict[str, float]:
        if any(t < 0 for t in v.values()):
            raise ValueError("timings must be non-negative")
        return v

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

import logging
import re
from itertools import groupby

import numpy as np

from tribraid.core.errors import StrandCountError, WordParseError
from tribraid.core.types import BraidWord

logger = logging.getLogger(__name__)

_GENERATOR_TOKEN = re.compile(r"s(\d+)(?:\^(-?\d+))?")
_COMPACT_TOKEN = re.compile(r"[abABD]+")

# Compact alphabet for 3 strands; D is expanded eagerly to s1 s2 s1
COMPACT_LETTERS: dict[str, tuple[int, ...]] = {
    "a": (1,),
    "b": (2,),
    "A": (-1,),
    "B": (-2,),
    "D": (1, 2, 1),
}

DELTA_LETTERS: tuple[int, ...] = (1, 2, 1)


def parse_word(text: str, strands: int) -> BraidWord:
    """
    Parses whitespace-separated tokens `s<i>` / `s<i>^<e>` (e != 0), or runs of
    the compact letters a, b, A, B, D when strands == 3.
    """
    if strands < 1:
        raise StrandCountError(f"strand count must be positive, got {strands}")

    letters: list[int] = []
    for token in text.split():
        match = _GENERATOR_TOKEN.fullmatch(token)
        if match:
            index = int(match.group(1))
            exponent = int(match.group(2)) if match.group(2) is not None else 1
            if exponent == 0:
                raise WordParseError(f"zero exponent in token '{token}'")
            if not 1 <= index <= strands - 1:
                raise StrandCountError(
                    f"generator s{index} out of range for {strands} strands"
                )
            letters.extend([index if exponent > 0 else -index] * abs(exponent))
            continue

        if _COMPACT_TOKEN.fullmatch(token):
            if strands != 3:
                raise WordParseError(
                    f"compact letters are only valid on 3 strands (token '{token}')"
                )
            for ch in token:
                letters.extend(COMPACT_LETTERS[ch])
            continue

        raise WordParseError(f"malformed token '{token}'")

    return BraidWord(strands=strands, letters=tuple(letters))


def render_word(w: BraidWord) -> str:
    """Renders with maximal run compression, e.g. `s1^2 s2^-1 s1`."""
    tokens = []
    for x, run in groupby(w.letters):
        e = len(list(run)) * (1 if x > 0 else -1)
        tokens.append(f"s{abs(x)}" if e == 1 else f"s{abs(x)}^{e}")
    return " ".join(tokens)


def word_length(w: BraidWord) -> int:
    return len(w.letters)


def syllable_length(w: BraidWord) -> int:
    """Number of maximal runs of a single signed generator."""
    return sum(1 for _ in groupby(w.letters))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def is_positive(w: BraidWord) -> bool:
    return all(x > 0 for x in w.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord.model_construct(
        strands=w.strands, letters=tuple(-x for x in reversed(w.letters))
    )


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise ValueError("concat needs at least one word")
    strands = words[0].strands
    if any(u.strands != strands for u in words):
        raise StrandCountError("cannot concatenate words on different strand counts")
    letters: tuple[int, ...] = ()
    for u in words:
        letters += u.letters
    return BraidWord.model_construct(strands=strands, letters=letters)


def mirror_word(w: BraidWord) -> BraidWord:
    """Every crossing switched: s_i <-> s_i^-1."""
    return BraidWord.model_construct(strands=w.strands, letters=tuple(-x for x in w.letters))


def delta_word(p: int) -> BraidWord:
    """Delta^p on 3 strands, with Delta^-1 = s1^-1 s2^-1 s1^-1."""
    block = DELTA_LETTERS if p >= 0 else tuple(-x for x in DELTA_LETTERS)
    return BraidWord.model_construct(strands=3, letters=block * abs(p))


def random_word(
    strands: int, length: int, rng: np.random.Generator, positive: bool = False
) -> BraidWord:
    """Uniform random letters; inverse letters are included unless `positive`."""
    if strands < 2:
        return BraidWord(strands=strands)
    gens = rng.integers(1, strands, size=length)
    if not positive:
        gens = gens * rng.choice(np.array([-1, 1]), size=length)
    return BraidWord.model_construct(strands=strands, letters=tuple(gens.tolist()))

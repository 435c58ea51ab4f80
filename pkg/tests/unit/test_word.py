import numpy as np
import pytest

from tribraid.braids.word import (
    concat,
    delta_word,
    exponent_sum,
    inverse,
    is_positive,
    mirror_word,
    parse_word,
    random_word,
    render_word,
    syllable_length,
    word_length,
)
from tribraid.core.errors import StrandCountError, WordParseError
from tribraid.core.types import BraidWord


def test_parse_generator_tokens():
    w = parse_word("s1^2 s2^4 s1", 3)
    assert w.letters == (1, 1, 2, 2, 2, 2, 1)
    assert word_length(w) == 7
    assert syllable_length(w) == 3


def test_parse_compact_letters_expand_delta():
    assert parse_word("D a", 3).letters == (1, 2, 1, 1)
    assert parse_word("abAB", 3).letters == (1, 2, -1, -2)


def test_parse_empty_word():
    w = parse_word("", 3)
    assert w.strands == 3
    assert w.letters == ()
    assert word_length(w) == 0
    assert syllable_length(w) == 0
    assert is_positive(w)


def test_parse_negative_exponent():
    w = parse_word("s1^-2 s2", 3)
    assert w.letters == (-1, -1, 2)
    assert exponent_sum(w) == -1
    assert not is_positive(w)


def test_parse_rejects_zero_exponent():
    with pytest.raises(WordParseError):
        parse_word("s1^0", 3)


def test_parse_rejects_out_of_range_generator():
    with pytest.raises(StrandCountError):
        parse_word("s3", 3)


def test_parse_rejects_compact_letters_off_three_strands():
    with pytest.raises(WordParseError):
        parse_word("ab", 4)


def test_parse_rejects_garbage():
    with pytest.raises(WordParseError):
        parse_word("x1", 3)


def test_model_rejects_bad_letters():
    """The model itself refuses 0 and out-of-range indices."""
    with pytest.raises(ValueError):
        BraidWord(strands=3, letters=(1, 0))
    with pytest.raises(ValueError):
        BraidWord(strands=3, letters=(3,))


def test_render_compresses_runs():
    w = parse_word("s1 s1 s2^-1 s1", 3)
    assert render_word(w) == "s1^2 s2^-1 s1"


def test_inverse_and_mirror():
    w = parse_word("s1 s2^-1 s2", 3)
    assert inverse(w).letters == (-2, 2, -1)
    assert mirror_word(w).letters == (-1, 2, -2)


def test_concat_requires_same_strands():
    with pytest.raises(StrandCountError):
        concat(BraidWord(strands=3), BraidWord(strands=4))
    assert concat(parse_word("a", 3), parse_word("b", 3)).letters == (1, 2)


def test_delta_word():
    assert delta_word(2).letters == (1, 2, 1, 1, 2, 1)
    assert delta_word(-1).letters == (-1, -2, -1)
    assert delta_word(0).letters == ()


def test_random_word_is_seeded():
    a = random_word(3, 50, np.random.default_rng(7))
    b = random_word(3, 50, np.random.default_rng(7))
    assert a == b
    assert len(a) == 50
    assert is_positive(random_word(3, 50, np.random.default_rng(1), positive=True))

from .garside import (
    NormalFormAutomaton,
    classify_family,
    conjugate_to_lambda,
    inf_sup,
    is_positive_representative,
    normal_form,
    normal_form_word,
    parse_normal_form,
    positive_length,
    positive_word,
    push_generator,
    render_factorization,
    render_normal_form,
    simple_factors,
    summit_infimum,
)
from .word import (
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

__all__ = [
    "NormalFormAutomaton",
    "classify_family",
    "conjugate_to_lambda",
    "inf_sup",
    "is_positive_representative",
    "normal_form",
    "normal_form_word",
    "parse_normal_form",
    "positive_length",
    "positive_word",
    "push_generator",
    "render_factorization",
    "render_normal_form",
    "simple_factors",
    "summit_infimum",
    "concat",
    "delta_word",
    "exponent_sum",
    "inverse",
    "is_positive",
    "mirror_word",
    "parse_word",
    "random_word",
    "render_word",
    "syllable_length",
    "word_length",
]

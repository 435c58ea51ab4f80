from .complex import basis, compose, degrees, differential_matrix, enhanced_state
from .groups import (
    complement,
    contains_summand,
    direct_sum,
    group_from_factors,
    mirror_table,
    parse_group,
    render_group,
    table_direct_sum,
    total_rank,
)
from .oracle import KhovanovOracle, compute_slice, homology
from .polynomials import graded_euler_characteristic, kauffman_bracket_jones, q
from .snf import smith_normal_form

__all__ = [
    "basis",
    "compose",
    "degrees",
    "differential_matrix",
    "enhanced_state",
    "complement",
    "contains_summand",
    "direct_sum",
    "group_from_factors",
    "mirror_table",
    "parse_group",
    "render_group",
    "table_direct_sum",
    "total_rank",
    "KhovanovOracle",
    "compute_slice",
    "homology",
    "graded_euler_characteristic",
    "kauffman_bracket_jones",
    "q",
    "smith_normal_form",
]

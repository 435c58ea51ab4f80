from .builder import from_braid_closure, from_rational_code
from .diagram import (
    circle_count,
    component_count,
    crossing_census,
    is_a_adequate,
    j_bounds,
    linking_number,
    mirror_diagram,
    parse_pd_text,
    reorder_crossings,
    reverse_components,
    to_pd_text,
    writhe,
)
from .rational import (
    alternating_code,
    is_alternating,
    measure_bookkeeping,
    normalize_zeros,
    parse_code,
    t_transform,
    u_transform,
)

__all__ = [
    "from_braid_closure",
    "from_rational_code",
    "circle_count",
    "component_count",
    "crossing_census",
    "is_a_adequate",
    "j_bounds",
    "linking_number",
    "mirror_diagram",
    "parse_pd_text",
    "reorder_crossings",
    "reverse_components",
    "to_pd_text",
    "writhe",
    "alternating_code",
    "is_alternating",
    "measure_bookkeeping",
    "normalize_zeros",
    "parse_code",
    "t_transform",
    "u_transform",
]

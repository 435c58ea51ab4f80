from .golden import KnownTable, TableRole, find_by_word, known_table, load_known_tables
from .obstruction import matches_positive3
from .render import parse_table_records, render_table, table_record
from .shapes import (
    ShapeSynthesizer,
    as_partial,
    blue_block_count,
    corner_shape,
    direct_sum,
    end_table_checks,
    extended_shape,
    jaeger_step,
    lshape_theorem1,
    r_of,
    shift,
    subtract_block,
)

__all__ = [
    "KnownTable",
    "TableRole",
    "find_by_word",
    "known_table",
    "load_known_tables",
    "matches_positive3",
    "parse_table_records",
    "render_table",
    "table_record",
    "ShapeSynthesizer",
    "as_partial",
    "blue_block_count",
    "corner_shape",
    "direct_sum",
    "end_table_checks",
    "extended_shape",
    "jaeger_step",
    "lshape_theorem1",
    "r_of",
    "shift",
    "subtract_block",
]

"""Embedded OLAP cube engine.

Slice/dice/roll-up/drill-down over an in-memory fact table, exhaustive
report-view enumeration, pivot reports, SVG line charts and canonical SQL
generation.
"""

from ._core import (
    ArithmeticOverflowError,
    DetailLink,
    DetailStore,
    DiceFilter,
    DomainError,
    ExprParseError,
    FactTable,
    PivotReport,
    Schema,
    Series,
    SqlQuery,
    SqlWhereClause,
    ViewCensus,
    ViewSpec,
    batch_generate,
    binomial,
    cell_value,
    dice,
    drilldown,
    enumerate_views,
    fact_table_to_csv_text,
    factorial,
    format_view_expr,
    generate_sql,
    load_fact_table,
    materialize_view,
    parse_detail_link,
    parse_filter_expr,
    parse_key_expr,
    parse_view_expr,
    read_detail_store,
    read_fact_table,
    render_chart,
    render_csv,
    render_table,
    rollup,
    slice,
    total_view_count,
    view_census,
    view_count,
    views_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticOverflowError",
    "DetailLink",
    "DetailStore",
    "DiceFilter",
    "DomainError",
    "ExprParseError",
    "FactTable",
    "PivotReport",
    "Schema",
    "Series",
    "SqlQuery",
    "SqlWhereClause",
    "ViewCensus",
    "ViewSpec",
    "batch_generate",
    "binomial",
    "cell_value",
    "dice",
    "drilldown",
    "enumerate_views",
    "fact_table_to_csv_text",
    "factorial",
    "format_view_expr",
    "generate_sql",
    "load_fact_table",
    "materialize_view",
    "parse_detail_link",
    "parse_filter_expr",
    "parse_key_expr",
    "parse_view_expr",
    "read_detail_store",
    "read_fact_table",
    "render_chart",
    "render_csv",
    "render_table",
    "rollup",
    "slice",
    "total_view_count",
    "view_census",
    "view_count",
    "views_equivalent",
]

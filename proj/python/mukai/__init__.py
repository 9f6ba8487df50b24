"""Exact intersection-theory checks for Mukai fourfolds and cubic threefolds."""

from ._core import (
    blowup_table,
    cubic_report,
    euler_characteristic_section,
    link_report,
    quadric_rank,
    report_all,
    run_cli,
    table1,
    tangent_chern,
    adjunct_linear_sections,
    intersection_number,
)

__all__ = [
    "adjunct_linear_sections",
    "blowup_table",
    "cubic_report",
    "euler_characteristic_section",
    "intersection_number",
    "link_report",
    "quadric_rank",
    "report_all",
    "run_cli",
    "table1",
    "tangent_chern",
]

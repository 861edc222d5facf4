"""Exact Complex, signed Real and Doublet Hurwitz numbers."""

from ._core import (
    BudgetExceeded,
    ParseError,
    ResourceError,
    ValidationError,
    character_table,
    complex_number,
    completed_cycle,
    completed_number,
    doublet_contribution,
    doublet_number,
    local_sign,
    real_group_number,
    real_number,
    run_cli,
    sfs,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "ParseError",
    "ResourceError",
    "ValidationError",
    "character_table",
    "complex_number",
    "completed_cycle",
    "completed_number",
    "doublet_contribution",
    "doublet_number",
    "local_sign",
    "real_group_number",
    "real_number",
    "run_cli",
    "sfs",
    "verify",
]

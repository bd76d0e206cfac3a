"""Weyl group classes, unipotent classes and brute-force checks over small finite fields."""

from ._core import (
    BudgetExceeded,
    UnsupportedCase,
    acceptance,
    cell_counts,
    excellent,
    exceptional_table,
    group_order,
    minimal_class,
    phi,
    phi_table,
    u_w_jordan,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "UnsupportedCase",
    "acceptance",
    "cell_counts",
    "excellent",
    "exceptional_table",
    "group_order",
    "minimal_class",
    "phi",
    "phi_table",
    "u_w_jordan",
    "verify",
]

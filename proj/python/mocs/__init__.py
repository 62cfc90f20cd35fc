"""Superiority, hierarchical filtering and compromise for multiobjective complex systems.

Indices of subsystems and linking constraints are zero-based. Point sets are
lists of coordinate lists in lexicographic order.
"""

from ._mocs import (
    CapExceeded,
    Error,
    InternalError,
    InvalidArgument,
    ParseError,
    Problem,
    ValidationError,
    efficient_set,
    grid,
    hierarchical,
    ideal_bounds,
    independence,
    is_system_valid,
    l1_compromise,
    median_bounds,
    scalarize,
    standard_form,
    superior_set,
)

__all__ = [
    "CapExceeded",
    "Error",
    "InternalError",
    "InvalidArgument",
    "ParseError",
    "Problem",
    "ValidationError",
    "efficient_set",
    "grid",
    "hierarchical",
    "ideal_bounds",
    "independence",
    "is_system_valid",
    "l1_compromise",
    "median_bounds",
    "scalarize",
    "standard_form",
    "superior_set",
]

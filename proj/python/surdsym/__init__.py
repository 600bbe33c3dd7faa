"""Symmetry classification of indefinite binary quadratic forms."""

from ._core import (
    ClassReport,
    DomainError,
    Form,
    InconclusiveError,
    IntegerOverflow,
    SymmetryType,
    canonical_representative,
    cf_expansion,
    cf_period_to_modular_period,
    classify,
    classify_period,
    counts,
    discriminant,
    enumerate_classes,
    is_rotation_of,
    modular_expansion,
    modular_period_to_cf_period,
    orbit,
    period,
    reduce,
    reduced_cycle,
    render_stats,
    render_table,
    table,
    verify_counts,
    verify_symmetry,
)

__all__ = [name for name in dir() if not name.startswith("_")]

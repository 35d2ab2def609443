"""Exact Newton polyhedra, mixed volumes and asymptotics of perturbed systems.

Points are sequences of Python ints. Covectors come back as tuples of
fractions.Fraction, with math.inf for dropped coordinates.
"""

from ._core import (
    InputError,
    ScopeError,
    build_H,
    difference_volume,
    first_jump,
    mixed_volume,
    monotonicity_report,
    mv_semi_interlaced,
    newton_number,
    nonneg_formula,
    nonneg_formula_h,
    normalized_volume,
    run_cli,
    solve_critical,
    solve_system,
)

__all__ = [
    "InputError",
    "ScopeError",
    "build_H",
    "difference_volume",
    "first_jump",
    "mixed_volume",
    "monotonicity_report",
    "mv_semi_interlaced",
    "newton_number",
    "nonneg_formula",
    "nonneg_formula_h",
    "normalized_volume",
    "run_cli",
    "solve_critical",
    "solve_system",
]

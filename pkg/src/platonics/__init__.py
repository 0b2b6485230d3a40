"""Exact arithmetic for the platonic numbers.

Five figurate families (tetrahedral, octahedral, cube, icosahedral,
dodecahedral), their forward-difference identities, constructive four-term
integer combinations, modular periods with an empirical cross-check, and a
bounded search for decompositions into at most five platonic numbers.
"""

from .identities import (
    IdentityCheck,
    THIRD_DIFFERENCE_CONSTANTS,
    combined_residual_tetrahedral,
    difference_from_values,
    expected_difference,
    identity_residual,
)
from .periodicity import (
    PeriodConsistencyError,
    PeriodReport,
    ResidueSequence,
    check_period_claim,
    closed_form_period,
    empirical_period,
    residue_sequence,
)
from .pollock import (
    DEFAULT_SCAN_CEILING,
    PoolEntry,
    ScanReport,
    Witness,
    iter_witnesses,
    min_term_decomposition,
    platonic_pool,
    scan_conjecture,
    verify_witness,
    witness_from_values,
)
from .representations import (
    COMBINATION_COEFFICIENTS,
    COMBINATION_MODULUS,
    NotDivisibleError,
    Representation,
    evaluate_representation,
    represent_multiple,
    represent_tetrahedral,
)
from .sequences import (
    DifferenceTable,
    PlatonicKind,
    RECURRENCE_COEFFICIENTS,
    Sequence,
    difference_table,
    exact_div,
    forward_difference,
    platonic_value,
    platonic_values_by_recurrence,
)

__version__ = "0.1.0"

__all__ = [
    "COMBINATION_COEFFICIENTS",
    "COMBINATION_MODULUS",
    "DEFAULT_SCAN_CEILING",
    "DifferenceTable",
    "IdentityCheck",
    "NotDivisibleError",
    "PeriodConsistencyError",
    "PeriodReport",
    "PlatonicKind",
    "PoolEntry",
    "RECURRENCE_COEFFICIENTS",
    "Representation",
    "ResidueSequence",
    "ScanReport",
    "Sequence",
    "THIRD_DIFFERENCE_CONSTANTS",
    "Witness",
    "check_period_claim",
    "closed_form_period",
    "combined_residual_tetrahedral",
    "difference_from_values",
    "difference_table",
    "empirical_period",
    "evaluate_representation",
    "exact_div",
    "expected_difference",
    "forward_difference",
    "identity_residual",
    "iter_witnesses",
    "min_term_decomposition",
    "platonic_pool",
    "platonic_value",
    "platonic_values_by_recurrence",
    "represent_multiple",
    "represent_tetrahedral",
    "residue_sequence",
    "scan_conjecture",
    "verify_witness",
    "witness_from_values",
]

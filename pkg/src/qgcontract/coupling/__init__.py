"""
Coupling of rank-1/2 tensor operators with h-deformed coefficients.
"""

from .table import (
    CouplingTable,
    InvalidLabels,
    SolveDimensionError,
    M_OF_INDEX,
    PAIRS,
    check_labels,
    coupled_labels,
    classical_table,
    default_tilde_system,
    singlet_constraints,
    triplet_constraints,
    constraint_matrix,
    singlet_kernel,
    derive_table,
    weight_violations,
)
from .coupled import (
    SpinorPair,
    coupled_product,
    coupled_commutator,
    verify_coupled_n2m1,
    verify_coupled_n2m2,
    double_tilde_system,
)

__all__ = [
    "CouplingTable",
    "InvalidLabels",
    "SolveDimensionError",
    "M_OF_INDEX",
    "PAIRS",
    "check_labels",
    "coupled_labels",
    "classical_table",
    "default_tilde_system",
    "singlet_constraints",
    "triplet_constraints",
    "constraint_matrix",
    "singlet_kernel",
    "derive_table",
    "weight_violations",
    "SpinorPair",
    "coupled_product",
    "coupled_commutator",
    "verify_coupled_n2m1",
    "verify_coupled_n2m2",
    "double_tilde_system",
]

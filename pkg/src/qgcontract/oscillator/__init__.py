"""
Truncated two-mode Fock representation and the h-deformed spinor operators.
"""

from .fock import (
    FockRep,
    LADDER_OPS,
    SPINOR_OPS,
    fock_basis,
    build_weyl,
    build_h_spinors,
    neumann_inverse,
    restrict,
    degree_shift,
    check_truncation_stability,
    check_neumann_inverse,
    check_degree_bookkeeping,
)
from .relations import (
    FAMILIES,
    hardcoded_relations,
    plain_set,
    tilde_set,
    column_difference,
    verify_relations,
    verify_expanded,
    verify_rform_match,
    verify_soundness,
)

__all__ = [
    "FockRep",
    "LADDER_OPS",
    "SPINOR_OPS",
    "fock_basis",
    "build_weyl",
    "build_h_spinors",
    "neumann_inverse",
    "restrict",
    "degree_shift",
    "check_truncation_stability",
    "check_neumann_inverse",
    "check_degree_bookkeeping",
    "FAMILIES",
    "hardcoded_relations",
    "plain_set",
    "tilde_set",
    "column_difference",
    "verify_relations",
    "verify_expanded",
    "verify_rform_match",
    "verify_soundness",
]

"""
Standard and Jordanian R-matrices, metrics, the contraction q -> 1 and
structural verifiers.
"""

from .rmatrix import (
    r_standard,
    r_jordanian,
    g_matrix,
    c_metric_q,
    c_metric_closed_form,
    perturb,
)
from .contraction import (
    ContractionReport,
    ExpressionMismatch,
    contract_r,
    contract_r_tilde,
    c_metric_contract,
    conjugate_tracking_poles,
    limit_equivalence,
    max_h_degree,
    r_tilde,
)
from .structure import (
    STRUCTURE_CHECKS,
    verify_structure,
    check_ybe,
    check_triangular,
    check_hecke,
    check_unital,
)

__all__ = [
    "r_standard",
    "r_jordanian",
    "g_matrix",
    "c_metric_q",
    "c_metric_closed_form",
    "perturb",
    "ContractionReport",
    "ExpressionMismatch",
    "contract_r",
    "contract_r_tilde",
    "c_metric_contract",
    "conjugate_tracking_poles",
    "limit_equivalence",
    "max_h_degree",
    "r_tilde",
    "STRUCTURE_CHECKS",
    "verify_structure",
    "check_ybe",
    "check_triangular",
    "check_hecke",
    "check_unital",
]

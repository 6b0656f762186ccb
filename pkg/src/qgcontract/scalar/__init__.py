"""
Exact scalars of the field Q(s, h) with q = s**2, optionally extended by sqrt(2).
"""

from .scalar import (
    ScalarQH,
    PolyH,
    DivisionByZero,
    PoleError,
    NonPolynomialError,
    ring_arithmetic,
    limit_q_to_1,
    substitute_h_zero,
    s_power,
    ZERO,
    ONE,
    S,
    H,
    Q,
    ETA,
    SQRT2,
)

__all__ = [
    "ScalarQH",
    "PolyH",
    "DivisionByZero",
    "PoleError",
    "NonPolynomialError",
    "ring_arithmetic",
    "limit_q_to_1",
    "substitute_h_zero",
    "s_power",
    "ZERO",
    "ONE",
    "S",
    "H",
    "Q",
    "ETA",
    "SQRT2",
]

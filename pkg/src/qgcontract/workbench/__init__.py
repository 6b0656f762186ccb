"""
Drivers behind the emit and verify commands.
"""

from .main import verifier, emitter, render, build_matrix, header, PARITY_MESSAGE
from .suites import (
    SUITES,
    SUITE_ORDER,
    SuiteParameters,
    expand_suite,
    run_suite,
    toy_nonconfluent_system,
)

__all__ = [
    "verifier",
    "emitter",
    "render",
    "build_matrix",
    "header",
    "PARITY_MESSAGE",
    "SUITES",
    "SUITE_ORDER",
    "SuiteParameters",
    "expand_suite",
    "run_suite",
    "toy_nonconfluent_system",
]

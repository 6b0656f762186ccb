"""
This module contains the classes and functions for all configuration-related tasks,
the report records shared by the verifiers, as well as utilities concerned with
parallelization.
"""

from .config import (
    ConfigManager,
    BaseConfig,
    GeneralConfig,
    ModelConfig,
    EmitConfig,
    VerifyConfig,
    RewriteConfig,
    MATRICES,
    FORMATS,
    SUITES,
    MAX_DEGREE_ENV,
)
from .parallel import setup_managers
from .report import CheckResult, CheckReport, VerificationReport

__all__ = [
    "ConfigManager",
    "BaseConfig",
    "GeneralConfig",
    "ModelConfig",
    "EmitConfig",
    "VerifyConfig",
    "RewriteConfig",
    "MATRICES",
    "FORMATS",
    "SUITES",
    "MAX_DEGREE_ENV",
    "setup_managers",
    "CheckResult",
    "CheckReport",
    "VerificationReport",
]

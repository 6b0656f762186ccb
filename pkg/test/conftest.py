"""
Setup for pytest.
"""

import numpy as np
import pytest

from qgcontract.coupling import default_tilde_system  # type: ignore
from qgcontract.oscillator import build_h_spinors, build_weyl  # type: ignore

np.set_printoptions(precision=16)


def pytest_addoption(parser):
    parser.addoption(
        "--optional",
        action="store_true",
        default=False,
        help="Run optional tests",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--optional"):
        # If --optional is provided, do nothing, so all tests run
        return
    skip_optional = pytest.mark.skip(reason="Need '--optional' option to run")
    for item in items:
        if "optional" in item.keywords:
            item.add_marker(skip_optional)


@pytest.fixture(scope="session")
def fock6():
    """
    Two-mode representation at truncation D = 6 with formal h.
    """
    return build_h_spinors(build_weyl(2, 6))


@pytest.fixture(scope="session")
def tilde_system():
    """
    Tilde-form rewrite system of the n = 2, m = 1 algebra.
    """
    return default_tilde_system()

"""
Entrypoint for command line interface.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
import warnings


from ..workbench import emitter, verifier
from .cli_parser import cli_parser as cl
from ..prog import ConfigManager
from ..scalar import PoleError

CONFIG_FILE_NAME = "qgcontract.toml"


def console_entry_point(argv: Sequence[str] | None = None) -> int:
    """
    Entrypoint for command line interface.

    Exit codes: 0 if everything passed, 1 on a failed verification and 2 on
    usage errors, including configurations without a contraction limit.
    """
    # Step 1: Parse CLI arguments
    args = cl(argv)
    command = args["general"]["command"]

    # Step 2: Find the configuration file (CLI provided or default search)
    try:
        config_file = find_config_file(args["general"]["config"])
    except FileNotFoundError as e:
        print(f"{e}")
        raise SystemExit(2) from e

    # Step 3: Load the configuration, then CLI arguments and environment overrides
    try:
        config = ConfigManager(config_file) if config_file else ConfigManager()
        config.load_from_dict(args)
        config.load_from_env()
    except (KeyError, TypeError, ValueError) as e:
        print(f"Invalid configuration: {e}")
        raise SystemExit(2) from e
    if config.general.verbosity > 1:
        print(f"Reading configuration from file: '{config_file}'")

    if command is None:
        # only reachable with --print-config
        print(config)
        raise SystemExit(0)

    try:
        if command == "emit":
            _, exitcode = emitter(config)
        else:
            _, exitcode = verifier(config)
    except (ValueError, PoleError) as e:
        print(f"{e}")
        raise SystemExit(2) from e

    if exitcode == 1 and config.general.verbosity > -1:
        warnings.warn("Verification completed with failing identities.")
    raise SystemExit(exitcode)


def find_config_file(cli_config_path: str | Path | None = None) -> Path | None:
    """
    Finds the configuration file. If a path is provided via CLI, use it.
    Otherwise, search in predefined locations.
    """
    # CLI provided config file
    if cli_config_path:
        config_path = Path(cli_config_path).resolve()
        if config_path.is_file():
            return config_path
        raise FileNotFoundError(f"Configuration file not found at {cli_config_path}")

    # Search paths
    search_paths = [
        Path.cwd() / CONFIG_FILE_NAME,  # Current directory
        Path.home() / CONFIG_FILE_NAME,  # $USER/qgcontract.toml
    ]

    # Find the config file
    for path in search_paths:
        if path.is_file():
            return path

    # If no config file is found, raise a warning
    warnings.warn("No configuration file found. Using default configuration.")
    return None

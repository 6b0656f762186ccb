"""
This module contains the Command-Line Interface.
"""

from __future__ import annotations

import argparse
from collections.abc import Sequence
from ..__version__ import __version__
from ..prog.config import FORMATS, MATRICES, SUITES


def _add_model_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--n",
        type=int,
        required=False,
        help="Dimension of the first factor.",
    )
    parser.add_argument(
        "--m",
        type=int,
        required=False,
        choices=[1, 2],
        help="Dimension of the second factor.",
    )
    parser.add_argument(
        "--trunc",
        type=int,
        required=False,
        help="Truncation degree D of the Fock representation.",
    )
    parser.add_argument(
        "--out",
        type=str,
        required=False,
        help="Output file (default: stdout).",
    )


def cli_parser(argv: Sequence[str] | None = None) -> dict:
    """
    Parse command line arguments.

    Returns:
        dict: Nested dictionary with one entry per configuration section, plus
        the selected ``command`` under "general". None means "not given".
    """
    parser = argparse.ArgumentParser(
        prog="qgcontract",
        description="Exact verification of standard and Jordanian quantum groups.",
    )

    ### General arguments ###
    parser.add_argument(
        "-c",
        "--config",
        type=str,
        help="Input file.",
        required=False,
    )
    parser.add_argument(
        "-v", "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "--print-config",
        action="store_true",
        default=False,
        required=False,
        help="Print the configuration and exit.",
    )
    parser.add_argument(
        "--verbosity",
        type=int,
        required=False,
        choices=[-1, 0, 1, 2, 3],
        help="Verbosity level "
        + "(-1 (silent), "
        + "0 (very basic), "
        + "1 (default), "
        + "2 (verbose), or "
        + "3 (super verbose)).",
    )
    parser.add_argument(
        "-P",
        "--parallel",
        type=int,
        required=False,
        help="Number of parallel processes to run.",
    )
    parser.add_argument(
        "--max-degree",
        type=int,
        required=False,
        help="Degree bound of the rewrite systems.",
    )
    parser.add_argument(
        "--confluence-degree",
        type=int,
        required=False,
        help="Word length of the confluence checks.",
    )

    subparsers = parser.add_subparsers(dest="command")

    ### Emit arguments ###
    emit = subparsers.add_parser("emit", help="Render a matrix or coupling table.")
    emit.add_argument(
        "--matrix",
        "--table",
        dest="matrix",
        type=str,
        required=False,
        choices=list(MATRICES),
        help="Object to render.",
    )
    emit.add_argument(
        "--format",
        type=str,
        required=False,
        choices=list(FORMATS),
        help="Output format.",
    )
    _add_model_arguments(emit)

    ### Verify arguments ###
    verify = subparsers.add_parser("verify", help="Run a verification suite.")
    verify.add_argument(
        "--suite",
        type=str,
        required=False,
        choices=list(SUITES),
        help="Verification suite.",
    )
    verify.add_argument(
        "--perturb",
        type=str,
        required=False,
        metavar="ROW,COL",
        help="Add h to one 1-based entry of the primary R-matrix.",
    )
    verify.add_argument(
        "--no-negative-controls",
        action="store_false",
        dest="negative_controls",
        default=None,
        required=False,
        help="Skip the mutated-input runs.",
    )
    _add_model_arguments(verify)

    ### Parse arguments ###
    args = parser.parse_args(argv)
    args_dict = vars(args)
    command = args_dict.get("command")
    if command is None and not args_dict["print_config"]:
        parser.error("a command is required: choose 'emit' or 'verify'")

    ### TRANSLATE ARGUMENTS TO DICTIONARY ###
    # General arguments
    rev_args_dict: dict[str, dict] = {}
    rev_args_dict["general"] = {
        "config": args_dict["config"],
        "command": command,
        "verbosity": args_dict["verbosity"],
        "parallel": args_dict["parallel"],
        "print_config": args_dict["print_config"],
    }
    # Model arguments
    rev_args_dict["model"] = {
        "n": args_dict.get("n"),
        "m": args_dict.get("m"),
        "trunc": args_dict.get("trunc"),
    }
    # Rewriting arguments
    rev_args_dict["rewrite"] = {
        "max_degree": args_dict["max_degree"],
        "confluence_degree": args_dict["confluence_degree"],
    }
    # Emit arguments
    rev_args_dict["emit"] = {
        "matrix": args_dict.get("matrix"),
        "format": args_dict.get("format"),
        "out": args_dict.get("out") if command == "emit" else None,
    }
    # Verify arguments
    rev_args_dict["verify"] = {
        "suite": args_dict.get("suite"),
        "out": args_dict.get("out") if command == "verify" else None,
        "perturb": args_dict.get("perturb"),
        "negative_controls": args_dict.get("negative_controls"),
    }

    return rev_args_dict

"""
Main drivers of qgcontract: rendering of named objects and verification runs.
"""

from __future__ import annotations

# Python standard library
from concurrent.futures import Future, as_completed
from datetime import timedelta
from fractions import Fraction
import json
from pathlib import Path
from time import perf_counter

# External packages
from tqdm import tqdm

# Internal modules
from ..coupling import (
    M_OF_INDEX,
    PAIRS,
    CouplingTable,
    coupled_labels,
    derive_table,
    weight_violations,
)
from ..prog import ConfigManager, VerificationReport, setup_managers
from ..qgroup import (
    c_metric_contract,
    c_metric_q,
    r_jordanian,
    r_standard,
    r_tilde,
)
from ..scalar import PoleError
from ..tensor import RingMatrix
from ..__version__ import __version__
from .suites import SuiteParameters, expand_suite, run_suite

PARITY_MESSAGE = "no contraction limit: n must be even"


def verifier(config: ConfigManager) -> tuple[VerificationReport | None, int]:
    """
    Run the configured verification suite.

    Returns:
        tuple[VerificationReport | None, int]: The merged report (None when
        only the configuration was printed) and the exit code, 0 if every
        check passed and 1 otherwise.

    Raises:
        ValueError: For an unusable configuration.
    """
    start = perf_counter()
    verbosity = config.general.verbosity

    if verbosity > 0:
        print(header(str(__version__)))

    if config.general.print_config:
        print(config)
        return None, 0

    config.check_config(verbosity=verbosity, command="verify")
    if verbosity > 1:
        print(config)

    params = SuiteParameters(
        n=config.model.n,
        m=config.model.m,
        trunc=config.model.trunc,
        max_degree=config.rewrite.max_degree,
        confluence_degree=config.rewrite.confluence_degree,
        perturb=config.verify.perturb,
        negative_controls=config.verify.negative_controls,
    )
    names = expand_suite(config.verify.suite)
    reports: dict[str, VerificationReport] = {}

    workers = min(config.general.parallel, len(names))
    if workers > 1:
        if verbosity > 0:
            print(f"Running {len(names)} suites on {workers} processes.")
        with setup_managers(workers) as executor:
            tasks: dict[Future[VerificationReport], str] = {
                executor.submit(run_suite, name, params): name for name in names
            }
            for future in tqdm(
                as_completed(tasks),
                total=len(tasks),
                desc="Running suites ...",
                disable=verbosity < 1,
            ):
                reports[tasks[future]] = future.result()
    else:
        for name in tqdm(names, desc="Running suites ...", disable=verbosity < 1):
            reports[name] = run_suite(name, params)

    # fixed suite order regardless of completion order
    ordered = [reports[name] for name in names]
    report = VerificationReport(
        suite=config.verify.suite,
        parameters=params.to_dict(),
        results=[result for suite in ordered for result in suite.results],
        elapsed=perf_counter() - start,
    )

    if verbosity > 1:
        for suite in ordered:
            status = "pass" if suite.overall else "FAIL"
            print(f"{suite.suite:>20}:   {status} ({len(suite.results)} checks)")
    if verbosity > 0:
        for failure in (r for r in report.results if not r.passed):
            print(f"Failed: {failure.identity} {json.dumps(failure.witness)}")

    write_output(report.to_json(), config.verify.out, verbosity)

    if verbosity > 0:
        print(f"\nRan qgcontract in {format_runtime(perf_counter() - start)} (HH:MM:SS)")

    return report, 0 if report.overall else 1


def emitter(config: ConfigManager) -> tuple[str | None, int]:
    """
    Render the configured matrix or coupling table.

    Returns:
        tuple[str | None, int]: The rendered text and the exit code; a
        missing contraction limit gives (None, 2).

    Raises:
        ValueError: For an unusable configuration.
    """
    verbosity = config.general.verbosity
    if config.general.print_config:
        print(config)
        return None, 0

    config.check_config(verbosity=verbosity, command="emit")
    try:
        text = render(config.emit.matrix, config.model.n, config.emit.format)
    except PoleError as e:
        print(f"{PARITY_MESSAGE} ({e})")
        return None, 2
    write_output(text, config.emit.out, verbosity)
    return text, 0


def build_matrix(name: str, n: int) -> RingMatrix:
    """
    Named matrix of dimension n.

    Raises:
        PoleError: For contracted metrics without a limit.
    """
    if name == "r_q":
        return r_standard(n)
    if name == "r_h":
        return r_jordanian(n)
    if name == "c_q":
        return c_metric_q(n)
    if name == "c_h":
        return c_metric_contract(n)
    if name == "rtilde_h":
        return r_tilde(r_jordanian(n), c_metric_contract(n), "h_side")
    raise ValueError(f"Unknown matrix '{name}'.")


def render(name: str, n: int, fmt: str) -> str:
    """
    Deterministic rendering of a named object in JSON or LaTeX.
    """
    if name == "cgc-h":
        table = derive_table()
        if fmt == "latex":
            return table_to_latex(table)
        data = table.to_json_dict()
        data["weight_violations"] = weight_violations(table)
        return json.dumps(data, indent=2) + "\n"
    matrix = build_matrix(name, n)
    if fmt == "latex":
        return matrix.to_latex() + "\n"
    return json.dumps(matrix.to_json_dict()) + "\n"


def table_to_latex(table: CouplingTable) -> str:
    lines = ["\\begin{aligned}"]
    for j, m in coupled_labels():
        for a, b in PAIRS:
            value = table.by_index(a, b, j, m)
            if not value:
                continue
            m1, m2 = M_OF_INDEX[a], M_OF_INDEX[b]
            lines.append(
                f"\\langle \\tfrac12\\, {_frac(m1)}, \\tfrac12\\, {_frac(m2)}"
                f" \\mid {j}\\, {m} \\rangle &= {value.to_latex()} \\\\"
            )
    lines.append("\\end{aligned}")
    return "\n".join(lines) + "\n"


def _frac(value: Fraction) -> str:
    sign = "-" if value < 0 else ""
    return f"{sign}\\tfrac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def write_output(text: str, out: Path | None, verbosity: int) -> None:
    if out is None:
        print(text, end="")
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf8")
    if verbosity > 0:
        print(f"Written to '{out}'.")


def format_runtime(runtime: float) -> str:
    time = timedelta(seconds=int(runtime))
    hours, r = divmod(time.seconds, 3600)
    minutes, seconds = divmod(r, 60)
    if time.days:
        hours += time.days * 24
    return f"{hours:02d}:{minutes:02d}:{seconds:02d}"


def header(version: str) -> str:
    """
    This function prints the header of the program.
    """
    headerstr = (
        "╔══════════════════════════════════════════════════════════════╗\n"
        "║                                                              ║\n"
        f"║                     qgcontract v{version[:5]:<5}                        ║\n"
        "║       Exact verification of contracted quantum groups        ║\n"
        "║                                                              ║\n"
        "║        Licensed under the Apache License, Version 2.0        ║\n"
        "║         (http://www.apache.org/licenses/LICENSE-2.0)         ║\n"
        "╚══════════════════════════════════════════════════════════════╝"
    )
    return headerstr

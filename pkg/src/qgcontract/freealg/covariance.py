"""
Comodule covariance of the creator relations under A+ -> A+ T Ts.
"""

from __future__ import annotations

from ..prog.report import CheckReport, CheckResult
from ..qgroup import r_jordanian
from ..tensor import RingMatrix
from .boson import (
    CREATOR,
    index_pairs,
    creator_relations,
    creator_system,
    generator_name,
    trivial_factor,
)
from .element import FreeElement
from .rewriting import DEFAULT_MAX_DEGREE, require_confluent
from .rtt import rtt_name, rtt_system

SECOND_PREFIX = "Ts"


def _factor_r(dim: int) -> RingMatrix:
    return r_jordanian(dim) if dim >= 2 else trivial_factor()


def covariance_check(
    n: int,
    m: int,
    commutative_T: bool = False,
    R: RingMatrix | None = None,
    max_degree: int = DEFAULT_MAX_DEGREE,
    confluence_degree: int | None = 3,
) -> CheckReport:
    """
    Apply phi(Ap_ks) = sum_jt Ap_jt T_jk Ts_ts to every creator relation and
    reduce modulo creator rules, RTT rules and commutation of the families.

    Arguments:
        n (int): First-factor dimension (2 is supported).
        m (int): Second-factor dimension, 1 or 2; for m = 1 Ts is trivial.
        commutative_T (bool): Use commuting T generators instead of the
            Jordanian RTT algebra.
        R (RingMatrix | None): Override for the first-factor R-matrix of the
            creator relations; the RTT algebra keeps the Jordanian one.
        confluence_degree (int | None): Degree of the confluence check run
            on the combined system before use; None skips it.

    Returns:
        CheckReport: One result ``covariance:n=..,m=..``.

    Raises:
        NonConfluent: If the combined rewrite system is not confluent.
    """
    if n != 2 or m not in (1, 2):
        raise ValueError("Covariance is supported for n = 2 and m in {1, 2}.")
    identity = f"covariance:n={n},m={m}"
    r_first = _factor_r(n)
    r_second = _factor_r(m)
    boson_r = R if R is not None else r_first
    t_matrix = RingMatrix.identity(n * n, (n, n)) if commutative_T else r_first

    system = creator_system(boson_r, r_second, max_degree)
    system = system.union(rtt_system(t_matrix, n, "T", max_degree))
    if m >= 2:
        system = system.union(rtt_system(r_second, m, SECOND_PREFIX, max_degree))
    if confluence_degree is not None:
        require_confluent(system, confluence_degree)

    mapping = {}
    for k, s in index_pairs(n, m):
        image = FreeElement.zero()
        for j, t in index_pairs(n, m):
            term = FreeElement.generator(generator_name(CREATOR, j, t, m))
            term = term * FreeElement.generator(rtt_name("T", j, k))
            if m >= 2:
                term = term * FreeElement.generator(rtt_name(SECOND_PREFIX, t, s))
            image = image + term
        mapping[generator_name(CREATOR, k, s, m)] = image

    report = CheckReport()
    for rel in creator_relations(boson_r, r_second):
        reduced = system.reduce(rel.substitute(mapping))
        if reduced:
            report.add(
                CheckResult(
                    identity, False, {"relation": str(rel), "image": str(reduced)}
                )
            )
            return report
    report.add(CheckResult(identity, True))
    return report

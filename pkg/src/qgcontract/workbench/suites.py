"""
Registry of verification suites. Each suite is a plain function of
:class:`SuiteParameters` returning a :class:`CheckReport`, so it can run in a
worker process.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import asdict, dataclass, replace
from time import perf_counter

from ..coupling import (
    SolveDimensionError,
    classical_table,
    default_tilde_system,
    derive_table,
    singlet_kernel,
    verify_coupled_n2m1,
    verify_coupled_n2m2,
)
from ..freealg import (
    DegreeBoundExceeded,
    FreeElement,
    NonConfluent,
    Rule,
    RewriteSystem,
    boson_relations,
    check_confluence,
    counit_check,
    covariance_check,
    metric_link_check,
    rtt_relations,
    rtt_system,
    second_set_check,
    trivial_factor,
)
from ..oscillator import (
    FAMILIES,
    build_h_spinors,
    build_weyl,
    check_degree_bookkeeping,
    check_neumann_inverse,
    check_truncation_stability,
    verify_expanded,
    verify_relations,
    verify_rform_match,
    verify_soundness,
)
from ..prog.report import CheckReport, CheckResult, VerificationReport
from ..qgroup import (
    ExpressionMismatch,
    c_metric_closed_form,
    c_metric_contract,
    check_hecke,
    check_triangular,
    check_unital,
    check_ybe,
    contract_r,
    contract_r_tilde,
    limit_equivalence,
    perturb,
    r_jordanian,
    r_standard,
)
from ..scalar import H, ONE, PoleError, ScalarQH
from ..tensor import RingMatrix

SUITE_ORDER = (
    "ybe",
    "triangular",
    "hecke",
    "limit-equivalence",
    "c-parity",
    "boson-fock",
    "boson-abstract",
    "confluence",
    "covariance",
    "coupled",
)
# failures while building an algebra from corrupted data
CONSTRUCTION_ERRORS = (
    NonConfluent,
    DegreeBoundExceeded,
    ExpressionMismatch,
    SolveDimensionError,
    ValueError,
    ArithmeticError,
)


@dataclass(frozen=True)
class SuiteParameters:
    """
    Plain parameters handed to a suite.
    """

    n: int = 2
    m: int = 1
    trunc: int = 6
    max_degree: int = 8
    confluence_degree: int = 3
    perturb: tuple[int, int] | None = None
    negative_controls: bool = True

    def to_dict(self) -> dict:
        data = asdict(self)
        data["perturb"] = list(self.perturb) if self.perturb else None
        return data


def _named(result: CheckResult, identity: str) -> CheckResult:
    return replace(result, identity=identity)


def _summarize(report: CheckReport, identity: str) -> CheckResult:
    """
    Collapse a report into one result carrying its first failure.
    """
    failures = report.failures()
    if not failures:
        return CheckResult(identity, True)
    return _named(failures[0], identity)


def _failed_construction(identity: str, error: Exception) -> CheckResult:
    return CheckResult(
        identity, False, {"reason": f"{type(error).__name__}: {error}"}
    )


def primary_r(params: SuiteParameters) -> RingMatrix:
    """
    Jordanian R-matrix of dimension n, perturbed by +h when requested.
    """
    R = r_jordanian(params.n)
    if params.perturb is not None:
        R = perturb(R, *params.perturb)
    return R


def primary_r_standard(params: SuiteParameters) -> RingMatrix:
    R = r_standard(params.n)
    if params.perturb is not None:
        R = perturb(R, *params.perturb)
    return R


def _second_factor(m: int) -> tuple[RingMatrix, RingMatrix]:
    if m == 1:
        one = trivial_factor()
        return one, one
    return r_jordanian(2), c_metric_closed_form(2)


### Structural suites ###


def suite_ybe(params: SuiteParameters) -> CheckReport:
    n = params.n
    report = CheckReport()
    report.add(_named(check_ybe(primary_r(params)), f"ybe:r_h(n={n})"))
    report.add(_named(check_ybe(r_standard(n)), f"ybe:r_q(n={n})"))
    if params.negative_controls:
        mutated = check_ybe(perturb(r_jordanian(n), 1, n))
        report.add(CheckResult.negative_control("negative-control:ybe", mutated))
    return report


def suite_triangular(params: SuiteParameters) -> CheckReport:
    n = params.n
    report = CheckReport()
    report.add(
        _named(check_triangular(primary_r(params)), f"triangular:r_h(n={n})")
    )
    if params.negative_controls:
        mutated = check_triangular(perturb(r_jordanian(n), 1, n))
        report.add(
            CheckResult.negative_control("negative-control:triangular", mutated)
        )
    return report


def suite_hecke(params: SuiteParameters) -> CheckReport:
    n = params.n
    report = CheckReport()
    report.add(_named(check_hecke(primary_r_standard(params)), f"hecke:r_q(n={n})"))
    report.add(_named(check_unital(r_standard(n)), f"unital:r_q(n={n})"))
    if params.negative_controls:
        mutated = check_hecke(perturb(r_standard(n), 1, 2))
        report.add(CheckResult.negative_control("negative-control:hecke", mutated))
    return report


def suite_limit_equivalence(params: SuiteParameters) -> CheckReport:
    n = params.n
    report = CheckReport()
    contracted = contract_r(n)
    report.add(
        CheckResult.from_difference(
            f"contraction:r_h(n={n})",
            contracted.path_a.first_difference(primary_r(params)),
        )
    )
    if limit_equivalence(n):
        report.add(CheckResult("limit-equivalence", True))
    else:
        report.add(
            CheckResult(
                "limit-equivalence",
                False,
                {"reason": "R'_12 and R'_21^-1 contract to different matrices"},
            )
        )
    if n % 2 == 0:
        tilde = contract_r_tilde(n)
        report.add(
            CheckResult.from_difference(
                f"contraction:rtilde_h(n={n})",
                tilde.path_a.first_difference(tilde.path_b),
            )
        )
    return report


def suite_c_parity(params: SuiteParameters) -> CheckReport:
    """
    The contracted metric exists for n = 1, 2, 4 and has a pole for n = 3, 5.
    """
    report = CheckReport()
    for N in (1, 2, 4):
        try:
            c_metric_contract(N)
        except (ArithmeticError, RuntimeError) as e:
            report.add(_failed_construction(f"c-parity:n={N}", e))
        else:
            report.add(CheckResult(f"c-parity:n={N}", True))
    for N in (3, 5):
        try:
            c_metric_contract(N)
        except PoleError:
            report.add(CheckResult(f"c-parity:n={N}", True))
        else:
            report.add(
                CheckResult(
                    f"c-parity:n={N}",
                    False,
                    {"reason": "limit exists although n is odd"},
                )
            )
    return report


### Boson suites ###


def suite_boson_fock(params: SuiteParameters) -> CheckReport:
    """
    Relations on the truncated Fock representation, with h formal and at
    h = 0, plus the bookkeeping of the truncation itself.
    """
    D = params.trunc
    report = CheckReport()
    rep = build_h_spinors(build_weyl(2, D))
    for family in FAMILIES:
        report.extend(verify_relations(rep, family))
    classical = build_h_spinors(build_weyl(2, D), h_value=0)
    for family in FAMILIES:
        for result in verify_relations(classical, family, h_value=0):
            report.add(_named(result, f"h=0:{result.identity}"))
    report.add(check_truncation_stability(D))
    report.add(check_neumann_inverse(rep))
    report.add(check_degree_bookkeeping(rep))
    R = primary_r(params)
    for form in ("plain", "tilde"):
        try:
            report.add(verify_expanded(rep, form, R=R))
        except CONSTRUCTION_ERRORS as e:
            report.add(_failed_construction(f"expanded:{form}", e))
    if params.negative_controls:
        metric = perturb(c_metric_closed_form(2), 2, 2)
        mutated_rep = build_h_spinors(build_weyl(2, D), metric=metric)
        mutated = verify_relations(mutated_rep, "mixed_plain")
        report.add(
            CheckResult.negative_control(
                "negative-control:boson-fock", _summarize(mutated, "mixed_plain")
            )
        )
    return report


def suite_boson_abstract(params: SuiteParameters) -> CheckReport:
    """
    Free-algebra side: generated systems, their agreement with the written
    relations, the second operator set, the metric link, soundness against
    the Fock representation and the RTT algebra.
    """
    R = primary_r(params)
    C = c_metric_closed_form(2)
    calR, calC = _second_factor(params.m)
    report = CheckReport()
    systems: dict[str, RewriteSystem] = {}
    for form in ("tilde", "plain"):
        try:
            rs = boson_relations(
                R, calR, C, calC, form, params.max_degree, confluence_degree=None
            )
        except CONSTRUCTION_ERRORS as e:
            report.add(_failed_construction(f"system:{form}", e))
            continue
        systems[form] = rs
        report.add(CheckResult(f"system:{form}", True))
        try:
            report.add(second_set_check(R, calR, C, calC, form))
        except CONSTRUCTION_ERRORS as e:
            report.add(_failed_construction(f"second-set:{form}", e))
    if "tilde" in systems:
        try:
            report.add(metric_link_check(R, calR, C, calC, systems["tilde"]))
        except CONSTRUCTION_ERRORS as e:
            report.add(_failed_construction("metric-link", e))
    if params.m == 1:
        try:
            report.extend(verify_rform_match(R, C))
        except CONSTRUCTION_ERRORS as e:
            report.add(_failed_construction("rform", e))
        rep = build_h_spinors(build_weyl(2, params.trunc))
        for form, rs in systems.items():
            report.add(verify_soundness(rs, rep, 3, identity=f"soundness:{form}"))
    try:
        rtt = rtt_system(R, params.n, "T", params.max_degree)
    except CONSTRUCTION_ERRORS as e:
        report.add(_failed_construction("rtt-rank", e))
    else:
        expected = params.n * params.n * (params.n * params.n - 1) // 2
        if len(rtt) == expected:
            report.add(CheckResult("rtt-rank", True))
        else:
            report.add(
                CheckResult("rtt-rank", False, {"rules": len(rtt), "expected": expected})
            )
    report.add(counit_check(rtt_relations(R, params.n), params.n))
    return report


def toy_nonconfluent_system() -> RewriteSystem:
    """
    ba -> ab + a, bb -> aa over a < b; the word "b b a" splits.
    """
    a, b = FreeElement.generator("a"), FreeElement.generator("b")
    rules = [
        Rule(("b", "a"), a * b + a),
        Rule(("b", "b"), a * a),
    ]
    return RewriteSystem(rules, ["a", "b"])


def suite_confluence(params: SuiteParameters) -> CheckReport:
    R = primary_r(params)
    C = c_metric_closed_form(2)
    calR, calC = _second_factor(params.m)
    degree = params.confluence_degree
    report = CheckReport()
    candidates: list[tuple[str, Callable[[], RewriteSystem]]] = [
        (
            "confluence:tilde",
            lambda: boson_relations(
                R, calR, C, calC, "tilde", params.max_degree, confluence_degree=None
            ),
        ),
        (
            "confluence:plain",
            lambda: boson_relations(
                R, calR, C, calC, "plain", params.max_degree, confluence_degree=None
            ),
        ),
        ("confluence:rtt-h", lambda: rtt_system(R, params.n, "T", params.max_degree)),
        (
            "confluence:rtt-q",
            lambda: rtt_system(r_standard(params.n), params.n, "T", params.max_degree),
        ),
    ]
    for identity, build in candidates:
        try:
            rs = build()
        except CONSTRUCTION_ERRORS as e:
            report.add(_failed_construction(identity, e))
            continue
        report.add(_named(check_confluence(rs, degree)["confluence"], identity))
    if params.negative_controls:
        mutated = check_confluence(toy_nonconfluent_system(), 3)["confluence"]
        report.add(
            CheckResult.negative_control("negative-control:confluence", mutated)
        )
    return report


def suite_covariance(params: SuiteParameters) -> CheckReport:
    report = CheckReport()
    identity = f"covariance:n={params.n},m={params.m}"
    try:
        report.extend(
            covariance_check(
                params.n,
                params.m,
                R=primary_r(params) if params.perturb else None,
                max_degree=params.max_degree,
            )
        )
    except CONSTRUCTION_ERRORS as e:
        report.add(_failed_construction(identity, e))
    if params.negative_controls:
        mutated = covariance_check(
            params.n, params.m, commutative_T=True, max_degree=params.max_degree
        )
        report.add(
            CheckResult.negative_control(
                "negative-control:covariance", mutated[identity]
            )
        )
    return report


def suite_coupled(params: SuiteParameters) -> CheckReport:
    """
    Derived coupling table and the coupled exchange identities.
    """
    report = CheckReport()
    try:
        rs = (
            boson_relations(
                primary_r(params),
                trivial_factor(),
                c_metric_closed_form(2),
                trivial_factor(),
                "tilde",
                params.max_degree,
            )
            if params.perturb
            else default_tilde_system(params.max_degree)
        )
        table = derive_table(rs)
    except CONSTRUCTION_ERRORS as e:
        report.add(_failed_construction("cgc:derive", e))
        return report
    report.add(CheckResult("cgc:derive", True))

    classical = classical_table()
    if table.subs_h(0) == classical:
        report.add(CheckResult("cgc:classical-limit", True))
    else:
        report.add(
            CheckResult(
                "cgc:classical-limit", False, {"table": table.subs_h(0).to_json_dict()}
            )
        )
    kernel = singlet_kernel(rs)
    expected: list[ScalarQH] = [H, -ONE, ONE, ScalarQH(0)]
    if kernel == expected:
        report.add(CheckResult("cgc:singlet-kernel", True))
    else:
        report.add(
            CheckResult(
                "cgc:singlet-kernel", False, {"kernel": [str(x) for x in kernel]}
            )
        )

    if params.m == 1:
        report.extend(verify_coupled_n2m1(table, rs, trunc=params.trunc))
    else:
        report.extend(verify_coupled_n2m2(table))
    if params.negative_controls:
        mutated = verify_coupled_n2m1(
            table.perturbed(1, 1, 0, 0), rs, trunc=params.trunc
        )
        report.add(
            CheckResult.negative_control(
                "negative-control:coupled", _summarize(mutated, "coupled")
            )
        )
    return report


SUITES: dict[str, Callable[[SuiteParameters], CheckReport]] = {
    "ybe": suite_ybe,
    "triangular": suite_triangular,
    "hecke": suite_hecke,
    "limit-equivalence": suite_limit_equivalence,
    "c-parity": suite_c_parity,
    "boson-fock": suite_boson_fock,
    "boson-abstract": suite_boson_abstract,
    "confluence": suite_confluence,
    "covariance": suite_covariance,
    "coupled": suite_coupled,
}


def expand_suite(name: str) -> list[str]:
    """
    Suite names behind ``name``; "all" stands for every suite in fixed order.
    """
    if name == "all":
        return list(SUITE_ORDER)
    if name not in SUITES:
        raise ValueError(f"Unknown suite '{name}'. Choose from {', '.join(SUITES)}.")
    return [name]


def run_suite(name: str, params: SuiteParameters) -> VerificationReport:
    """
    Run one registered suite and time it.
    """
    if name not in SUITES:
        raise ValueError(f"Unknown suite '{name}'.")
    start = perf_counter()
    report = SUITES[name](params)
    return VerificationReport(
        suite=name,
        parameters=params.to_dict(),
        results=list(report),
        elapsed=perf_counter() - start,
    )

"""
Covariant deformed boson algebras: componentwise expansion of the
R-matrix exchange relations into free-algebra relations and rewrite systems.

Indices are 1-based; the mode index i runs over the first factor (dimension
n, from R) and s over the second (dimension m, from the script R-matrix).
For m = 1 the second index is omitted from generator names.
"""

from __future__ import annotations

from typing import Literal

from ..prog.report import CheckResult
from ..tensor import RingMatrix, invert, partial_transpose, swap_legs
from ..qgroup import r_tilde
from .element import FreeElement, format_word
from .rewriting import DEFAULT_MAX_DEGREE, RewriteSystem, require_confluent

Form = Literal["plain", "tilde"]

CREATOR = "Ap"
TILDE = "At"
PLAIN = "A"


def trivial_factor() -> RingMatrix:
    """
    1 x 1 R-matrix (and metric) of a one-dimensional second factor.
    """
    return RingMatrix.identity(1, (1, 1))


def generator_name(family: str, i: int, s: int, m: int) -> str:
    return f"{family}{i}" if m == 1 else f"{family}{i}{s}"


def _gen(family: str, i: int, s: int, m: int) -> FreeElement:
    return FreeElement.generator(generator_name(family, i, s, m))


def index_pairs(n: int, m: int) -> list[tuple[int, int]]:
    return [(i, s) for i in range(1, n + 1) for s in range(1, m + 1)]


def boson_generators(n: int, m: int, form: Form) -> list[str]:
    """
    Creators ascending by (i, s), then tilde annihilators ascending or plain
    annihilators descending.
    """
    pairs = index_pairs(n, m)
    creators = [generator_name(CREATOR, i, s, m) for i, s in pairs]
    if form == "tilde":
        return creators + [generator_name(TILDE, i, s, m) for i, s in pairs]
    if form == "plain":
        return creators + [generator_name(PLAIN, i, s, m) for i, s in reversed(pairs)]
    raise ValueError(f"Unknown form '{form}'.")


def _dims(R: RingMatrix, calR: RingMatrix) -> tuple[int, int]:
    if R.factors is None or calR.factors is None:
        raise ValueError("R-matrices must carry factor dimensions.")
    return R.factors[0], calR.factors[0]


def _entry(M: RingMatrix, d: int, a: int, b: int, c: int, e: int):
    return M[(a - 1) * d + (b - 1), (c - 1) * d + (e - 1)]


def _pair_relations(R: RingMatrix, calR: RingMatrix, family: str) -> list[FreeElement]:
    """
    X_ks X_lt - sum R[(ij),(kl)] calR[(uv),(st)] X_jv X_iu.
    """
    n, m = _dims(R, calR)
    relations = []
    for k, s in index_pairs(n, m):
        for ll, t in index_pairs(n, m):
            rel = _gen(family, k, s, m) * _gen(family, ll, t, m)
            for i, u in index_pairs(n, m):
                for j, v in index_pairs(n, m):
                    coeff = _entry(R, n, i, j, k, ll) * _entry(calR, m, u, v, s, t)
                    if coeff:
                        rel = rel - coeff * (_gen(family, j, v, m) * _gen(family, i, u, m))
            relations.append(rel)
    return relations


def creator_relations(R: RingMatrix, calR: RingMatrix) -> list[FreeElement]:
    return _pair_relations(R, calR, CREATOR)


def tilde_annihilator_relations(R: RingMatrix, calR: RingMatrix) -> list[FreeElement]:
    return _pair_relations(R, calR, TILDE)


def plain_annihilator_relations(R: RingMatrix, calR: RingMatrix) -> list[FreeElement]:
    """
    A_iu A_jv - sum R[(ij),(kl)] calR[(uv),(st)] A_lt A_ks.
    """
    n, m = _dims(R, calR)
    relations = []
    for i, u in index_pairs(n, m):
        for j, v in index_pairs(n, m):
            rel = _gen(PLAIN, i, u, m) * _gen(PLAIN, j, v, m)
            for k, s in index_pairs(n, m):
                for ll, t in index_pairs(n, m):
                    coeff = _entry(R, n, i, j, k, ll) * _entry(calR, m, u, v, s, t)
                    if coeff:
                        rel = rel - coeff * (_gen(PLAIN, ll, t, m) * _gen(PLAIN, k, s, m))
            relations.append(rel)
    return relations


def mixed_tilde_relations(
    R: RingMatrix, calR: RingMatrix, C: RingMatrix, calC: RingMatrix
) -> list[FreeElement]:
    """
    At_lt Ap_ks - C[k,l] calC[s,t] I
    - sum Ap_iu At_jv Rt^-1[(ij),(kl)] calRt^-1[(uv),(st)],
    with Rt the h-side twisted R-matrix.
    """
    n, m = _dims(R, calR)
    rt_inv = invert(r_tilde(R, C, "h_side"))
    cal_rt_inv = invert(r_tilde(calR, calC, "h_side"))
    unit = FreeElement.unit()
    relations = []
    for k, s in index_pairs(n, m):
        for ll, t in index_pairs(n, m):
            rel = _gen(TILDE, ll, t, m) * _gen(CREATOR, k, s, m)
            rel = rel - (C[k - 1, ll - 1] * calC[s - 1, t - 1]) * unit
            for i, u in index_pairs(n, m):
                for j, v in index_pairs(n, m):
                    coeff = _entry(rt_inv, n, i, j, k, ll) * _entry(
                        cal_rt_inv, m, u, v, s, t
                    )
                    if coeff:
                        rel = rel - coeff * (_gen(CREATOR, i, u, m) * _gen(TILDE, j, v, m))
            relations.append(rel)
    return relations


def mixed_plain_relations(R: RingMatrix, calR: RingMatrix) -> list[FreeElement]:
    """
    A_is Ap_jt - delta_ij delta_st I
    - sum R^t1[(ji),(kl)] calR^t1[(ts),(uv)] Ap_ku A_lv.
    """
    n, m = _dims(R, calR)
    r_t1 = partial_transpose(R, 1)
    cal_r_t1 = partial_transpose(calR, 1)
    unit = FreeElement.unit()
    relations = []
    for i, s in index_pairs(n, m):
        for j, t in index_pairs(n, m):
            rel = _gen(PLAIN, i, s, m) * _gen(CREATOR, j, t, m)
            if i == j and s == t:
                rel = rel - unit
            for k, u in index_pairs(n, m):
                for ll, v in index_pairs(n, m):
                    coeff = _entry(r_t1, n, j, i, k, ll) * _entry(cal_r_t1, m, t, s, u, v)
                    if coeff:
                        rel = rel - coeff * (_gen(CREATOR, k, u, m) * _gen(PLAIN, ll, v, m))
            relations.append(rel)
    return relations


def expand_components(
    R: RingMatrix,
    calR: RingMatrix,
    C: RingMatrix,
    calC: RingMatrix,
    form: Form,
) -> list[FreeElement]:
    """
    All component relations of one form: creator pairs, annihilator pairs and
    the mixed annihilator-creator exchange.
    """
    if form == "tilde":
        return (
            creator_relations(R, calR)
            + tilde_annihilator_relations(R, calR)
            + mixed_tilde_relations(R, calR, C, calC)
        )
    if form == "plain":
        return (
            creator_relations(R, calR)
            + plain_annihilator_relations(R, calR)
            + mixed_plain_relations(R, calR)
        )
    raise ValueError(f"Unknown form '{form}'.")


def boson_relations(
    R: RingMatrix,
    calR: RingMatrix,
    C: RingMatrix,
    calC: RingMatrix,
    form: Form,
    max_degree: int = DEFAULT_MAX_DEGREE,
    confluence_degree: int | None = 3,
) -> RewriteSystem:
    """
    Rewrite system of the deformed boson algebra in the given form.

    Arguments:
        R, calR (RingMatrix): R-matrices of the two factors.
        C, calC (RingMatrix): Metrics of the two factors.
        form (Form): ``plain`` for annihilators A, ``tilde`` for A-tilde.
        max_degree (int): Degree bound of the returned system.
        confluence_degree (int | None): Degree of the confluence check run
            before returning; None skips it.

    Raises:
        NonConfluent: If the confluence check fails.
    """
    n, m = _dims(R, calR)
    rs = RewriteSystem.from_relations(
        expand_components(R, calR, C, calC, form),
        boson_generators(n, m, form),
        max_degree,
    )
    if confluence_degree is not None:
        require_confluent(rs, confluence_degree)
    return rs


def creator_system(
    R: RingMatrix, calR: RingMatrix, max_degree: int = DEFAULT_MAX_DEGREE
) -> RewriteSystem:
    """
    Rewrite system of the creator subalgebra alone.
    """
    n, m = _dims(R, calR)
    generators = [generator_name(CREATOR, i, s, m) for i, s in index_pairs(n, m)]
    return RewriteSystem.from_relations(
        creator_relations(R, calR), generators, max_degree
    )


def system_difference(first: RewriteSystem, second: RewriteSystem) -> dict | None:
    first_rules, second_rules = first.rules, second.rules
    for lhs in sorted(set(first_rules) | set(second_rules), key=first.word_key):
        a, b = first_rules.get(lhs), second_rules.get(lhs)
        if a is None or b is None or a != b:
            return {
                "lhs": format_word(lhs),
                "first": str(a) if a is not None else None,
                "second": str(b) if b is not None else None,
            }
    return None


def second_set_check(
    R: RingMatrix, calR: RingMatrix, C: RingMatrix, calC: RingMatrix, form: Form
) -> CheckResult:
    """
    Rebuilding the system from R_21^-1 and calR_21^-1 gives the same rules.
    """
    identity = f"second-set:{form}"
    first = boson_relations(R, calR, C, calC, form, confluence_degree=None)
    second = boson_relations(
        invert(swap_legs(R)),
        invert(swap_legs(calR)),
        C,
        calC,
        form,
        confluence_degree=None,
    )
    difference = system_difference(first, second)
    if difference is None:
        return CheckResult(identity, True)
    return CheckResult(identity, False, difference)


def metric_link_check(
    R: RingMatrix,
    calR: RingMatrix,
    C: RingMatrix,
    calC: RingMatrix,
    tilde_system: RewriteSystem | None = None,
) -> CheckResult:
    """
    Substituting A_js = sum At_it (C^-1)_ij (calC^-1)_ts into the plain
    relations yields elements reducing to zero modulo the tilde system.
    """
    n, m = _dims(R, calR)
    if tilde_system is None:
        tilde_system = boson_relations(R, calR, C, calC, "tilde", confluence_degree=None)
    c_inv = invert(C)
    cal_c_inv = invert(calC)
    mapping = {}
    for j, s in index_pairs(n, m):
        image = FreeElement.zero()
        for i, t in index_pairs(n, m):
            coeff = c_inv[i - 1, j - 1] * cal_c_inv[t - 1, s - 1]
            if coeff:
                image = image + coeff * _gen(TILDE, i, t, m)
        mapping[generator_name(PLAIN, j, s, m)] = image
    plain = plain_annihilator_relations(R, calR) + mixed_plain_relations(R, calR)
    for rel in plain:
        reduced = tilde_system.reduce(rel.substitute(mapping))
        if reduced:
            return CheckResult(
                "metric-link",
                False,
                {"relation": str(rel), "reduced": str(reduced)},
            )
    return CheckResult("metric-link", True)

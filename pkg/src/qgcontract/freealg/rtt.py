"""
RTT relations of a quantum matrix algebra.
"""

from __future__ import annotations

from ..prog.report import CheckResult
from ..tensor import RingMatrix
from .element import FreeElement
from .rewriting import DEFAULT_MAX_DEGREE, RewriteSystem


def rtt_name(prefix: str, i: int, j: int) -> str:
    return f"{prefix}{i}{j}"


def rtt_generators(N: int, prefix: str = "T") -> list[str]:
    """
    Matrix-element generators ordered by (j - i, i): for N = 2 this gives
    T21 < T11 < T22 < T12.
    """
    pairs = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
    pairs.sort(key=lambda p: (p[1] - p[0], p[0]))
    return [rtt_name(prefix, i, j) for i, j in pairs]


def rtt_relations(R: RingMatrix, N: int, gen_prefix: str = "T") -> list[FreeElement]:
    """
    Entries of R T_1 T_2 - T_2 T_1 R as quadratic elements.

    Entry ((i,j),(k,l)) is
    sum_ab R[(ij),(ab)] T_ak T_bl - sum_ab R[(ab),(kl)] T_jb T_ia;
    zero entries and repeated relations are dropped.
    """
    if R.dim != N * N:
        raise ValueError(f"R has dimension {R.dim}, expected {N * N}.")

    def t(a: int, b: int) -> FreeElement:
        return FreeElement.generator(rtt_name(gen_prefix, a + 1, b + 1))

    relations: list[FreeElement] = []
    for i in range(N):
        for j in range(N):
            for k in range(N):
                for ll in range(N):
                    rel = FreeElement.zero()
                    for a in range(N):
                        for b in range(N):
                            left = R[i * N + j, a * N + b]
                            if left:
                                rel = rel + left * (t(a, k) * t(b, ll))
                            right = R[a * N + b, k * N + ll]
                            if right:
                                rel = rel - right * (t(j, b) * t(i, a))
                    if rel and rel not in relations:
                        relations.append(rel)
    return relations


def rtt_system(
    R: RingMatrix,
    N: int,
    gen_prefix: str = "T",
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> RewriteSystem:
    """
    Rewrite system of the RTT relations over ``rtt_generators`` order.
    """
    return RewriteSystem.from_relations(
        rtt_relations(R, N, gen_prefix), rtt_generators(N, gen_prefix), max_degree
    )


def counit_check(
    relations: list[FreeElement], N: int, gen_prefix: str = "T"
) -> CheckResult:
    """
    Sending T_ij to delta_ij must annihilate every relation.
    """
    unit = FreeElement.unit()
    zero = FreeElement.zero()
    mapping = {
        rtt_name(gen_prefix, i, j): unit if i == j else zero
        for i in range(1, N + 1)
        for j in range(1, N + 1)
    }
    for index, rel in enumerate(relations):
        image = rel.substitute(mapping)
        if image:
            return CheckResult(
                "counit",
                False,
                {"relation": index, "element": str(rel), "image": str(image)},
            )
    return CheckResult("counit", True)

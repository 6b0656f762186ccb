"""
Oriented rewriting in the free algebra: rule systems extracted from
relations, reduction to normal form and a brute-force confluence check.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np

from ..prog.report import CheckReport, CheckResult
from ..scalar import ZERO, ScalarQH
from ..tensor import row_reduce
from .element import FreeElement, Word, format_word

DEFAULT_MAX_DEGREE = 8


class DegreeBoundExceeded(RuntimeError):
    """
    Raised when an element longer than the system's degree bound is reduced.
    """


class NonConfluent(RuntimeError):
    """
    Raised when a rewrite system fails its confluence check.
    """


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: FreeElement

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} -> {self.rhs}"


class RewriteSystem:
    """
    Ordered rules ``lhs -> rhs`` over a total order on generators.

    Words are compared by length, then lexicographically by generator rank.
    Every rule must strictly decrease this order, which makes reduction
    terminate.
    """

    def __init__(
        self,
        rules: Iterable[Rule],
        generators: Sequence[str],
        max_degree: int = DEFAULT_MAX_DEGREE,
    ) -> None:
        if len(set(generators)) != len(generators):
            raise ValueError("Generator names must be unique.")
        self._generators: tuple[str, ...] = tuple(generators)
        self._rank = {name: i for i, name in enumerate(self._generators)}
        self.max_degree = max_degree
        self._rules: dict[Word, FreeElement] = {}
        for rule in rules:
            self._add_rule(rule)
        self._lengths = sorted({len(lhs) for lhs in self._rules})

    def _add_rule(self, rule: Rule) -> None:
        if not rule.lhs:
            raise ValueError("A rule cannot rewrite the unit.")
        if rule.lhs in self._rules:
            raise ValueError(f"Duplicate rule for {format_word(rule.lhs)}.")
        lhs_key = self.word_key(rule.lhs)
        for word in rule.rhs.words():
            if self.word_key(word) >= lhs_key:
                raise ValueError(f"Rule {rule} does not decrease the word order.")
        self._rules[rule.lhs] = rule.rhs

    ### Construction ###

    @classmethod
    def from_relations(
        cls,
        relations: Iterable[FreeElement],
        generators: Sequence[str],
        max_degree: int = DEFAULT_MAX_DEGREE,
    ) -> RewriteSystem:
        """
        Orient a set of relations (elements equal to zero) into rules.

        The coefficient vectors are brought into reduced row echelon form
        with columns sorted by decreasing word order, so each pivot word is
        the leading word of its row and becomes a left-hand side.

        Raises:
            ValueError: If a relation has a leading word of length < 2.
        """
        system = cls([], generators, max_degree)
        relations = [rel for rel in relations if rel]
        if not relations:
            return system
        all_words = {word for rel in relations for word in rel.words()}
        for word in all_words:
            system._check_word(word)
        columns = sorted(all_words, key=system.word_key, reverse=True)
        position = {word: c for c, word in enumerate(columns)}
        matrix = np.full((len(relations), len(columns)), ZERO, dtype=object)
        for r, rel in enumerate(relations):
            for word, coeff in rel:
                matrix[r, position[word]] = coeff
        reduced, pivots = row_reduce(matrix)
        rules = []
        for r, p in enumerate(pivots):
            lhs = columns[p]
            if len(lhs) < 2:
                raise ValueError(
                    f"Relation with leading word {format_word(lhs)} collapses "
                    "a generator."
                )
            rhs = FreeElement(
                {columns[c]: -reduced[r, c] for c in range(p + 1, len(columns))}
            )
            rules.append(Rule(lhs, rhs))
        return cls(rules, generators, max_degree)

    def union(
        self, other: RewriteSystem, commuting: bool = True
    ) -> RewriteSystem:
        """
        Rules of both systems over the concatenated generator order; with
        ``commuting`` every generator of ``other`` commutes past every
        generator of ``self``.
        """
        rules = list(self) + list(other)
        if commuting:
            for later in other.generators:
                for earlier in self.generators:
                    rules.append(
                        Rule((later, earlier), FreeElement.word(earlier, later))
                    )
        return RewriteSystem(
            rules,
            self._generators + other.generators,
            max(self.max_degree, other.max_degree),
        )

    def with_max_degree(self, max_degree: int) -> RewriteSystem:
        return RewriteSystem(list(self), self._generators, max_degree)

    ### Access ###

    @property
    def generators(self) -> tuple[str, ...]:
        return self._generators

    @property
    def rules(self) -> dict[Word, FreeElement]:
        return dict(self._rules)

    def __iter__(self) -> Iterator[Rule]:
        return (Rule(lhs, rhs) for lhs, rhs in self._rules.items())

    def __len__(self) -> int:
        return len(self._rules)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RewriteSystem):
            return NotImplemented
        if self._rules.keys() != other._rules.keys():
            return False
        return all(rhs == other._rules[lhs] for lhs, rhs in self._rules.items())

    __hash__ = None  # type: ignore[assignment]

    def word_key(self, word: Word) -> tuple[int, tuple[int, ...]]:
        return len(word), tuple(self._rank[name] for name in word)

    def _check_word(self, word: Word) -> None:
        for name in word:
            if name not in self._rank:
                raise ValueError(f"Unknown generator '{name}'.")

    def __str__(self) -> str:
        ordered = sorted(self._rules, key=self.word_key)
        return "\n".join(str(Rule(lhs, self._rules[lhs])) for lhs in ordered)

    ### Reduction ###

    def redexes(self, word: Word) -> list[int]:
        """
        Start positions of all rule left-hand sides occurring in ``word``.
        """
        positions = []
        for pos in range(len(word)):
            for length in self._lengths:
                if word[pos : pos + length] in self._rules:
                    positions.append(pos)
                    break
        return positions

    def _match_at(self, word: Word, pos: int) -> Word | None:
        for length in self._lengths:
            candidate = word[pos : pos + length]
            if len(candidate) == length and candidate in self._rules:
                return candidate
        return None

    def rewrite_at(self, word: Word, pos: int) -> FreeElement:
        """
        Apply the rule matching at ``pos`` once.
        """
        lhs = self._match_at(word, pos)
        if lhs is None:
            raise ValueError(f"No rule applies at position {pos} of {word}.")
        prefix = FreeElement.word(*word[:pos])
        suffix = FreeElement.word(*word[pos + len(lhs) :])
        return prefix * self._rules[lhs] * suffix

    def is_normal(self, word: Word) -> bool:
        return not self.redexes(word)

    def reduce(self, element: FreeElement) -> FreeElement:
        """
        Normal form, rewriting the leftmost redex of every term per pass.

        Raises:
            DegreeBoundExceeded: If a term is longer than ``max_degree``.
        """
        if element.degree > self.max_degree:
            raise DegreeBoundExceeded(
                f"Degree {element.degree} exceeds the bound {self.max_degree}."
            )
        current = element.terms
        while True:
            changed = False
            nxt: dict[Word, ScalarQH] = {}
            for word, coeff in current.items():
                positions = self.redexes(word)
                if not positions:
                    nxt[word] = nxt.get(word, ZERO) + coeff
                    continue
                changed = True
                for new_word, new_coeff in self.rewrite_at(word, positions[0]):
                    nxt[new_word] = nxt.get(new_word, ZERO) + coeff * new_coeff
            current = {word: coeff for word, coeff in nxt.items() if coeff}
            if not changed:
                return FreeElement(current)

    def subs_h(self, value: int) -> RewriteSystem:
        """
        Specialize h in all right-hand sides.
        """
        rules = [Rule(lhs, rhs.subs_h(value)) for lhs, rhs in self._rules.items()]
        return RewriteSystem(rules, self._generators, self.max_degree)


def reduce(element: FreeElement, rs: RewriteSystem) -> FreeElement:
    """
    Normal form of ``element`` modulo ``rs``.
    """
    return rs.reduce(element)


def enumerate_words(generators: Sequence[str], degree: int) -> Iterator[Word]:
    """
    All words of length 1..degree, shortest first.
    """
    for length in range(1, degree + 1):
        yield from product(generators, repeat=length)


def check_confluence(rs: RewriteSystem, degree: int = 3) -> CheckReport:
    """
    Reduce every word of length <= degree through each possible first
    rewrite and compare the normal forms.

    Returns:
        CheckReport: A single ``confluence`` result; its witness names the
        first word whose reductions split.
    """
    if degree < 2:
        raise ValueError("Confluence needs degree >= 2.")
    report = CheckReport()
    checked = 0
    for word in enumerate_words(rs.generators, degree):
        positions = rs.redexes(word)
        if len(positions) < 2:
            continue
        checked += 1
        forms = [rs.reduce(rs.rewrite_at(word, pos)) for pos in positions]
        for pos, form in zip(positions[1:], forms[1:]):
            if form != forms[0]:
                report.add(
                    CheckResult(
                        "confluence",
                        False,
                        {
                            "word": format_word(word),
                            "positions": [positions[0], pos],
                            "first": str(forms[0]),
                            "second": str(form),
                        },
                    )
                )
                return report
    report.add(CheckResult("confluence", True))
    return report


def require_confluent(rs: RewriteSystem, degree: int = 3) -> RewriteSystem:
    """
    Return ``rs`` unchanged after a passing confluence check.

    Raises:
        NonConfluent: With the splitting word in the message.
    """
    report = check_confluence(rs, degree)
    if not report.passed:
        raise NonConfluent(f"Reductions split: {report['confluence'].witness}")
    return rs

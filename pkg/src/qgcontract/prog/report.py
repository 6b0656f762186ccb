"""
Report records shared by all verifiers.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
import json
from typing import Any


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one identity check. A witness is attached exactly when the
    check failed.
    """

    identity: str
    passed: bool
    witness: dict[str, Any] | None = None

    def __post_init__(self) -> None:
        if self.passed and self.witness is not None:
            raise ValueError(f"Passing check '{self.identity}' carries a witness.")
        if not self.passed and self.witness is None:
            raise ValueError(f"Failing check '{self.identity}' has no witness.")

    @classmethod
    def from_difference(
        cls, identity: str, difference: tuple[int, int, str] | None
    ) -> CheckResult:
        """
        Build from a matrix ``first_difference`` result.
        """
        if difference is None:
            return cls(identity, True)
        row, col, value = difference
        return cls(identity, False, {"row": row, "col": col, "value": value})

    @classmethod
    def negative_control(cls, identity: str, mutated: CheckResult) -> CheckResult:
        """
        Passes when the check on mutated input failed.
        """
        if not mutated.passed:
            return cls(identity, True)
        return cls(identity, False, {"reason": "mutated input passed"})

    def to_dict(self) -> dict[str, Any]:
        return {"identity": self.identity, "pass": self.passed, "witness": self.witness}


@dataclass
class CheckReport:
    """
    Ordered collection of checks with lookup by identity name.
    """

    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, check: CheckResult) -> None:
        self.checks.append(check)

    def extend(self, other: CheckReport | list[CheckResult]) -> None:
        self.checks.extend(other.checks if isinstance(other, CheckReport) else other)

    def __getitem__(self, identity: str) -> CheckResult:
        for check in self.checks:
            if check.identity == identity:
                return check
        raise KeyError(identity)

    def __contains__(self, identity: str) -> bool:
        return any(check.identity == identity for check in self.checks)

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> dict[str, dict[str, Any]]:
        """
        Mapping identity -> {pass, first_failure}.
        """
        return {
            check.identity: {"pass": check.passed, "first_failure": check.witness}
            for check in self.checks
        }


@dataclass
class VerificationReport:
    """
    Result of one verification suite run.
    """

    suite: str
    parameters: dict[str, Any]
    results: list[CheckResult]
    elapsed: float = 0.0

    @property
    def overall(self) -> bool:
        return all(result.passed for result in self.results)

    def to_dict(self, include_elapsed: bool = True) -> dict[str, Any]:
        data: dict[str, Any] = {
            "suite": self.suite,
            "parameters": dict(sorted(self.parameters.items())),
            "results": [result.to_dict() for result in self.results],
            "overall": self.overall,
        }
        if include_elapsed:
            data["elapsed"] = round(self.elapsed, 3)
        return data

    def to_json(self, include_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(include_elapsed), indent=2) + "\n"

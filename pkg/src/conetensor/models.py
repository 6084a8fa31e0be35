from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence


def format_vector(v: Optional[Sequence]) -> Optional[List[str]]:
    """Rational entries as strings ("3", "-1/2"), the form used in every report."""
    if v is None:
        return None
    return [str(x) for x in v]


@dataclass(frozen=True)
class RankOneVerdict:
    """Outcome of a rank-one membership test and the clause that decided it."""

    member: bool
    clause: str
    kind: str

    def to_dict(self) -> Dict[str, Any]:
        return {"member": self.member, "clause": self.clause, "kind": self.kind}


@dataclass
class CheckResult:
    """A single verified statement inside a suite."""

    suite: str
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[List[str]] = None
    data: Dict[str, Any] = field(default_factory=dict)

    def __str__(self):
        mark = "PASS" if self.passed else "FAIL"
        text = f"[{mark}] {self.name}"
        if self.detail:
            text += f": {self.detail}"
        if self.witness is not None:
            text += f" (witness: [{', '.join(self.witness)}])"
        return text

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "witness": self.witness,
            "data": self.data,
        }


@dataclass
class SuiteReport:
    """All checks of one suite, ordered by task index."""

    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed_count(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": self.failed_count,
            "checks": [c.to_dict() for c in self.checks],
        }

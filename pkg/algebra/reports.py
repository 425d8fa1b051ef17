"""
Verification reports: named checks with verdicts and failure witnesses.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from config.constants import VERDICT_FAILS, VERDICT_HOLDS, VERDICT_REPORTED, VERDICT_SKIPPED


@dataclass
class CheckResult:
    """Outcome of one named check."""

    name: str
    verdict: str
    asserted: bool
    value: Optional[bool] = None
    detail: str = ''
    witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'name': self.name,
            'verdict': self.verdict,
            'asserted': self.asserted,
            'value': self.value,
        }
        if self.detail:
            data['detail'] = self.detail
        if self.witness:
            data['witness'] = self.witness
        return data


class VerificationReport:
    """Ordered collection of check results."""

    def __init__(self, title: str):
        self.title = title
        self.checks: List[CheckResult] = []

    def record(self, name: str, holds: bool, asserted: bool = True, detail: str = '',
               witness: Optional[Dict[str, Any]] = None) -> CheckResult:
        """
        Record a computed check.

        Args:
            name: check name, unique within the report
            holds: computed truth value
            asserted: False for checks that are reported but never fail a run
            detail: short human-readable note
            witness: data shown when an asserted check fails

        Returns:
            The stored CheckResult
        """
        if asserted:
            verdict = VERDICT_HOLDS if holds else VERDICT_FAILS
        else:
            verdict = VERDICT_REPORTED
        keep_witness = witness if (not holds or not asserted) else None
        result = CheckResult(name, verdict, asserted, bool(holds), detail, keep_witness)
        self.checks.append(result)
        return result

    def skip(self, name: str, reason: str) -> CheckResult:
        result = CheckResult(name, VERDICT_SKIPPED, False, None, reason)
        self.checks.append(result)
        return result

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        for check in other.checks:
            self.checks.append(CheckResult(f"{other.title}/{check.name}", check.verdict, check.asserted,
                                           check.value, check.detail, check.witness))
        return self

    def get(self, name: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    @property
    def passed(self) -> bool:
        return all(check.verdict != VERDICT_FAILS for check in self.checks)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if check.verdict == VERDICT_FAILS]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'title': self.title,
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
        }

    def summary_lines(self) -> List[str]:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for check in self.checks:
            mark = {VERDICT_HOLDS: '✓', VERDICT_FAILS: '✗', VERDICT_SKIPPED: '-'}.get(check.verdict, '?')
            line = f"  {mark} {check.name}: {check.verdict}"
            if check.verdict == VERDICT_REPORTED:
                line += f" (value={check.value})"
            if check.detail:
                line += f" [{check.detail}]"
            lines.append(line)
            if check.verdict == VERDICT_FAILS and check.witness:
                for key, value in check.witness.items():
                    lines.append(f"      {key}: {value}")
        return lines

    def __str__(self) -> str:
        return "\n".join(self.summary_lines())

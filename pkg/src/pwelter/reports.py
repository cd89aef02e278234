"""Verification report plumbing shared by the sweep commands.

Reports are plain data: a suite name, the parameters of the sweep, how many
cases were checked, and the first counterexample if one was found.  They
serialize to JSON for the CLI and for log archiving.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    suite: str
    params: dict[str, Any] = field(default_factory=dict)
    checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record_failure(self, **detail: Any) -> None:
        self.failures.append(detail)

    def add_note(self, note: str) -> None:
        self.notes.append(note)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures,
            "notes": self.notes,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, default=str, sort_keys=True)

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite} [{params}] checked={self.checked}"
        if not self.passed:
            line += f" first_failure={self.failures[0]}"
        return line

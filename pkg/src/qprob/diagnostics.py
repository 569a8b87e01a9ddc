"""Records for cross-checking closed-form component expressions against oracles."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FormulaCheck:
    """Outcome of validating one named closed-form component against its oracle value."""

    name: str
    closed_form: float
    oracle: float
    tolerance: float

    @property
    def deviation(self) -> float:
        return abs(self.closed_form - self.oracle)

    @property
    def ok(self) -> bool:
        return self.deviation <= self.tolerance

    def describe(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        return f"{self.name}: {status} (closed form {self.closed_form!r}, oracle {self.oracle!r})"


def failed_checks(checks) -> list[FormulaCheck]:
    """The subset of checks whose deviation exceeds their tolerance."""
    return [check for check in checks if not check.ok]

"""Exception types and the structured validation report shared by all modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class MaxArcError(Exception):
    """Base class for errors raised by this package."""


class NotIrreducibleError(MaxArcError, ValueError):
    pass


class ParameterError(MaxArcError, ValueError):
    pass


class ParseError(MaxArcError, ValueError):
    """Malformed input file. ``row`` is the 1-based source line, when known."""

    def __init__(self, message: str, row: int | None = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class ValidationError(MaxArcError, ValueError):
    """A structure failed validation; the full report is attached."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        self.report = report
        if report is not None and report.violations:
            message = f"{message}: {report.summary()}"
        super().__init__(message)


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, **self.detail}

    def __str__(self) -> str:
        extra = ", ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"{self.kind} ({extra})" if extra else self.kind


@dataclass
class ValidationReport:
    """List of violated axioms. An empty report means the structure is valid."""

    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, kind: str, **detail: Any) -> None:
        self.violations.append(Violation(kind, detail))

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def count(self, kind: str) -> int:
        return sum(1 for v in self.violations if v.kind == kind)

    def summary(self, limit: int = 5) -> str:
        if self.valid:
            return f"{self.subject}: valid"
        shown = "; ".join(str(v) for v in self.violations[:limit])
        more = len(self.violations) - limit
        if more > 0:
            shown += f"; ... {more} more"
        return f"{len(self.violations)} violation(s): {shown}"

    def raise_if_invalid(self, message: str | None = None) -> None:
        if not self.valid:
            raise ValidationError(message or f"invalid {self.subject}", self)

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "valid": self.valid,
            "violations": [v.to_dict() for v in self.violations],
        }

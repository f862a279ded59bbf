"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    """One failed law, with enough context to reproduce it.

    ``rule`` is a short tag such as ``"assoc(i)"``, ``"P1"`` or ``"G2"``;
    ``where`` holds the offending elements/points in deterministic order.
    """

    rule: str
    message: str
    where: dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        return f"{self.rule}: {self.message}"


class SgpdError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SgpdError):
    """A structure failed one of its defining axioms."""

    def __init__(self, violations: list[Violation] | Violation | str):
        if isinstance(violations, str):
            violations = [Violation("input", violations)]
        elif isinstance(violations, Violation):
            violations = [violations]
        self.violations: list[Violation] = list(violations)
        first = self.violations[0] if self.violations else "invalid structure"
        extra = len(self.violations) - 1
        msg = str(first) + (f" (+{extra} more)" if extra > 0 else "")
        super().__init__(msg)

    @property
    def first(self) -> Violation:
        return self.violations[0]


class SemigroupoidError(ValidationError):
    pass


class ActionError(ValidationError):
    pass


class MorphismError(ValidationError):
    pass


class InfiniteSemigroupoidError(SgpdError):
    """The Markov transition graph has a cycle, so the word set is infinite."""


class BudgetExceeded(SgpdError):
    pass


class ConsistencyError(AssertionError):
    """An internal cross-check failed.

    These guard facts that hold by theorem; seeing one means a bug here,
    not bad input.
    """


class ParseError(SgpdError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
